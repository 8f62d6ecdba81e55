#include "torusplit/spinor.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace torusplit {

FqMat FqMat::identity(const GF& F, int dim) {
    FqMat m;
    m.dim = dim;
    m.a.assign(dim * dim, 0);
    for (int i = 0; i < dim; ++i) m.at(i, i) = F.from_int(1);
    return m;
}

FqMat fq_mul(const GF& F, const FqMat& x, const FqMat& y) {
    assert(x.dim == y.dim);
    FqMat r;
    r.dim = x.dim;
    r.a.assign(x.dim * x.dim, 0);
    for (int i = 0; i < x.dim; ++i)
        for (int k = 0; k < x.dim; ++k) {
            int xe = x.at(i, k);
            if (xe == 0) continue;
            for (int j = 0; j < x.dim; ++j)
                r.at(i, j) = F.add(r.at(i, j), F.mul(xe, y.at(k, j)));
        }
    return r;
}

std::vector<int> fq_apply(const GF& F, const FqMat& g, const std::vector<int>& v) {
    std::vector<int> r(g.dim, 0);
    for (int i = 0; i < g.dim; ++i)
        for (int j = 0; j < g.dim; ++j)
            if (g.at(i, j) != 0 && v[j] != 0) r[i] = F.add(r[i], F.mul(g.at(i, j), v[j]));
    return r;
}

int quad_form(const GF& F, const std::vector<int>& v) {
    int n = (static_cast<int>(v.size()) - 1) / 2;
    int q = F.mul(v[0], v[0]);
    for (int i = 1; i <= n; ++i) q = F.add(q, F.mul(v[i], v[n + i]));
    return q;
}

int bilinear_form(const GF& F, const std::vector<int>& u, const std::vector<int>& v) {
    std::vector<int> s(u.size());
    for (size_t i = 0; i < u.size(); ++i) s[i] = F.add(u[i], v[i]);
    return F.sub(F.sub(quad_form(F, s), quad_form(F, u)), quad_form(F, v));
}

bool is_orthogonal(const GF& F, const FqMat& g) {
    // Q(g e_j) = Q(e_j) and B(g e_i, g e_j) = B(e_i, e_j) for the basis
    int d = g.dim;
    std::vector<std::vector<int>> cols(d);
    for (int j = 0; j < d; ++j) {
        cols[j].resize(d);
        for (int i = 0; i < d; ++i) cols[j][i] = g.at(i, j);
    }
    std::vector<int> ej(d, 0), ei(d, 0);
    for (int j = 0; j < d; ++j) {
        ej.assign(d, 0);
        ej[j] = F.from_int(1);
        if (quad_form(F, cols[j]) != quad_form(F, ej)) return false;
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j) {
            ei.assign(d, 0);
            ej.assign(d, 0);
            ei[i] = F.from_int(1);
            ej[j] = F.from_int(1);
            if (bilinear_form(F, cols[i], cols[j]) != bilinear_form(F, ei, ej)) return false;
        }
    return true;
}

int fq_det(const GF& F, const FqMat& g) {
    FqMat m = g;
    int d = m.dim;
    int det = F.from_int(1);
    for (int c = 0; c < d; ++c) {
        int piv = -1;
        for (int r = c; r < d; ++r)
            if (m.at(r, c) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        if (piv != c) {
            for (int j = 0; j < d; ++j) std::swap(m.at(piv, j), m.at(c, j));
            det = F.neg(det);
        }
        det = F.mul(det, m.at(c, c));
        int inv = F.inv(m.at(c, c));
        for (int r = c + 1; r < d; ++r) {
            int f = F.mul(m.at(r, c), inv);
            if (f == 0) continue;
            for (int j = c; j < d; ++j) m.at(r, j) = F.sub(m.at(r, j), F.mul(f, m.at(c, j)));
        }
    }
    return det;
}

FqMat monomial_matrix(const GF& F, const SignedPerm& phi, const std::vector<int>& scalars,
                      int x_entry) {
    int n = phi.n();
    if (F.mul(x_entry, x_entry) != F.from_int(1))
        throw std::invalid_argument("x_entry must square to 1");
    FqMat g;
    g.dim = 2 * n + 1;
    g.a.assign(g.dim * g.dim, 0);
    g.at(0, 0) = x_entry;
    auto coord = [n](int i) { return i > 0 ? i : n - i; };  // e_i -> i, f_i -> n+i
    for (int i = 1; i <= n; ++i) {
        int j = phi.apply(i);
        g.at(coord(j), coord(i)) = scalars[i - 1];
        g.at(coord(-j), coord(-i)) = F.inv(scalars[i - 1]);
    }
    return g;
}

NormClass spinor_norm(const GF& F, const FqMat& g, int strategy) {
    if (!is_orthogonal(F, g)) throw std::invalid_argument("spinor_norm: not orthogonal");
    int d = g.dim, n = (d - 1) / 2;
    int one = F.from_int(1);

    // anisotropic orthogonal basis: x0, e_i + f_i (Q = 1), e_i - f_i (Q = -1)
    std::vector<std::vector<int>> basis;
    {
        std::vector<int> v(d, 0);
        v[0] = one;
        basis.push_back(v);
        for (int i = 1; i <= n; ++i) {
            std::vector<int> a(d, 0), b(d, 0);
            a[i] = one;
            a[n + i] = one;
            b[i] = one;
            b[n + i] = F.neg(one);
            basis.push_back(a);
            basis.push_back(b);
        }
    }
    if (strategy == 1) std::reverse(basis.begin(), basis.end());

    auto reflect = [&](const std::vector<int>& w) {
        // rho_w(v) = v - B(v,w)/Q(w) w
        FqMat r = FqMat::identity(F, d);
        int qw_inv = F.inv(quad_form(F, w));
        for (int j = 0; j < d; ++j) {
            std::vector<int> ej(d, 0);
            ej[j] = one;
            int c = F.mul(bilinear_form(F, ej, w), qw_inv);
            for (int i = 0; i < d; ++i) r.at(i, j) = F.sub(r.at(i, j), F.mul(c, w[i]));
        }
        return r;
    };

    FqMat cur = g;
    int acc = one;
    for (const auto& u : basis) {
        std::vector<int> gu = fq_apply(F, cur, u);
        std::vector<int> w(d);
        bool zero = true;
        for (int i = 0; i < d; ++i) {
            w[i] = F.sub(gu[i], u[i]);
            if (w[i] != 0) zero = false;
        }
        if (zero) continue;
        int qw = quad_form(F, w);
        if (qw != 0) {
            cur = fq_mul(F, reflect(w), cur);
            acc = F.mul(acc, qw);
        } else {
            std::vector<int> v(d);
            for (int i = 0; i < d; ++i) v[i] = F.add(gu[i], u[i]);
            int qv = quad_form(F, v);  // = 4 Q(u), nonzero since u anisotropic
            assert(qv != 0);
            cur = fq_mul(F, reflect(u), fq_mul(F, reflect(v), cur));
            acc = F.mul(acc, F.mul(qv, quad_form(F, u)));
        }
    }
    if (!(cur == FqMat::identity(F, d)))
        throw std::runtime_error("spinor_norm: factorization did not terminate at identity");
    return F.is_square(acc) ? NormClass::Square : NormClass::NonSquare;
}

}  // namespace torusplit
