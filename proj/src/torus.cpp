#include "torusplit/torus.hpp"

#include <boost/integer/common_factor_rt.hpp>
#include <stdexcept>

namespace torusplit {

ZMat zmat_identity(int n) {
    ZMat m(n, ZVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

ZMat zmat_mul(const ZMat& a, const ZMat& b) {
    int n = static_cast<int>(a.size());
    int k = static_cast<int>(b.size());
    int c = static_cast<int>(b[0].size());
    ZMat out(n, ZVec(c, 0));
    for (int i = 0; i < n; ++i)
        for (int t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (int j = 0; j < c; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

ZMat zmat_sub(const ZMat& a, const ZMat& b) {
    ZMat out = a;
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) out[i][j] -= b[i][j];
    return out;
}

ZMat zmat_from_int(const std::vector<std::vector<int>>& m) {
    ZMat out(m.size(), ZVec(m[0].size()));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < m[i].size(); ++j) out[i][j] = m[i][j];
    return out;
}

ZVec zmat_apply(const ZMat& a, const ZVec& v) {
    ZVec out(a.size(), 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Z zmat_det(ZMat a) {
    // Bareiss fraction-free elimination
    int n = static_cast<int>(a.size());
    Z sign = 1, prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

void snf_full(ZMat& a, ZMat& u, ZMat& v) {
    int n = static_cast<int>(a.size());
    u = zmat_identity(n);
    v = zmat_identity(n);
    auto row_op = [&](int i, int j, const Z& c) {  // row_i -= c * row_j
        for (int t = 0; t < n; ++t) {
            a[i][t] -= c * a[j][t];
            u[i][t] -= c * u[j][t];
        }
    };
    auto col_op = [&](int i, int j, const Z& c) {  // col_i -= c * col_j
        for (int t = 0; t < n; ++t) {
            a[t][i] -= c * a[t][j];
            v[t][i] -= c * v[t][j];
        }
    };
    for (int k = 0; k < n; ++k) {
        while (true) {
            // smallest nonzero |entry| in the trailing block, ties by position
            int pi = -1, pj = -1;
            for (int i = k; i < n; ++i)
                for (int j = k; j < n; ++j)
                    if (a[i][j] != 0 &&
                        (pi < 0 || abs(a[i][j]) < abs(a[pi][pj])))
                        pi = i, pj = j;
            if (pi < 0) return;
            if (pi != k) {
                std::swap(a[k], a[pi]);
                std::swap(u[k], u[pi]);
            }
            if (pj != k)
                for (int t = 0; t < n; ++t) {
                    std::swap(a[t][k], a[t][pj]);
                    std::swap(v[t][k], v[t][pj]);
                }
            bool clean = true;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    row_op(i, k, a[i][k] / a[k][k]);
                    if (a[i][k] != 0) clean = false;
                }
            for (int j = k + 1; j < n; ++j)
                if (a[k][j] != 0) {
                    col_op(j, k, a[k][j] / a[k][k]);
                    if (a[k][j] != 0) clean = false;
                }
            if (!clean) continue;
            // pivot must divide the rest of the block
            bool divides = true;
            for (int i = k + 1; i < n && divides; ++i)
                for (int j = k + 1; j < n && divides; ++j)
                    if (a[i][j] % a[k][k] != 0) {
                        row_op(k, i, Z(-1));
                        divides = false;
                    }
            if (divides) break;
        }
        if (a[k][k] < 0) {
            for (int t = 0; t < n; ++t) {
                a[k][t] = -a[k][t];
                u[k][t] = -u[k][t];
            }
        }
    }
}

}  // namespace

std::vector<Z> smith_invariants(ZMat a) {
    ZMat u, v;
    snf_full(a, u, v);
    std::vector<Z> out;
    for (size_t i = 0; i < a.size(); ++i) out.push_back(a[i][i]);
    return out;
}

bool solve_mod(const ZMat& a, const ZVec& b, const Z& mod, ZVec& out) {
    ZMat d = a, u, v;
    snf_full(d, u, v);
    int n = static_cast<int>(a.size());
    ZVec c = zmat_apply(u, b);
    ZVec y(n, 0);
    for (int i = 0; i < n; ++i) {
        Z di = mod_pos(d[i][i], mod);
        Z ci = mod_pos(c[i], mod);
        Z g = boost::integer::gcd(di, mod);
        if (g == 0) g = mod;  // d_i == 0 mod M
        if (ci % g != 0) return false;
        // solve di * y = ci (mod M) via extended gcd
        Z m2 = mod / g;
        Z inv = 0;
        if (m2 > 1) {
            Z x0 = 0, x1 = 1, r0 = m2, r1 = mod_pos(di / g, m2);
            while (r1 != 0) {
                Z quo = r0 / r1;
                Z tmp = r0 - quo * r1;
                r0 = r1;
                r1 = tmp;
                tmp = x0 - quo * x1;
                x0 = x1;
                x1 = tmp;
            }
            inv = mod_pos(x0, m2);
        }
        y[i] = m2 <= 1 ? Z(0) : mod_pos(ci / g % m2 * inv, m2);
    }
    ZVec x = zmat_apply(v, y);
    out.resize(n);
    for (int i = 0; i < n; ++i) out[i] = mod_pos(x[i], mod);
    return true;
}

std::vector<std::pair<ZVec, Z>> kernel_mod(const ZMat& a, const Z& mod) {
    ZMat d = a, u, v;
    snf_full(d, u, v);
    int n = static_cast<int>(a.size());
    std::vector<std::pair<ZVec, Z>> gens;
    for (int i = 0; i < n; ++i) {
        Z di = mod_pos(d[i][i], mod);
        Z g = boost::integer::gcd(di, mod);
        if (g == 0) g = mod;  // d_i = 0 mod M: the whole coordinate is free
        if (g <= 1) continue;
        ZVec y(n, 0);
        y[i] = mod / g;
        ZVec x = zmat_apply(v, y);
        for (auto& e : x) e = mod_pos(e, mod);
        gens.push_back({x, g});
    }
    return gens;
}

Z mod_pos(const Z& a, const Z& m) {
    Z r = a % m;
    if (r < 0) r += m;
    return r;
}

Z mod_pow(Z base, Z exp, const Z& mod) {
    if (mod == 1) return 0;
    Z out = 1;
    base = mod_pos(base, mod);
    while (exp > 0) {
        if ((exp & 1) != 0) out = out * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return out;
}

Z mult_order(const Z& p, const Z& d) {
    if (d <= 1) return 1;
    if (boost::integer::gcd(mod_pos(p, d), d) != 1)
        throw std::invalid_argument("mult_order: arguments not coprime");
    Z acc = mod_pos(p, d), k = 1;
    while (acc != 1) {
        acc = acc * mod_pos(p, d) % d;
        ++k;
        if (k > 10'000'000) throw std::runtime_error("mult_order: exceeded cap");
    }
    return k;
}

Z FrobConfig::q() const {
    Z out = 1;
    for (int i = 0; i < e; ++i) out *= p;
    return out;
}

ZMat FrobConfig::exponent_matrix() const {
    int l = sys->rank();
    ZMat out(l, ZVec(l, 0));
    if (twist.kind == TwistKind::None) {
        for (int i = 0; i < l; ++i) out[i][i] = q();
    } else if (twist.kind == TwistKind::Triality) {
        for (int i = 0; i < l; ++i) out[twist.simple_image[i] - 1][i] = q();
    } else {
        Z a = 1, b = 1;
        for (int i = 0; i < ree_m; ++i) a *= 3;  // 3^m
        b = a * 3;                               // 3^(m+1)
        out[0][1] = a;
        out[1][0] = b;
    }
    return out;
}

FrobConfig make_frob_split(const RootSystem& sys, const Z& p, int e) {
    FrobConfig cfg;
    cfg.sys = &sys;
    cfg.twist = make_twist(sys, TwistKind::None);
    cfg.p = p;
    cfg.e = e;
    return cfg;
}

FrobConfig make_frob_triality(const RootSystem& sys, const Z& p, int e) {
    FrobConfig cfg;
    cfg.sys = &sys;
    cfg.twist = make_twist(sys, TwistKind::Triality);
    cfg.p = p;
    cfg.e = e;
    return cfg;
}

FrobConfig make_frob_ree(const RootSystem& sys, int m) {
    FrobConfig cfg;
    cfg.sys = &sys;
    cfg.twist = make_twist(sys, TwistKind::Ree);
    cfg.p = 3;
    cfg.e = 2 * m + 1;
    cfg.ree_m = m;
    return cfg;
}

ZMat sigma_n_matrix(const FrobConfig& cfg, const WeylGroup& weyl, int w) {
    ZMat c = zmat_from_int(weyl.coroot_action(w));
    return zmat_mul(c, cfg.exponent_matrix());
}

TorusStructure fixed_structure(const ZMat& a) {
    ZMat b = zmat_sub(a, zmat_identity(static_cast<int>(a.size())));
    auto invs = smith_invariants(b);
    TorusStructure st;
    for (const Z& d : invs) {
        if (d == 0) throw std::logic_error("fixed torus is infinite");
        st.order *= d;
        if (d != 1) st.invariant_factors.push_back(d);
    }
    return st;
}

std::pair<Z, Z> choose_modulus(const Z& p, const TorusStructure& st) {
    Z k = 1;
    for (const Z& d : st.invariant_factors)
        k = boost::integer::lcm(k, mult_order(p, d));
    Z m = 1;
    Z base = p, exp = k;
    while (exp > 0) {
        if ((exp & 1) != 0) m *= base;
        base *= base;
        exp >>= 1;
    }
    return {k, m - 1};
}

bool is_fixed_point(const ZMat& a, const ZVec& t, const Z& mod) {
    ZVec img = zmat_apply(a, t);
    for (size_t i = 0; i < t.size(); ++i)
        if (mod_pos(img[i] - t[i], mod) != 0) return false;
    return true;
}

}  // namespace torusplit
