#include "torusplit/chevtits.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace torusplit {

IntMat imat_identity(int n) {
    IntMat m(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMat imat_mul(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    IntMat c(n, std::vector<long long>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            long long v = a[i][k];
            if (v == 0) continue;
            for (int j = 0; j < n; ++j) c[i][j] += v * b[k][j];
        }
    return c;
}

bool imat_eq(const IntMat& a, const IntMat& b) { return a == b; }

ChevalleySystem::ChevalleySystem(const RootSystem& sys) : sys_(&sys) {
    dim_ = sys.rank() + sys.num_roots();
    int m = sys.num_roots();
    adj_n_.resize(m);
    for (int f = 0; f < m; ++f) {
        int r = sys.unflat(f);
        IntMat x1 = adjoint_x(r, 1);
        IntMat y = adjoint_x(-r, -1);
        adj_n_[f] = imat_mul(imat_mul(x1, y), x1);
    }
    int l = sys.rank();
    eta_.assign(l, std::vector<int>(m, 0));
    for (int s = 0; s < l; ++s) {
        // n_s^-1 = n_s h_s(-1)
        IntMat ninv = imat_mul(adj_n_[s], adjoint_h(s + 1));
        for (int f = 0; f < m; ++f) {
            int r = sys.unflat(f);
            int img = sys.reflect(s + 1, r);
            IntMat lhs = imat_mul(imat_mul(adj_n_[s], adj_n_[f]), ninv);
            if (imat_eq(lhs, adj_n_[sys.flat(img)])) {
                eta_[s][f] = 1;
            } else if (imat_eq(lhs, imat_mul(adjoint_h(img), adj_n_[sys.flat(img)]))) {
                eta_[s][f] = -1;
            } else {
                throw std::logic_error("eta extraction failed");
            }
        }
    }
}

int ChevalleySystem::pair_p(int r, int s) const {
    int p = 0;
    const Root& rr = sys_->root(r);
    const Root& ss = sys_->root(s);
    int sr = r > 0 ? 1 : -1, sss = s > 0 ? 1 : -1;
    std::vector<int> cur(sys_->rank());
    for (int i = 0; i < sys_->rank(); ++i) cur[i] = sss * ss.coeffs[i];
    while (true) {
        for (int i = 0; i < sys_->rank(); ++i) cur[i] -= sr * rr.coeffs[i];
        if (sys_->find(cur) == 0) break;
        ++p;
    }
    return p;
}

int ChevalleySystem::structure_N(int r, int s) const {
    std::vector<int> sum(sys_->rank());
    const Root& rr = sys_->root(r);
    const Root& ss = sys_->root(s);
    int sr = r > 0 ? 1 : -1, sss = s > 0 ? 1 : -1;
    for (int i = 0; i < sys_->rank(); ++i)
        sum[i] = sr * rr.coeffs[i] + sss * ss.coeffs[i];
    if (sys_->find(sum) == 0) return 0;
    auto key = std::make_pair(r, s);
    auto it = n_memo_.find(key);
    if (it != n_memo_.end()) return it->second;
    int v = resolve_N(r, s);
    n_memo_[key] = v;
    return v;
}

namespace {
int add_roots(const RootSystem& sys, int r, int s) {
    std::vector<int> sum(sys.rank());
    const Root& rr = sys.root(r);
    const Root& ss = sys.root(s);
    int sr = r > 0 ? 1 : -1, sss = s > 0 ? 1 : -1;
    for (int i = 0; i < sys.rank(); ++i)
        sum[i] = sr * rr.coeffs[i] + sss * ss.coeffs[i];
    return sys.find(sum);  // 0 when not a root
}

int exact_div(long long num, long long den, const char* what) {
    if (den == 0 || num % den != 0) throw std::logic_error(what);
    return static_cast<int>(num / den);
}
}  // namespace

int ChevalleySystem::resolve_N(int r, int s) const {
    const RootSystem& sys = *sys_;
    if (r < 0 && s < 0) return -structure_N(-r, -s);
    if (r < 0 && s > 0) return -structure_N(s, r);
    if (r > 0 && s < 0) {
        int c = add_roots(sys, r, s);
        // N(r,s) = -N(-r,-s) = N(-s,-r)
        if (c < 0) return structure_N(-s, -r);
        // triple (r, s, -c): N_{r,s}/(c,c) = N_{s,-c}/(r,r); here s<0, -c<0
        long long cc = 2 * sys.half_norm(c);
        long long rrn = 2 * sys.half_norm(r);
        return exact_div(cc * -structure_N(-s, c), rrn, "mixed-pair reduction not integral");
    }
    // both positive
    int t = add_roots(sys, r, s);
    // extraspecial pair of t: least u (index order) with u < v, u + v = t
    int u = 0, v = 0;
    for (int cand = 1; cand <= sys.num_positive(); ++cand) {
        std::vector<int> rest(sys.rank());
        for (int i = 0; i < sys.rank(); ++i)
            rest[i] = sys.root(t).coeffs[i] - sys.root(cand).coeffs[i];
        int other = sys.find(rest);
        if (other > cand) {
            u = cand;
            v = other;
            break;
        }
    }
    if (u == 0) throw std::logic_error("no extraspecial pair");
    if (r == u && s == v) return pair_p(r, s) + 1;
    if (r == v && s == u) return -structure_N(u, v);
    // quadruple identity on (u, v, -r, -s)
    long long tt = 2 * sys.half_norm(t);
    long long acc_num = 0, acc_den = 1;
    auto term = [&](int a, int b, int c, int d) {
        int ab = add_roots(sys, a, b);
        int cd = add_roots(sys, c, d);
        if (ab == 0 || cd == 0) return;
        long long num = static_cast<long long>(structure_N(a, b)) * structure_N(c, d);
        long long den = 2 * sys.half_norm(ab);
        acc_num = acc_num * den + num * acc_den;
        acc_den *= den;
    };
    term(v, -r, u, -s);
    term(-r, u, v, -s);
    long long nuv = structure_N(u, v);
    return exact_div(tt * acc_num, acc_den * nuv, "quadruple identity not integral");
}

IntMat ChevalleySystem::ad_matrix(int r) const {
    const RootSystem& sys = *sys_;
    int l = sys.rank();
    IntMat m(dim_, std::vector<long long>(dim_, 0));
    int row_er = l + sys.flat(r);
    for (int j = 0; j < l; ++j)
        m[row_er][j] = -sys.pairing(r, j + 1);
    auto hr = sys.coroot_coeffs(r);
    int col_neg = l + sys.flat(-r);
    for (int i = 0; i < l; ++i) m[i][col_neg] = hr[i];
    for (int f = 0; f < sys.num_roots(); ++f) {
        int s = sys.unflat(f);
        if (s == r || s == -r) continue;
        int sum = add_roots(sys, r, s);
        if (sum == 0) continue;
        m[l + sys.flat(sum)][l + f] = structure_N(r, s);
    }
    return m;
}

IntMat ChevalleySystem::adjoint_x(int r, long long t) const {
    IntMat ad = ad_matrix(r);
    IntMat out = imat_identity(dim_);
    IntMat pw = imat_identity(dim_);
    long long tk = 1;
    for (int k = 1; k <= 8; ++k) {
        pw = imat_mul(pw, ad);
        bool zero = true;
        for (auto& row : pw)
            for (auto& v : row) {
                if (v % k != 0) throw std::logic_error("divided power not integral");
                v /= k;
                if (v != 0) zero = false;
            }
        if (zero) return out;
        tk *= t;
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) out[i][j] += tk * pw[i][j];
    }
    throw std::logic_error("ad_e not nilpotent");
}

IntMat ChevalleySystem::adjoint_h(int r) const {
    IntMat m = imat_identity(dim_);
    int l = sys_->rank();
    for (int f = 0; f < sys_->num_roots(); ++f) {
        int s = sys_->unflat(f);
        if (sys_->pairing(s, r) % 2 != 0) m[l + f][l + f] = -1;
    }
    return m;
}

const IntMat& ChevalleySystem::adjoint_n(int r) const {
    return adj_n_[sys_->flat(r)];
}

int ChevalleySystem::eta(int simple_s, int r) const {
    return eta_[simple_s - 1][sys_->flat(r)];
}

std::string ChevalleySystem::dump_tables() const {
    std::ostringstream os;
    os << "system " << to_string(sys_->type()) << "\n";
    os << "N:\n";
    int n = sys_->num_positive();
    for (int r = -n; r <= n; ++r) {
        if (r == 0) continue;
        for (int s = -n; s <= n; ++s) {
            if (s == 0 || add_roots(*sys_, r, s) == 0 || s == -r) continue;
            os << "  N(" << r << "," << s << ") = " << structure_N(r, s) << "\n";
        }
    }
    os << "eta:\n";
    for (int s = 1; s <= sys_->rank(); ++s)
        for (int r = -n; r <= n; ++r) {
            if (r == 0) continue;
            os << "  eta(" << s << "," << r << ") = " << eta(s, r) << "\n";
        }
    return os.str();
}

TitsGroup::TitsGroup(const WeylGroup& weyl, const ChevalleySystem& chev)
    : weyl_(&weyl), chev_(&chev) {
    const RootSystem& sys = weyl.system();
    int m = sys.num_roots();
    coroot2_.resize(m);
    for (int f = 0; f < m; ++f) {
        auto cc = sys.coroot_coeffs(sys.unflat(f));
        uint32_t bits = 0;
        for (size_t i = 0; i < cc.size(); ++i)
            if (cc[i] % 2 != 0) bits |= 1u << i;
        coroot2_[f] = bits;
    }
    int npos = sys.num_positive();
    lifts_.resize(npos);
    std::vector<int> order(npos);
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return sys.height(a) < sys.height(b);
    });
    for (int r : order) {
        if (r <= sys.rank()) {
            lifts_[r - 1] = TitsElement{0, weyl.simple(r - 1)};
            continue;
        }
        int s = 0;
        for (int i = 1; i <= sys.rank(); ++i)
            if (sys.pairing(r, i) > 0) {
                s = i;
                break;
            }
        if (s == 0) throw std::logic_error("no descent for positive root");
        int rp = sys.reflect(s, r);
        TitsElement ns{0, weyl.simple(s - 1)};
        TitsElement e = mult(mult(ns, lifts_[rp - 1]), inv(ns));
        if (chev.eta(s, rp) == -1) e = mult(e, h_elem(r));
        lifts_[r - 1] = e;
    }
}

uint32_t TitsGroup::coroot2(int r) const {
    return coroot2_[weyl_->system().flat(r)];
}

uint32_t TitsGroup::conj_h(int w, uint32_t h) const {
    uint32_t out = 0;
    int l = weyl_->system().rank();
    for (int i = 0; i < l; ++i)
        if (h & (1u << i)) out ^= coroot2(weyl_->act(w, i + 1));
    return out;
}

TitsElement TitsGroup::gen(int i) const { return {0, weyl_->simple(i)}; }

TitsElement TitsGroup::h_elem(int r) const { return {coroot2(r), weyl_->identity()}; }

TitsElement TitsGroup::lift(int r) const {
    if (r <= 0) throw std::invalid_argument("lift expects a positive root index");
    return lifts_[r - 1];
}

TitsElement TitsGroup::mult_gen(const TitsElement& a, int i) const {
    int img = weyl_->act(a.w, i + 1);
    TitsElement out;
    out.w = weyl_->mult(a.w, weyl_->simple(i));
    out.h = img > 0 ? a.h : (a.h ^ coroot2(img));
    return out;
}

TitsElement TitsGroup::mult(const TitsElement& a, const TitsElement& b) const {
    TitsElement out{static_cast<uint32_t>(a.h ^ conj_h(a.w, b.h)), a.w};
    for (int i : weyl_->word(b.w)) out = mult_gen(out, i);
    return out;
}

TitsElement TitsGroup::inv(const TitsElement& a) const {
    TitsElement winv{0, weyl_->inverse(a.w)};
    TitsElement c = mult(a, winv);
    if (c.w != weyl_->identity()) throw std::logic_error("inverse bookkeeping");
    return {conj_h(winv.w, c.h), winv.w};
}

TitsElement TitsGroup::pow(const TitsElement& a, int e) const {
    TitsElement base = e < 0 ? inv(a) : a;
    int n = e < 0 ? -e : e;
    TitsElement out = one();
    for (int i = 0; i < n; ++i) out = mult(out, base);
    return out;
}

TitsElement TitsGroup::twist_lift(const Twist& tw, int w) const {
    if (tw.kind == TwistKind::None) return {0, w};
    TitsElement out = one();
    for (int i : weyl_->word(w)) out = mult(out, gen(tw.simple_image[i] - 1));
    return out;
}

std::vector<TitsElement> TitsGroup::closure(const std::vector<TitsElement>& gens,
                                            size_t cap) const {
    std::set<TitsElement> seen;
    std::vector<TitsElement> queue{one()};
    seen.insert(one());
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            TitsElement nxt = mult(queue[head], g);
            if (seen.insert(nxt).second) {
                if (seen.size() > cap) throw std::runtime_error("closure cap exceeded");
                queue.push_back(nxt);
            }
        }
    }
    return queue;
}

IntMat TitsGroup::to_matrix(const TitsElement& a) const {
    IntMat m = imat_identity(chev_->dim());
    int l = weyl_->system().rank();
    for (int i = 0; i < l; ++i)
        if (a.h & (1u << i)) m = imat_mul(m, chev_->adjoint_h(i + 1));
    for (int i : weyl_->word(a.w)) m = imat_mul(m, chev_->adjoint_n(i + 1));
    return m;
}

}  // namespace torusplit
