#include "torusplit/obstruction.hpp"

#include "torusplit/gf.hpp"
#include "torusplit/spinor.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusplit {

namespace {

long long ipow(long long b, int e) {
    long long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

std::pair<int, int> factor_prime_power(long long q) {
    for (long long p = 2; p * p <= q; ++p) {
        if (q % p == 0) {
            int k = 0;
            long long m = q;
            while (m % p == 0) {
                m /= p;
                ++k;
            }
            if (m != 1) throw std::invalid_argument("q is not a prime power");
            return {static_cast<int>(p), k};
        }
    }
    return {static_cast<int>(q), 1};
}

}  // namespace

int WinLayout::window_of(int pos) const {
    for (size_t i = 0; i < wins.size(); ++i)
        if (pos >= wins[i].off && pos < wins[i].off + wins[i].len) return static_cast<int>(i);
    throw std::out_of_range("window_of");
}

WinLayout make_layout(long long q, const std::vector<std::pair<int, bool>>& parts) {
    WinLayout L;
    L.q = q;
    int off = 0;
    for (auto& [len, neg] : parts) {
        Window w;
        w.len = len;
        w.neg = neg;
        w.ord = neg ? ipow(q, len) + 1 : ipow(q, len) - 1;
        w.off = off;
        off += len;
        L.wins.push_back(w);
    }
    L.n = off;
    return L;
}

bool WinElem::operator<(const WinElem& o) const {
    if (xsign != o.xsign) return xsign < o.xsign;
    if (!(phi == o.phi)) return phi < o.phi;
    return ex < o.ex;
}

WinElem win_identity(const WinLayout& L) {
    WinElem e;
    e.xsign = 1;
    e.phi = SignedPerm::identity(L.n);
    e.ex.assign(L.n, 0);
    return e;
}

static long long ord_at(const WinLayout& L, int pos) { return L.wins[L.window_of(pos)].ord; }

WinElem win_mul(const WinLayout& L, const WinElem& a, const WinElem& b) {
    // matrix product a b: scalar at source i combines b's scalar with a's
    // scalar at |b.phi(i)|, inverted when b sends i to the f side
    WinElem r;
    r.xsign = a.xsign * b.xsign;
    r.phi = a.phi.compose(b.phi);
    r.ex.resize(L.n);
    for (int i = 1; i <= L.n; ++i) {
        int j = b.phi.apply(i);
        long long ord = ord_at(L, i - 1);
        assert(ord_at(L, std::abs(j) - 1) == ord);
        long long v = b.ex[i - 1] + (j > 0 ? a.ex[j - 1] : -a.ex[-j - 1]);
        r.ex[i - 1] = ((v % ord) + ord) % ord;
    }
    return r;
}

WinElem win_inv(const WinLayout& L, const WinElem& a) {
    WinElem r;
    r.xsign = a.xsign;
    r.phi = a.phi.inverse();
    r.ex.resize(L.n);
    for (int j = 1; j <= L.n; ++j) {
        int k = r.phi.apply(j);  // a.phi^{-1}(j)
        long long ord = ord_at(L, j - 1);
        long long v = (k > 0 ? -a.ex[k - 1] : a.ex[-k - 1]);
        r.ex[j - 1] = ((v % ord) + ord) % ord;
    }
    return r;
}

WinElem perm_lift(const WinLayout& L, const SignedPerm& phi, int xsign) {
    WinElem e;
    e.xsign = xsign;
    e.phi = phi;
    e.ex.assign(L.n, 0);
    for (int i = 1; i <= L.n; ++i)
        if (ord_at(L, std::abs(phi.apply(i)) - 1) != ord_at(L, i - 1))
            throw std::invalid_argument("perm does not preserve window orders");
    return e;
}

WinElem torus_pattern(const WinLayout& L, const std::vector<long long>& e) {
    WinElem t = win_identity(L);
    for (size_t w = 0; w < L.wins.size(); ++w) {
        long long qq = 1;
        for (int j = 0; j < L.wins[w].len; ++j) {
            t.ex[L.wins[w].off + j] = ((e[w] * qq) % L.wins[w].ord + L.wins[w].ord) % L.wins[w].ord;
            qq = (qq * L.q) % L.wins[w].ord;
        }
    }
    return t;
}

std::optional<bool> win_theta_square(const WinLayout& L, const WinElem& g) {
    // factor g = D c with c the plain lift of g.phi; theta(g) =
    // class(det D) theta(c)
    WinElem chat = perm_lift(L, g.phi, g.xsign);
    WinElem d = win_mul(L, g, win_inv(L, chat));
    assert(d.phi == SignedPerm::identity(L.n) && d.xsign == 1);

    long long q = L.q;
    std::map<long long, long long> group_exp;  // ord -> summed exponent
    for (int i = 0; i < L.n; ++i) {
        long long ord = ord_at(L, i);
        group_exp[ord] = (group_exp[ord] + d.ex[i]) % ord;
    }
    bool square = true;
    for (auto& [ord, j] : group_exp) {
        if ((j * (q - 1)) % ord != 0) return std::nullopt;  // value outside Fq*
        if ((j * ((q - 1) / 2)) % ord != 0) square = !square;
    }

    auto [p, k] = factor_prime_power(q);
    GF F(p, k);
    std::vector<int> scal(L.n, F.from_int(1));
    int xe = g.xsign == 1 ? F.from_int(1) : F.from_int(-1);
    FqMat m = monomial_matrix(F, g.phi, scal, xe);
    if (spinor_norm(F, m) == NormClass::NonSquare) square = !square;
    return square;
}

std::optional<LemmaCase> lemma_case_for(const CycleType& ct) {
    CycleType c = ct;
    c.canonicalize();
    std::vector<int> negs, poss;
    for (auto& [len, neg] : c.entries) (neg ? negs : poss).push_back(len);
    int m = static_cast<int>(c.entries.size());
    int k = static_cast<int>(negs.size());
    auto pair_and_even = [](std::vector<int> v, bool pair_odd) {
        // exactly one even and one equal odd pair (in some order)
        if (v.size() != 3) return false;
        std::sort(v.begin(), v.end());
        for (int drop = 0; drop < 3; ++drop) {
            std::vector<int> rest;
            for (int i = 0; i < 3; ++i)
                if (i != drop) rest.push_back(v[i]);
            if (v[drop] % 2 == 0 && rest[0] == rest[1] && rest[0] % 2 == 1) return true;
        }
        (void)pair_odd;
        return false;
    };
    if (m == 2 && k == 1 && negs[0] == poss[0] && negs[0] % 2 == 0) return LemmaCase::M2;
    if (m == 3) {
        if (k == 1 && negs[0] % 2 == 0 && poss.size() == 2 && poss[0] == poss[1] &&
            poss[0] % 2 == 1)
            return LemmaCase::M3;
        if (k == 3 && pair_and_even(negs, true)) return LemmaCase::M3;
    }
    if (m == 4) {
        if (k == 1 && negs[0] % 2 == 0 && pair_and_even(poss, true)) return LemmaCase::M4;
        if (k == 3 && pair_and_even(negs, true) && poss.size() == 1 && poss[0] % 2 == 0)
            return LemmaCase::M4;
    }
    return std::nullopt;
}

namespace {

// windows in lemma order for the given case
std::vector<std::pair<int, bool>> lemma_order_parts(const CycleType& ct, LemmaCase lc) {
    CycleType c = ct;
    c.canonicalize();
    std::vector<std::pair<int, bool>> negs, poss;
    for (auto& e : c.entries) (e.second ? negs : poss).push_back(e);
    auto split_pair_even = [](std::vector<std::pair<int, bool>>& v,
                              std::vector<std::pair<int, bool>>& odds,
                              std::pair<int, bool>& even) {
        for (size_t d = 0; d < v.size(); ++d) {
            std::vector<std::pair<int, bool>> rest;
            for (size_t i = 0; i < v.size(); ++i)
                if (i != d) rest.push_back(v[i]);
            if (v[d].first % 2 == 0 && rest.size() == 2 && rest[0].first == rest[1].first &&
                rest[0].first % 2 == 1) {
                odds = rest;
                even = v[d];
                return;
            }
        }
        throw std::invalid_argument("shape does not match lemma case");
    };
    switch (lc) {
        case LemmaCase::M2:
            return {negs[0], poss[0]};
        case LemmaCase::M3: {
            if (negs.size() == 1) return {poss[0], poss[1], negs[0]};
            std::vector<std::pair<int, bool>> odds;
            std::pair<int, bool> even;
            split_pair_even(negs, odds, even);
            return {odds[0], odds[1], even};
        }
        case LemmaCase::M4: {
            std::vector<std::pair<int, bool>> odds;
            std::pair<int, bool> even;
            if (negs.size() == 1) {
                split_pair_even(poss, odds, even);
                return {negs[0], odds[0], odds[1], even};
            }
            split_pair_even(negs, odds, even);
            return {even, odds[0], odds[1], poss[0]};
        }
    }
    throw std::logic_error("unreachable");
}

int perm_order(const SignedPerm& p) {
    SignedPerm c = p;
    SignedPerm id = SignedPerm::identity(p.n());
    int k = 1;
    while (!(c == id)) {
        c = c.compose(p);
        ++k;
        if (k > 4 * p.n() * p.n() + 8) throw std::logic_error("perm_order runaway");
    }
    return k;
}

struct SearchCtx {
    const WinLayout* L;
    bool minus_allowed;
    size_t cap;
};

bool residue_ok(const SearchCtx& cx, const WinElem& g) {
    if (!(g.phi == SignedPerm::identity(cx.L->n))) return true;
    if (g.xsign != 1) return false;
    bool all_zero = true, all_half = true;
    for (int i = 0; i < cx.L->n; ++i) {
        long long ord = cx.L->wins[cx.L->window_of(i)].ord;
        if (g.ex[i] != 0) all_zero = false;
        if (ord % 2 != 0 || g.ex[i] != ord / 2) all_half = false;
    }
    if (all_zero) return true;
    return all_half && cx.minus_allowed;
}

bool closure_consistent(const SearchCtx& cx, const std::vector<WinElem>& gens) {
    std::set<WinElem> seen;
    std::vector<WinElem> queue{win_identity(*cx.L)};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            WinElem nx = win_mul(*cx.L, g, queue[head]);
            if (!seen.insert(nx).second) continue;
            if (!residue_ok(cx, nx)) return false;
            if (seen.size() > cx.cap) return false;
            queue.push_back(nx);
        }
    }
    return true;
}

}  // namespace

ObstructionResult obstruction_check(const CycleType& ct, long long q, LemmaCase lc) {
    auto detected = lemma_case_for(ct);
    if (!detected || *detected != lc)
        throw std::invalid_argument("cycle type does not match the requested lemma case");
    if (q % 2 == 0) throw std::invalid_argument("q must be odd");
    factor_prime_power(q);  // validates q
    ObstructionResult res;
    if (q % 4 == 1) {
        res.obstructed = false;
        res.detail = "q = 1 (mod 4): no obstruction";
        return res;
    }

    auto parts = lemma_order_parts(ct, lc);
    WinLayout L = make_layout(q, parts);
    CycleType ctl;
    ctl.entries = parts;  // lemma order, deliberately not canonicalized

    std::vector<SignedPerm> designated;
    switch (lc) {
        case LemmaCase::M4:
            designated = {make_chi(ctl, 1), make_tau(ctl, 0), make_tau(ctl, 3)};
            break;
        case LemmaCase::M3:
            designated = {make_chi(ctl, 0), make_varpi(ctl, 2).compose(make_tau(ctl, 0))};
            break;
        case LemmaCase::M2:
            designated = {make_omega(ctl, 1), make_tau(ctl, 0), make_tau(ctl, 1)};
            break;
    }

    size_t image_order = group_closure(designated, L.n).size();
    SearchCtx cx{&L, L.n % 2 == 0, 2 * image_order};

    long long cand_space = 1;
    for (auto& w : L.wins) {
        cand_space *= w.ord;
        if (cand_space > 2'000'000) throw std::invalid_argument("parameter space too large");
    }

    // unary-filtered candidate lists
    std::vector<std::vector<WinElem>> cands(designated.size());
    for (size_t gi = 0; gi < designated.size(); ++gi) {
        WinElem chat = perm_lift(L, designated[gi]);
        int po = perm_order(designated[gi]);
        std::vector<long long> e(L.wins.size(), 0);
        for (long long idx = 0; idx < cand_space; ++idx) {
            long long t = idx;
            for (size_t w = 0; w < L.wins.size(); ++w) {
                e[w] = t % L.wins[w].ord;
                t /= L.wins[w].ord;
            }
            WinElem g = win_mul(L, torus_pattern(L, e), chat);
            auto theta = win_theta_square(L, g);
            if (theta && !*theta) continue;  // not in the kernel of the spinor norm
            WinElem pw = win_identity(L);
            for (int r = 0; r < po; ++r) pw = win_mul(L, g, pw);
            if (!residue_ok(cx, pw)) continue;
            cands[gi].push_back(g);
        }
    }

    // joint search with closure pruning
    std::vector<WinElem> chosen;
    long long checked = 0;
    std::string witness;
    std::function<bool(size_t)> dfs = [&](size_t gi) -> bool {
        if (gi == cands.size()) {
            ++checked;
            return true;
        }
        for (const auto& g : cands[gi]) {
            chosen.push_back(g);
            bool ok = closure_consistent(cx, chosen);
            if (ok && dfs(gi + 1)) {
                if (witness.empty()) {
                    std::ostringstream os;
                    os << "consistent lift tuple exists (exponents:";
                    for (const auto& c : chosen) {
                        os << " [";
                        for (int i = 0; i < L.n; ++i) os << (i ? "," : "") << c.ex[i];
                        os << "]";
                    }
                    os << ")";
                    witness = os.str();
                }
                chosen.pop_back();
                return true;
            }
            chosen.pop_back();
        }
        return false;
    };
    bool found = dfs(0);
    res.obstructed = !found;
    res.tuples_checked = checked;
    res.detail = found ? witness : "no consistent lift tuple";
    return res;
}

}  // namespace torusplit
