#include "doctest.h"

#include "torusplit/chevtits.hpp"
#include "torusplit/rootsys.hpp"
#include "torusplit/weyl.hpp"

#include <map>
#include <set>
#include <vector>

using namespace torusplit;

namespace {

struct Setup {
    RootSystem sys;
    WeylGroup weyl;
    ChevalleySystem chev;
    explicit Setup(RootSystemType t) : sys(RootSystem::build(t)), weyl(sys), chev(sys) {}
};

IntMat commutator(const IntMat& a, const IntMat& b) {
    int n = static_cast<int>(a.size());
    IntMat ab = imat_mul(a, b), ba = imat_mul(b, a);
    IntMat r(n, std::vector<long long>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) r[i][j] = ab[i][j] - ba[i][j];
    return r;
}

// ad(e_r) as a matrix on the adjoint module, recovered from x_r(t):
// ad matrices of the basis vectors e_r satisfy x_r(t) = exp(t ad e_r),
// so ad e_r = d/dt x_r(t) at t = 0 = (x_r(1) - x_r(-1)) / 2 ... not exact;
// instead interpolate from t = 1, 2: x(t) = I + t A + t^2 A^2/2 + t^3 A^3/6.
IntMat ad_e(const ChevalleySystem& chev, int r) {
    int n = chev.dim();
    IntMat x1 = chev.adjoint_x(r, 1);
    IntMat x2 = chev.adjoint_x(r, 2);
    // A = (8 (x1 - I) - (x2 - I)) / 6 + A^3 * 0 ... valid since (ad e_r)^4 = 0
    // for G2/D4 adjoint? For G2 (ad e_r)^4 != 0 on the 3-string through r.
    // Use four points instead: finite differences kill all powers >= 4.
    IntMat x3 = chev.adjoint_x(r, 3);
    IntMat x4 = chev.adjoint_x(r, 4);
    IntMat a(n, std::vector<long long>(n));
    for (int i = 0; i < n; i++)
        for (int j = 0; j < n; j++) {
            long long e1 = x1[i][j] - (i == j);
            long long e2 = x2[i][j] - (i == j);
            long long e3 = x3[i][j] - (i == j);
            long long e4 = x4[i][j] - (i == j);
            // inverse Vandermonde row for the linear coefficient on {1,2,3,4}
            long long num = 48 * e1 - 36 * e2 + 16 * e3 - 3 * e4;
            REQUIRE(num % 12 == 0);
            a[i][j] = num / 12;
        }
    return a;
}

}  // namespace

TEST_CASE("structure constant table identities") {
    for (RootSystemType t : {RootSystemType::G2, RootSystemType::D4}) {
        Setup s(t);
        int N = s.sys.num_positive();
        int p = (t == RootSystemType::G2) ? 3 : 1;  // max bond multiplicity
        for (int r = -N; r <= N; r++) {
            if (r == 0) continue;
            for (int ss = -N; ss <= N; ss++) {
                if (ss == 0 || ss == r || ss == -r) continue;
                int n_rs = s.chev.structure_N(r, ss);
                int sum = s.sys.find([&] {
                    std::vector<int> c(s.sys.rank());
                    for (int i = 0; i < s.sys.rank(); i++)
                        c[i] = (r > 0 ? 1 : -1) * s.sys.root(r).coeffs[i] +
                               (ss > 0 ? 1 : -1) * s.sys.root(ss).coeffs[i];
                    return c;
                }());
                if (sum == 0) {
                    CHECK(n_rs == 0);
                    continue;
                }
                CHECK(n_rs != 0);
                CHECK(std::abs(n_rs) <= p + 1);
                // antisymmetry and the negation rule
                CHECK(s.chev.structure_N(ss, r) == -n_rs);
                CHECK(s.chev.structure_N(-r, -ss) == -n_rs);
                // |N| = p + 1 where p = pair_p(r, s)
                CHECK(std::abs(n_rs) == s.chev.pair_p(r, ss) + 1);
            }
        }
    }
}

TEST_CASE("adjoint dimension") {
    Setup g2(RootSystemType::G2);
    CHECK(g2.chev.dim() == 14);
    Setup d4(RootSystemType::D4);
    CHECK(d4.chev.dim() == 28);
}

TEST_CASE("ad matrices represent the bracket (Jacobi oracle)") {
    for (RootSystemType t : {RootSystemType::G2, RootSystemType::D4}) {
        Setup s(t);
        int N = s.sys.num_positive();
        std::map<int, IntMat> ad;
        for (int r = -N; r <= N; r++)
            if (r != 0) ad[r] = ad_e(s.chev, r);
        // [ad e_r, ad e_s] = ad [e_r, e_s]; for r + s a root the right side
        // is N_{r,s} ad e_{r+s}, and for s = -r it is ad h_r which commutes
        // with each ad e_u as [h_r, e_u] = <u, r*> e_u.
        for (int r = -N; r <= N; r++) {
            if (r == 0) continue;
            for (int ss = -N; ss <= N; ss++) {
                if (ss == 0) continue;
                IntMat c = commutator(ad[r], ad[ss]);
                if (ss == r) {
                    for (auto& row : c)
                        for (long long v : row) CHECK(v == 0);
                    continue;
                }
                if (ss == -r) {
                    // [e_r, e_-r] = h lands in the Cartan; verify via its
                    // action: [[e_r,e_-r], e_u] = <u, r*> (e_r,e_-r)-scaled.
                    for (int u = -N; u <= N; u++) {
                        if (u == 0) continue;
                        IntMat c2 = commutator(c, ad[u]);
                        IntMat want = ad[u];
                        int k = s.sys.pairing(u, r);
                        bool okmat = true;
                        for (int i = 0; i < s.chev.dim() && okmat; i++)
                            for (int j = 0; j < s.chev.dim(); j++)
                                if (c2[i][j] != static_cast<long long>(k) * want[i][j]) {
                                    okmat = false;
                                    break;
                                }
                        CHECK(okmat);
                    }
                    continue;
                }
                std::vector<int> sumc(s.sys.rank());
                for (int i = 0; i < s.sys.rank(); i++)
                    sumc[i] = (r > 0 ? 1 : -1) * s.sys.root(r).coeffs[i] +
                              (ss > 0 ? 1 : -1) * s.sys.root(ss).coeffs[i];
                int sum = s.sys.find(sumc);
                IntMat want(s.chev.dim(), std::vector<long long>(s.chev.dim(), 0));
                if (sum != 0) {
                    long long n_rs = s.chev.structure_N(r, ss);
                    for (int i = 0; i < s.chev.dim(); i++)
                        for (int j = 0; j < s.chev.dim(); j++) want[i][j] = n_rs * ad[sum][i][j];
                }
                CHECK(c == want);
            }
        }
    }
}

TEST_CASE("eta matches the adjoint matrices") {
    for (RootSystemType t : {RootSystemType::G2, RootSystemType::D4}) {
        Setup s(t);
        int N = s.sys.num_positive();
        for (int i = 1; i <= s.sys.rank(); i++) {
            IntMat ns = s.chev.adjoint_n(i);
            IntMat ns_inv = imat_mul(ns, s.chev.adjoint_h(i));  // n^-1 = n h(-1)
            CHECK(imat_eq(imat_mul(ns, ns_inv), imat_identity(s.chev.dim())));
            for (int r = 1; r <= N; r++) {
                int wr = s.sys.reflect(i, r);
                IntMat lhs = imat_mul(imat_mul(ns, s.chev.adjoint_n(r)), ns_inv);
                IntMat rhs = s.chev.adjoint_n(wr);
                if (s.chev.eta(i, r) == 1) {
                    CHECK(imat_eq(lhs, rhs));
                } else {
                    IntMat rhs2 = imat_mul(s.chev.adjoint_h(wr), rhs);
                    CHECK(imat_eq(lhs, rhs2));
                }
            }
        }
    }
}

TEST_CASE("Tits group closure orders and relations") {
    Setup g2(RootSystemType::G2);
    TitsGroup tg(g2.weyl, g2.chev);
    std::vector<TitsElement> gens;
    for (int i = 0; i < 2; i++) gens.push_back(tg.gen(i));
    CHECK(tg.closure(gens, 100).size() == 48);
    Setup d4(RootSystemType::D4);
    TitsGroup td(d4.weyl, d4.chev);
    std::vector<TitsElement> gd;
    for (int i = 0; i < 4; i++) gd.push_back(td.gen(i));
    CHECK(td.closure(gd, 4000).size() == 3072);
}

TEST_CASE("Tits arithmetic agrees with the adjoint representation") {
    for (RootSystemType t : {RootSystemType::G2, RootSystemType::D4}) {
        Setup s(t);
        TitsGroup tg(s.weyl, s.chev);
        int N = s.sys.num_positive();
        // n_r^2 = h_r(-1) for every positive root
        for (int r = 1; r <= N; r++) {
            TitsElement n = tg.lift(r);
            CHECK(tg.mult(n, n) == tg.h_elem(r));
            CHECK(imat_eq(tg.to_matrix(n), s.chev.adjoint_n(r)));
            CHECK(tg.mult(n, tg.inv(n)) == tg.one());
        }
        // multiplication matches matrices on a sample
        std::vector<TitsElement> sample = {tg.one(), tg.gen(0), tg.gen(s.sys.rank() - 1),
                                           tg.h_elem(1), tg.lift(N)};
        for (const auto& a : sample)
            for (const auto& b : sample)
                CHECK(imat_eq(tg.to_matrix(tg.mult(a, b)),
                              imat_mul(tg.to_matrix(a), tg.to_matrix(b))));
    }
}

TEST_CASE("braid relations in the Tits group") {
    for (RootSystemType t : {RootSystemType::G2, RootSystemType::D4}) {
        Setup s(t);
        TitsGroup tg(s.weyl, s.chev);
        for (int i = 0; i < s.sys.rank(); i++) {
            for (int j = i + 1; j < s.sys.rank(); j++) {
                int m = s.weyl.order_of(s.weyl.mult(s.weyl.simple(i), s.weyl.simple(j)));
                TitsElement a = tg.one(), b = tg.one();
                for (int k = 0; k < m; k++) {
                    a = tg.mult(a, tg.gen(k % 2 == 0 ? i : j));
                    b = tg.mult(b, tg.gen(k % 2 == 0 ? j : i));
                }
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("twisted lifts stay in the Tits group") {
    Setup d4(RootSystemType::D4);
    TitsGroup td(d4.weyl, d4.chev);
    Twist tri = make_twist(d4.sys, TwistKind::Triality);
    for (int w : {0, 1, 7, 40, 100, 191}) {
        TitsElement a = td.twist_lift(tri, w);
        CHECK(a.w == d4.weyl.twist_element(tri, w));
        // the three-fold twist returns to w on the Weyl level
        CHECK(d4.weyl.twist_element(tri, d4.weyl.twist_element(tri, a.w)) == w);
    }
}

TEST_CASE("dump_tables is deterministic and nonempty") {
    Setup g2(RootSystemType::G2);
    std::string d1 = g2.chev.dump_tables();
    Setup g2b(RootSystemType::G2);
    CHECK(d1 == g2b.chev.dump_tables());
    CHECK(d1.find("N(") != std::string::npos);
}
