#include "doctest.h"

#include "torusplit/gf.hpp"
#include "torusplit/obstruction.hpp"
#include "torusplit/signedperm.hpp"
#include "torusplit/spinor.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

using namespace torusplit;

namespace {

std::vector<CycleType> all_cycle_types(int n) {
    std::set<std::vector<std::pair<int, bool>>> seen;
    std::vector<CycleType> out;
    for (const auto& g : all_signed_perms(n)) {
        CycleType ct = cycle_type(g);
        if (seen.insert(ct.entries).second) out.push_back(ct);
    }
    return out;
}

FqMat random_special_monomial(const GF& F, int n, std::mt19937_64& rng) {
    SignedPerm phi = random_signed_perm(n, rng);
    std::vector<int> scalars(n);
    for (int i = 0; i < n; i++)
        scalars[i] = F.pow(F.generator(), static_cast<long long>(rng() % (F.q() - 1)));
    FqMat g = monomial_matrix(F, phi, scalars, 1);
    if (fq_det(F, g) != F.from_int(1)) g = monomial_matrix(F, phi, scalars, F.neg(F.from_int(1)));
    REQUIRE(fq_det(F, g) == F.from_int(1));
    return g;
}

}  // namespace

TEST_CASE("cycle type round-trips through the standard element") {
    for (int n = 1; n <= 5; n++) {
        for (const auto& ct : all_cycle_types(n)) {
            SignedPerm g = standard_element(ct);
            CHECK(cycle_type(g) == ct);
            CHECK(ct.n() == n);
        }
    }
}

TEST_CASE("cycle type string and canonical order") {
    std::mt19937_64 rng(7);
    SignedPerm g = random_signed_perm(6, rng);
    CycleType ct = cycle_type(g);
    for (size_t i = 0; i + 1 < ct.entries.size(); i++) {
        // negatives first, then weakly increasing length within each part
        if (ct.entries[i].second == ct.entries[i + 1].second)
            CHECK(ct.entries[i].first <= ct.entries[i + 1].first);
        else
            CHECK(ct.entries[i].second);
    }
    CycleType ex;
    ex.entries = {{1, false}, {2, true}, {1, false}};
    ex.canonicalize();
    CHECK(ex.str() == "(2-)(1)(1)");
}

TEST_CASE("is_even counts negative cycles") {
    for (const auto& g : all_signed_perms(4)) {
        CycleType ct = cycle_type(g);
        CHECK(g.is_even() == (ct.negative_count() % 2 == 0));
    }
}

TEST_CASE("compose and inverse agree with pointwise application") {
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 50; rep++) {
        SignedPerm a = random_signed_perm(5, rng);
        SignedPerm b = random_signed_perm(5, rng);
        SignedPerm c = a.compose(b);
        for (int i = 1; i <= 5; i++) CHECK(c.apply(i) == a.apply(b.apply(i)));
        CHECK(a.compose(a.inverse()) == SignedPerm::identity(5));
    }
}

TEST_CASE("centralizer generators and order formula vs brute force") {
    for (int n = 1; n <= 5; n++) {
        auto all = all_signed_perms(n);
        for (const auto& ct : all_cycle_types(n)) {
            SignedPerm s = standard_element(ct);
            long long brute = 0;
            for (const auto& g : all)
                if (g.compose(s) == s.compose(g)) brute++;
            CHECK(brute == centralizer_order_formula(ct));
            auto gens = centralizer_generators(ct);
            auto closure = group_closure(gens, n);
            CHECK(static_cast<long long>(closure.size()) == brute);
            for (const auto& g : closure) CHECK(g.compose(s) == s.compose(g));
        }
    }
}

TEST_CASE("window elements act as described") {
    CycleType ct;
    ct.entries = {{2, true}, {1, false}, {1, false}, {2, false}};
    SignedPerm s = standard_element(ct);
    for (int i = 1; i < 4; i++) {
        SignedPerm om = make_omega(ct, i);
        SignedPerm ta = make_tau(ct, i);
        CHECK(om.compose(s) == s.compose(om));
        CHECK(ta.compose(s) == s.compose(ta));
    }
    SignedPerm vp = make_varpi(ct, 0);
    CHECK(vp.compose(s) == s.compose(vp));
    // varpi on a window of length l has order 2l; omega has order l
    CycleType vt = cycle_type(vp);
    bool has4 = false;
    for (auto& e : vt.entries) has4 |= (e.first == 4 || (e.first == 2 && e.second));
    CHECK(has4);
    SignedPerm ch = make_chi(ct, 1);  // swaps the two length-1 windows
    CHECK(ch.compose(s) == s.compose(ch));
    CHECK(ch.compose(ch) == SignedPerm::identity(6));
}

TEST_CASE("cycle type is a conjugacy invariant") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 100; rep++) {
        int n = 4 + static_cast<int>(rng() % 3);
        SignedPerm g = random_signed_perm(n, rng);
        SignedPerm h = random_signed_perm(n, rng);
        SignedPerm conj = g.compose(h).compose(g.inverse());
        CHECK(cycle_type(conj) == cycle_type(h));
    }
}

TEST_CASE("spinor norm: known values") {
    GF F(3, 1);
    // diag torus over GF(9): theta(diag(1, l, l^-1)) = class of l
    GF F9(3, 2);
    int lam = F9.generator();
    FqMat t = FqMat::identity(F9, 3);
    t.at(1, 1) = lam;
    t.at(2, 2) = F9.inv(lam);
    CHECK(spinor_norm(F9, t) == NormClass::NonSquare);
    t.at(1, 1) = F9.mul(lam, lam);
    t.at(2, 2) = F9.inv(t.at(1, 1));
    CHECK(spinor_norm(F9, t) == NormClass::Square);
    // swap e1<->f1 with x0 -> -x0: product of reflections along e1-f1 and x0
    SignedPerm tau;
    tau.img = {-1};
    FqMat g = monomial_matrix(F, tau, {F.from_int(1)}, F.neg(F.from_int(1)));
    CHECK(fq_det(F, g) == F.from_int(1));
    CHECK(spinor_norm(F, g) == NormClass::NonSquare);
    CHECK(spinor_norm(F, FqMat::identity(F, 3)) == NormClass::Square);
}

TEST_CASE("spinor norm: strategy independence and multiplicativity") {
    for (int k : {1, 2}) {
        GF F(3, k);
        std::mt19937_64 rng(99 + k);
        for (int rep = 0; rep < 100; rep++) {
            FqMat g = random_special_monomial(F, 3, rng);
            FqMat h = random_special_monomial(F, 3, rng);
            CHECK(is_orthogonal(F, g));
            NormClass ng = spinor_norm(F, g, 0);
            CHECK(ng == spinor_norm(F, g, 1));
            NormClass nh = spinor_norm(F, h);
            NormClass np = spinor_norm(F, fq_mul(F, g, h));
            CHECK((np == NormClass::Square) == ((ng == NormClass::Square) == (nh == NormClass::Square)));
        }
    }
}

TEST_CASE("windowed monomial arithmetic matches matrices over GF(9)") {
    // shape (1-)(1) at q = 3: window orders 4 and 2, both divide 9 - 1
    GF F(3, 2);
    WinLayout L = make_layout(3, {{1, true}, {1, false}});
    auto to_mat = [&](const WinElem& a) {
        std::vector<int> scalars(L.n);
        for (int i = 0; i < L.n; i++) {
            long long ord = L.wins[L.window_of(i)].ord;
            int zeta = F.pow(F.generator(), (F.q() - 1) / ord);
            scalars[i] = F.pow(zeta, ((a.ex[i] % ord) + ord) % ord);
        }
        return monomial_matrix(F, a.phi, scalars, a.xsign == 1 ? F.from_int(1) : F.neg(F.from_int(1)));
    };
    std::mt19937_64 rng(5);
    auto random_elem = [&]() {
        WinElem a = win_identity(L);
        a.xsign = (rng() % 2) ? 1 : -1;
        if (rng() % 2) {
            SignedPerm p = SignedPerm::identity(L.n);
            p.img[0] = (rng() % 2) ? 1 : -1;
            p.img[1] = (rng() % 2) ? 2 : -2;
            a = perm_lift(L, p, a.xsign);
        }
        for (int i = 0; i < L.n; i++) a.ex[i] = static_cast<long long>(rng() % L.wins[L.window_of(i)].ord);
        return a;
    };
    for (int rep = 0; rep < 200; rep++) {
        WinElem a = random_elem();
        WinElem b = random_elem();
        CHECK(to_mat(win_mul(L, a, b)) == fq_mul(F, to_mat(a), to_mat(b)));
        CHECK(fq_mul(F, to_mat(win_inv(L, a)), to_mat(a)) == FqMat::identity(F, 2 * L.n + 1));
    }
}

TEST_CASE("windowed inverse is a two-sided inverse") {
    WinLayout L = make_layout(3, {{2, true}, {1, false}, {1, false}, {2, false}});
    std::mt19937_64 rng(17);
    CycleType ct;
    ct.entries = {{2, true}, {1, false}, {1, false}, {2, false}};
    std::vector<SignedPerm> perms = {SignedPerm::identity(6), make_tau(ct, 0), make_chi(ct, 1),
                                     make_omega(ct, 3)};
    for (int rep = 0; rep < 100; rep++) {
        WinElem a = perm_lift(L, perms[rng() % perms.size()], (rng() % 2) ? 1 : -1);
        for (int i = 0; i < L.n; i++) a.ex[i] = static_cast<long long>(rng() % L.wins[L.window_of(i)].ord);
        CHECK(win_mul(L, a, win_inv(L, a)) == win_identity(L));
        CHECK(win_mul(L, win_inv(L, a), a) == win_identity(L));
    }
}

TEST_CASE("windowed multiplication is associative") {
    WinLayout L = make_layout(3, {{1, true}, {1, true}, {2, true}});
    CycleType ct;
    ct.entries = {{1, true}, {1, true}, {2, true}};
    std::mt19937_64 rng(23);
    std::vector<SignedPerm> perms = {SignedPerm::identity(4), make_chi(ct, 0), make_varpi(ct, 2),
                                     make_tau(ct, 1)};
    auto rnd = [&]() {
        WinElem a = perm_lift(L, perms[rng() % perms.size()], (rng() % 2) ? 1 : -1);
        for (int i = 0; i < L.n; i++) a.ex[i] = static_cast<long long>(rng() % L.wins[L.window_of(i)].ord);
        return a;
    };
    for (int rep = 0; rep < 100; rep++) {
        WinElem a = rnd(), b = rnd(), c = rnd();
        CHECK(win_mul(L, win_mul(L, a, b), c) == win_mul(L, a, win_mul(L, b, c)));
    }
}

TEST_CASE("lemma case shapes") {
    auto shape = [](std::vector<std::pair<int, bool>> e) {
        CycleType ct;
        ct.entries = std::move(e);
        ct.canonicalize();
        return ct;
    };
    CHECK(lemma_case_for(shape({{2, true}, {1, false}, {1, false}, {2, false}})) == LemmaCase::M4);
    CHECK(lemma_case_for(shape({{2, true}, {1, false}, {1, false}})) == LemmaCase::M3);
    CHECK(lemma_case_for(shape({{1, true}, {1, true}, {2, true}})) == LemmaCase::M3);
    CHECK(lemma_case_for(shape({{2, true}, {2, false}})) == LemmaCase::M2);
    CHECK(!lemma_case_for(shape({{1, false}, {3, true}})).has_value());
}

TEST_CASE("obstruction search confirms the lemma cases at q = 3") {
    auto shape = [](std::vector<std::pair<int, bool>> e) {
        CycleType ct;
        ct.entries = std::move(e);
        ct.canonicalize();
        return ct;
    };
    CycleType m3a = shape({{2, true}, {1, false}, {1, false}});
    ObstructionResult r = obstruction_check(m3a, 3, LemmaCase::M3);
    CHECK(r.obstructed);

    CycleType m3b = shape({{1, true}, {1, true}, {2, true}});
    CHECK(obstruction_check(m3b, 3, LemmaCase::M3).obstructed);

    CycleType m2 = shape({{2, true}, {2, false}});
    CHECK(obstruction_check(m2, 3, LemmaCase::M2).obstructed);

    CycleType m4 = shape({{2, true}, {1, false}, {1, false}, {2, false}});
    CHECK(obstruction_check(m4, 3, LemmaCase::M4).obstructed);
}

TEST_CASE("no obstruction for q = 1 mod 4") {
    CycleType ct;
    ct.entries = {{2, true}, {1, false}, {1, false}};
    ct.canonicalize();
    CHECK(!obstruction_check(ct, 5, LemmaCase::M3).obstructed);
}
