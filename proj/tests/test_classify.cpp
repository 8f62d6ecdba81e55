#include "doctest.h"

#include "torusplit/classify.hpp"
#include "torusplit/obstruction.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace torusplit;

namespace {

CycleType shape(std::vector<std::pair<int, bool>> e) {
    CycleType ct;
    ct.entries = std::move(e);
    ct.canonicalize();
    return ct;
}

std::vector<CycleType> types_with_odd_k(int n) {
    // all signed partitions of n with an odd number of negative parts
    std::vector<CycleType> out;
    std::vector<std::pair<int, bool>> cur;
    auto rec = [&](auto&& self, int rem, int maxp) -> void {
        if (rem == 0) {
            CycleType ct;
            ct.entries = cur;
            ct.canonicalize();
            if (ct.negative_count() % 2 == 1) out.push_back(ct);
            return;
        }
        for (int p = std::min(rem, maxp); p >= 1; p--) {
            for (bool neg : {false, true}) {
                cur.push_back({p, neg});
                self(self, rem - p, p);
                cur.pop_back();
            }
        }
    };
    rec(rec, n, n);
    std::set<std::vector<std::pair<int, bool>>> seen;
    std::vector<CycleType> uniq;
    for (auto& ct : out)
        if (seen.insert(ct.entries).second) uniq.push_back(ct);
    return uniq;
}

}  // namespace

TEST_CASE("special linear and unitary tori") {
    // q even: always splits
    CHECK(split_su(4, 4, Eps::Plus, {2, 2}).outcome == Outcome::Splits);
    CHECK(split_su(5, 8, Eps::Minus, {3, 1, 1}).outcome == Outcome::Splits);
    // q odd: splits iff some a_i = n_i b_i is odd
    CHECK(split_su(4, 3, Eps::Plus, {3, 1}).outcome == Outcome::Splits);
    CHECK(split_su(4, 3, Eps::Minus, {2, 2}).outcome == Outcome::NotSplits);
    CHECK(split_su(4, 5, Eps::Plus, {2, 1, 1}).outcome == Outcome::NotSplits);  // a = 2 both
    CHECK(split_su(6, 7, Eps::Minus, {3, 3}).outcome == Outcome::NotSplits);    // a_1 = 6
    CHECK(split_su(6, 7, Eps::Minus, {3, 2, 1}).outcome == Outcome::Splits);
}

TEST_CASE("projective unitary tori: selected clauses") {
    // q even clause
    CHECK(split_psu(3, 4, Eps::Minus, {2, 1}).outcome == Outcome::Splits);
    // n odd, q odd, all parts odd with odd multiplicity data
    SplitVerdict v = split_psu(3, 3, Eps::Minus, {1, 1, 1});
    CHECK(v.outcome != Outcome::ResolvedElsewhere);
    // consistency with the SL-level criterion: an SL split forces a PSL split
    for (long long q : {3, 5, 7, 9}) {
        for (Eps e : {Eps::Plus, Eps::Minus}) {
            std::vector<std::vector<int>> parts = {{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}};
            for (const auto& p : parts) {
                if (split_su(4, q, e, p).outcome == Outcome::Splits)
                    CHECK(split_psu(4, q, e, p).outcome == Outcome::Splits);
            }
        }
    }
}

TEST_CASE("q-even monotonicity for the classical criteria") {
    std::vector<std::vector<int>> parts = {{5}, {4, 1}, {3, 2}, {3, 1, 1}, {2, 2, 1}, {1, 1, 1, 1, 1}};
    for (const auto& p : parts) {
        CHECK(split_su(5, 4, Eps::Minus, p).outcome == Outcome::Splits);
        CHECK(split_psu(5, 4, Eps::Minus, p).outcome == Outcome::Splits);
    }
}

TEST_CASE("P-Omega-minus: q = 1 mod 4 always splits") {
    for (int n : {4, 5}) {
        for (const auto& ct : types_with_odd_k(n)) {
            CHECK(split_omega_minus(n, 5, ct).outcome == Outcome::Splits);
            CHECK(split_omega_minus(n, 13, ct).outcome == Outcome::Splits);
        }
    }
}

TEST_CASE("P-Omega-minus: census of non-split types at n = 4, q = 3") {
    std::set<std::string> not_splits;
    for (const auto& ct : types_with_odd_k(4)) {
        if (split_omega_minus(4, 3, ct).outcome == Outcome::NotSplits) not_splits.insert(ct.str());
    }
    std::set<std::string> expected = {"(2-)(1)(1)", "(1-)(1-)(2-)", "(2-)(2)"};
    CHECK(not_splits == expected);
}

TEST_CASE("P-Omega-minus rejects even negative-cycle counts") {
    CHECK_THROWS_AS(split_omega_minus(4, 3, shape({{2, true}, {2, true}})), std::invalid_argument);
}

TEST_CASE("classifier agrees with the obstruction search on lemma shapes") {
    for (int n : {4, 5}) {
        for (long long q : {3, 5}) {
            for (const auto& ct : types_with_odd_k(n)) {
                auto lc = lemma_case_for(ct);
                if (!lc) continue;
                SplitVerdict v = split_omega_minus(n, q, ct);
                ObstructionResult r = obstruction_check(ct, q, *lc);
                if (v.outcome == Outcome::NotSplits) CHECK(r.obstructed);
                if (q % 4 == 1) CHECK(!r.obstructed);
            }
        }
    }
}

TEST_CASE("exceptional families split with recipe witnesses") {
    SplitVerdict v = split_exceptional("G2", 3, 7);
    CHECK(v.outcome == Outcome::Splits);
    CHECK(v.witness == "<h1n2, h1n4>");
    CHECK(split_exceptional("2G2", 2, 27).outcome == Outcome::Splits);
    CHECK(split_exceptional("3D4", 6, 5).outcome == Outcome::Splits);
    CHECK(split_exceptional("2B2", 1, 8).outcome == Outcome::Splits);
    CHECK_THROWS(split_exceptional("2B2", 1, 9));  // wrong characteristic
}

TEST_CASE("dispatch and JSON output") {
    TorusSpec spec;
    spec.family = "2D";
    spec.n = 4;
    spec.q = 3;
    spec.torus = shape({{2, true}, {1, false}, {1, false}});
    SplitVerdict v = classify(spec);
    CHECK(v.outcome == Outcome::NotSplits);
    std::string js = verdict_json(spec, v);
    CHECK(js.find("\"not_splits\"") != std::string::npos);
    CHECK(js.find("\"2D\"") != std::string::npos);

    TorusSpec other;
    other.family = "E8";
    other.q = 5;
    CHECK(classify(other).outcome == Outcome::ResolvedElsewhere);
    TorusSpec bad;
    bad.family = "X9";
    CHECK_THROWS_AS(classify(bad), std::invalid_argument);
}
