#include "torusplit/classify.hpp"

#include "torusplit/normlift.hpp"

#include "json.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace torusplit {

std::string to_string(Outcome o) {
    switch (o) {
        case Outcome::Splits: return "splits";
        case Outcome::NotSplits: return "not_splits";
        case Outcome::ResolvedElsewhere: return "resolved_elsewhere";
    }
    return "?";
}

namespace {

long long val2(long long n) {  // largest power of two dividing n, as a value
    long long v = 1;
    while (n % 2 == 0) {
        n /= 2;
        v *= 2;
    }
    return v;
}

void check_partition(int n, const std::vector<int>& parts) {
    if (parts.empty()) throw std::invalid_argument("empty partition");
    long long s = 0;
    for (int p : parts) {
        if (p <= 0) throw std::invalid_argument("partition parts must be positive");
        s += p;
    }
    if (s != n) throw std::invalid_argument("partition does not sum to n");
}

bool some_a_odd(const std::vector<int>& parts) {
    for (int ni : parts) {
        int b = static_cast<int>(std::count(parts.begin(), parts.end(), ni));
        if ((static_cast<long long>(ni) * b) % 2 == 1) return true;
    }
    return false;
}

long long eps_q_minus_1(long long q, Eps eps) { return eps == Eps::Plus ? q - 1 : q + 1; }

}  // namespace

SplitVerdict split_su(int n, long long q, Eps eps, const std::vector<int>& partition) {
    check_partition(n, partition);
    (void)eps;
    if (q % 2 == 0) return {Outcome::Splits, "su(q-even)", ""};
    if (some_a_odd(partition)) return {Outcome::Splits, "su(odd-a)", ""};
    return {Outcome::NotSplits, "su(none)", ""};
}

SplitVerdict split_psu(int n, long long q, Eps eps, const std::vector<int>& partition) {
    check_partition(n, partition);
    std::vector<int> p = partition;
    std::sort(p.begin(), p.end());
    int m = static_cast<int>(p.size());
    long long eq1 = eps_q_minus_1(q, eps);

    if (q % 2 == 0) return {Outcome::Splits, "psu(1)", ""};
    if (some_a_odd(p)) return {Outcome::Splits, "psu(2)", ""};
    if (val2(n) < val2(eq1)) return {Outcome::Splits, "psu(3)", ""};
    if (m == 4 && std::all_of(p.begin(), p.end(), [](int x) { return x % 2 == 1; }))
        return {Outcome::Splits, "psu(4)", ""};
    if (m == 3) {
        // labeling n1 = n2 odd, n3 even
        for (int e = 0; e < 3; ++e) {
            std::vector<int> rest;
            for (int i = 0; i < 3; ++i)
                if (i != e) rest.push_back(p[i]);
            if (p[e] % 2 == 0 && rest[0] == rest[1] && rest[0] % 2 == 1) {
                long long n3 = p[e];
                if (val2(n3) > 2 && val2(n) <= val2(eq1)) return {Outcome::Splits, "psu(5)", ""};
                if (val2(n3) == 2 && val2(n) != val2(eq1)) return {Outcome::Splits, "psu(6)", ""};
                break;
            }
        }
    }
    if (m == 2) {
        long long n1 = p[0], n2 = p[1];
        if (n1 % 2 == 1 && n2 % 2 == 1) return {Outcome::Splits, "psu(7)", ""};
        if (n1 % 2 == 0 && n2 % 2 == 0) {
            if (n1 != n2) {
                long long d = std::min({val2(n1 / 2), val2(n2 / 2), val2(eq1)});
                if (val2(n) < d * val2(eq1)) return {Outcome::Splits, "psu(8)", ""};
                if (val2(n1) == val2(n2) && val2(n1) <= val2(eq1) &&
                    val2(eq1) * val2(n1) <= val2(n))
                    return {Outcome::Splits, "psu(9)", ""};
            } else {
                if (val2(n1) > 2 && val2(n) <= val2(eq1)) return {Outcome::Splits, "psu(10)", ""};
                if (val2(n1) == 2 && val2(n) != val2(eq1)) return {Outcome::Splits, "psu(11)", ""};
            }
        }
    }
    if (m == 1) return {Outcome::Splits, "psu(12)", ""};
    return {Outcome::NotSplits, "psu(none)", ""};
}

SplitVerdict split_omega_minus(int n, long long q, const CycleType& ct) {
    if (n < 4) throw std::invalid_argument("omega-minus requires n >= 4");
    if (ct.n() != n) throw std::invalid_argument("cycle type does not sum to n");
    std::vector<int> negs, poss;
    for (auto& [len, neg] : ct.entries) (neg ? negs : poss).push_back(len);
    if (negs.size() % 2 == 0)
        throw std::invalid_argument("negative-cycle count must be odd for this family");

    if (q % 4 != 3) return {Outcome::Splits, "omega-minus(1)", ""};
    if (some_a_odd(negs) || some_a_odd(poss)) return {Outcome::Splits, "omega-minus(2)", ""};
    if (poss.empty() && std::all_of(negs.begin(), negs.end(), [](int x) { return x % 2 == 0; }))
        return {Outcome::Splits, "omega-minus(3)", ""};
    return {Outcome::NotSplits, "omega-minus(none)", ""};
}

SplitVerdict split_exceptional(const std::string& family, int class_id, long long q) {
    static const std::set<std::string> char2 = {"2F4", "2B2"};
    if (char2.count(family)) {
        if (q < 2 || (q & (q - 1)) != 0)
            throw std::invalid_argument(family + " requires q a power of 2");
        return {Outcome::Splits, "exceptional(char-2)", "even characteristic"};
    }
    Family f = parse_family(family);  // throws on unknown
    if (class_id < 1 || class_id > num_classes(f))
        throw std::invalid_argument("invalid class id for family");
    const Recipe& r = recipe_for(f, class_id);
    std::ostringstream w;
    w << "<";
    for (size_t i = 0; i < r.gens.size(); ++i) {
        if (i) w << ", ";
        for (const auto& atom : r.gens[i].second) w << atom;
    }
    w << ">";
    return {Outcome::Splits, "exceptional(recipe)", w.str()};
}

SplitVerdict classify(const TorusSpec& spec) {
    const std::string& f = spec.family;
    if (f == "G2" || f == "2G2" || f == "3D4" || f == "2F4" || f == "2B2")
        return split_exceptional(f, spec.class_id, spec.q);
    auto partition_of = [&]() {
        std::vector<int> parts;
        for (auto& [len, neg] : spec.torus.entries) {
            if (neg) throw std::invalid_argument("negative cycles invalid for family " + f);
            parts.push_back(len);
        }
        return parts;
    };
    if (f == "A" || f == "2A")
        return split_su(spec.n, spec.q, f == "A" ? Eps::Plus : Eps::Minus, partition_of());
    if (f == "PSL" || f == "PSU")
        return split_psu(spec.n, spec.q, f == "PSL" ? Eps::Plus : Eps::Minus, partition_of());
    if (f == "2D") return split_omega_minus(spec.n, spec.q, spec.torus);
    static const std::set<std::string> elsewhere = {"B", "C", "D", "E6", "E7", "E8", "F4", "2E6"};
    if (elsewhere.count(f))
        return {Outcome::ResolvedElsewhere, "resolved-elsewhere", "see prior literature"};
    throw std::invalid_argument("unknown family: " + f);
}

std::string verdict_json(const TorusSpec& spec, const SplitVerdict& v) {
    nlohmann::json j;
    j["family"] = spec.family;
    j["n"] = spec.n;
    j["q"] = spec.q;
    j["epsilon"] = spec.eps == Eps::Plus ? "+" : "-";
    if (!spec.torus.entries.empty())
        j["torus"] = spec.torus.str();
    else
        j["torus"] = "class " + std::to_string(spec.class_id);
    j["outcome"] = to_string(v.outcome);
    j["criterion"] = v.criterion;
    j["witness_ref"] = v.witness;
    return j.dump();
}

}  // namespace torusplit
