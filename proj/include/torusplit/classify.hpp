#pragma once

#include "torusplit/signedperm.hpp"

#include <string>
#include <vector>

namespace torusplit {

enum class Eps { Plus, Minus };
enum class Outcome { Splits, NotSplits, ResolvedElsewhere };

std::string to_string(Outcome o);

struct TorusSpec {
    std::string family;  // G2, 2G2, 3D4, 2F4, 2B2, A, 2A, PSL, PSU, 2D, ...
    int n = 0;
    long long q = 0;
    Eps eps = Eps::Plus;
    CycleType torus;  // classical families
    int class_id = 0;  // exceptional families
};

struct SplitVerdict {
    Outcome outcome = Outcome::ResolvedElsewhere;
    std::string criterion;
    std::string witness;
};

/// Special linear / unitary group SL_n^eps(q), torus given by a partition.
SplitVerdict split_su(int n, long long q, Eps eps, const std::vector<int>& partition);

/// Simple group PSL_n^eps(q); twelve-clause criterion, first match reported.
SplitVerdict split_psu(int n, long long q, Eps eps, const std::vector<int>& partition);

/// P-Omega-minus_{2n}(q); ct must have an odd number of negative cycles.
SplitVerdict split_omega_minus(int n, long long q, const CycleType& ct);

/// Exceptional/twisted families that always split; the witness cites the
/// complement recipe generators for G2 / 2G2 / 3D4.
SplitVerdict split_exceptional(const std::string& family, int class_id, long long q);

SplitVerdict classify(const TorusSpec& spec);

std::string verdict_json(const TorusSpec& spec, const SplitVerdict& v);

}  // namespace torusplit
