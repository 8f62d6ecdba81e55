#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

#include "torusplit/chevtits.hpp"
#include "torusplit/weyl.hpp"

namespace torusplit {

using Z = boost::multiprecision::cpp_int;
using ZMat = std::vector<std::vector<Z>>;
using ZVec = std::vector<Z>;

ZMat zmat_identity(int n);
ZMat zmat_mul(const ZMat& a, const ZMat& b);
ZMat zmat_sub(const ZMat& a, const ZMat& b);
ZMat zmat_from_int(const std::vector<std::vector<int>>& m);
ZVec zmat_apply(const ZMat& a, const ZVec& v);
Z zmat_det(ZMat a);

/// Diagonal of the Smith normal form of a square integer matrix:
/// nonnegative, each dividing the next.  Zero entries (rank deficiency)
/// come last.
std::vector<Z> smith_invariants(ZMat a);

/// Solve A x = b over Z/mod; returns false when inconsistent.
bool solve_mod(const ZMat& a, const ZVec& b, const Z& mod, ZVec& out);

/// Generators (vector, order) of {x : A x = 0 mod M}.
std::vector<std::pair<ZVec, Z>> kernel_mod(const ZMat& a, const Z& mod);

Z mod_pos(const Z& a, const Z& m);
Z mod_pow(Z base, Z exp, const Z& mod);
/// Multiplicative order of p modulo d (d > 0, gcd(p, d) = 1).
Z mult_order(const Z& p, const Z& d);

/// Frobenius data: q = p^e, plus the twist acting on the root system.
struct FrobConfig {
    const RootSystem* sys = nullptr;
    Twist twist;
    Z p = 0;
    int e = 1;           // q = p^e
    int ree_m = 0;       // for 2G2: q = 3^(2m+1)

    Z q() const;
    /// Matrix E of the action on torus exponents: h-coordinates map t to E t.
    ZMat exponent_matrix() const;
};

FrobConfig make_frob_split(const RootSystem& sys, const Z& p, int e);
FrobConfig make_frob_triality(const RootSystem& sys, const Z& p, int e);
FrobConfig make_frob_ree(const RootSystem& sys, int m);

/// Structure of the fixed subgroup of the maximal torus under sigma_n:
/// invariant factors (1s dropped) and the total order.
struct TorusStructure {
    std::vector<Z> invariant_factors;
    Z order = 1;
};

/// A = C(pi(n)) * E: action of sigma_n on torus exponents.
ZMat sigma_n_matrix(const FrobConfig& cfg, const WeylGroup& weyl, int w);

TorusStructure fixed_structure(const ZMat& a);

/// Working modulus M = p^K - 1 with K minimal such that every invariant
/// factor of the fixed torus divides p^K - 1.  Returns {K, M}.
std::pair<Z, Z> choose_modulus(const Z& p, const TorusStructure& st);

/// Does A t = t hold in (Z/M)^l?
bool is_fixed_point(const ZMat& a, const ZVec& t, const Z& mod);

}  // namespace torusplit
