#pragma once

#include "torusplit/gf.hpp"
#include "torusplit/signedperm.hpp"

#include <vector>

namespace torusplit {

/// Matrices act on coordinates (x0, e_1..e_n, f_1..f_n) for the quadratic
/// form Q(v) = x0^2 + sum e_i f_i on a (2n+1)-dimensional space.
struct FqMat {
    int dim = 0;
    std::vector<int> a;  // row-major, GF element codes

    int& at(int r, int c) { return a[r * dim + c]; }
    int at(int r, int c) const { return a[r * dim + c]; }
    static FqMat identity(const GF& F, int dim);
    bool operator==(const FqMat& o) const { return dim == o.dim && a == o.a; }
};

FqMat fq_mul(const GF& F, const FqMat& x, const FqMat& y);
std::vector<int> fq_apply(const GF& F, const FqMat& g, const std::vector<int>& v);

int quad_form(const GF& F, const std::vector<int>& v);
int bilinear_form(const GF& F, const std::vector<int>& u, const std::vector<int>& v);
bool is_orthogonal(const GF& F, const FqMat& g);
int fq_det(const GF& F, const FqMat& g);

/// Monomial orthogonal matrix from a signed permutation: e_i maps to
/// scalars[i-1] * e_{phi(i)} (or f if phi(i) < 0), f_i to the inverse scalar,
/// x0 to x_entry * x0 (x_entry must square to 1).
FqMat monomial_matrix(const GF& F, const SignedPerm& phi, const std::vector<int>& scalars,
                      int x_entry);

enum class NormClass { Square, NonSquare };

/// Spinor norm of g in SO(Q), via an explicit reflection factorization built
/// over an anisotropic orthogonal basis. strategy 0/1 choose ascending or
/// descending basis order (result must not depend on it).
NormClass spinor_norm(const GF& F, const FqMat& g, int strategy = 0);

}  // namespace torusplit
