#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace torusplit {

enum class RootSystemType { G2, D4 };

RootSystemType parse_root_system_type(const std::string& label);
std::string to_string(RootSystemType t);

/// A single root: 1-based index (negative index for negative roots),
/// integer coefficients over the fundamental roots, and a length class.
struct Root {
    int index = 0;
    std::vector<int> coeffs;
    bool is_long = false;
};

/// Root systems of types G2 and D4 with a fixed numbering of the positive
/// roots.  Roots are addressed by signed index: +i and -i for i = 1..N.
class RootSystem {
public:
    static RootSystem build(RootSystemType type);

    RootSystemType type() const { return type_; }
    int rank() const { return rank_; }
    int num_positive() const { return static_cast<int>(positive_.size()); }
    int num_roots() const { return 2 * num_positive(); }

    const Root& root(int signed_index) const;
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }

    /// Signed index of the root with the given coefficient vector, 0 if absent.
    int find(const std::vector<int>& coeffs) const;

    /// <r, s_check> = 2(r,s)/(s,s) for signed indices r, s.
    int pairing(int r, int s) const;

    /// (r,r)/2 with short-root normalization (r,r) = 2.
    int half_norm(int r) const;

    /// w_s(r) = r - <r, s_check> s as a signed index.
    int reflect(int s, int r) const;

    /// Coefficients c with r_check = sum c_i r_i_check.
    std::vector<int> coroot_coeffs(int r) const;

    bool has_symmetry() const { return !symmetry_.empty(); }
    /// Image of a root under the diagram symmetry rho (D4 triality).
    int apply_symmetry(int r) const;

    /// Height of a root (sum of coefficients; negative for negative roots).
    int height(int r) const;

    /// Flat storage index in [0, 2N): positives first, then negatives.
    int flat(int signed_index) const;
    int unflat(int flat_index) const;

private:
    RootSystemType type_;
    int rank_ = 0;
    std::vector<Root> positive_;
    std::vector<std::vector<int>> cartan_;   // cartan_[i][j] = <r_i, r_j_check>
    std::vector<int> half_norms_;            // (r_i, r_i)/2 per simple root
    std::vector<int> symmetry_;              // images of simple roots under rho
    std::map<std::vector<int>, int> index_by_coeffs_;

    int inner_twice(const std::vector<int>& a, const std::vector<int>& b) const;
};

}  // namespace torusplit
