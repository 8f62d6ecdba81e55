#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "torusplit/weyl.hpp"

namespace torusplit {

using IntMat = std::vector<std::vector<long long>>;

IntMat imat_mul(const IntMat& a, const IntMat& b);
IntMat imat_identity(int n);
bool imat_eq(const IntMat& a, const IntMat& b);

/// Chevalley basis data for the adjoint Lie algebra: structure constants
/// N_{r,s}, the adjoint matrices of the standard generators x_r(t), n_r,
/// h_r(-1), and the signs eta_{s,r} with n_s n_r n_s^{-1} = n_{w_s(r)}(eta).
class ChevalleySystem {
public:
    explicit ChevalleySystem(const RootSystem& sys);

    const RootSystem& system() const { return *sys_; }
    int dim() const { return dim_; }

    /// N_{r,s} for signed root indices; 0 when r+s is not a root.
    int structure_N(int r, int s) const;

    /// Largest p with s - p r a root (both signed indices).
    int pair_p(int r, int s) const;

    /// eta_{s,r} = +-1 for a simple reflection index s in [1, rank] and any
    /// signed root r.
    int eta(int simple_s, int r) const;

    const IntMat& adjoint_n(int r) const;        // n_r, signed index
    IntMat adjoint_x(int r, long long t) const;  // x_r(t)
    IntMat adjoint_h(int r) const;               // h_r(-1)

    /// Deterministic text dump of the N and eta tables.
    std::string dump_tables() const;

private:
    const RootSystem* sys_;
    int dim_ = 0;
    mutable std::map<std::pair<int, int>, int> n_memo_;
    std::vector<IntMat> adj_n_;                  // by flat index
    std::vector<std::vector<int>> eta_;          // [simple][flat root]

    int resolve_N(int r, int s) const;
    IntMat ad_matrix(int r) const;
};

/// Element of the Tits group: a sign vector h in (Z/2)^l over the
/// h_{r_i}(-1) and a Weyl element carried by its canonical lift n_w.
struct TitsElement {
    uint32_t h = 0;
    int w = 0;
    bool operator==(const TitsElement& o) const { return h == o.h && w == o.w; }
    bool operator<(const TitsElement& o) const {
        return h != o.h ? h < o.h : w < o.w;
    }
};

/// Exact arithmetic in the extension 2^l . W inside the Chevalley group,
/// using canonical reduced words; no matrices at runtime.
class TitsGroup {
public:
    TitsGroup(const WeylGroup& weyl, const ChevalleySystem& chev);

    const WeylGroup& weyl() const { return *weyl_; }
    const ChevalleySystem& chevalley() const { return *chev_; }

    TitsElement one() const { return {}; }
    TitsElement gen(int i) const;          // n_{r_{i+1}}, i in [0, rank)
    TitsElement h_elem(int r) const;       // h_r(-1), signed root index
    TitsElement lift(int r) const;         // canonical n_r, positive index

    TitsElement mult(const TitsElement& a, const TitsElement& b) const;
    TitsElement inv(const TitsElement& a) const;
    TitsElement pow(const TitsElement& a, int e) const;

    /// h bits conjugated by w: h' with n_w H(h) n_w^-1 = H(h').
    uint32_t conj_h(int w, uint32_t h) const;

    /// Coroot coefficients of root r reduced mod 2, as a bit mask.
    uint32_t coroot2(int r) const;

    /// Image of the canonical lift n_w under the twist, remultiplied in the
    /// Tits group (field exponents act trivially on h_r(-1) and n_r).
    TitsElement twist_lift(const Twist& tw, int w) const;

    /// Closure of a generating set; throws if it exceeds cap.
    std::vector<TitsElement> closure(const std::vector<TitsElement>& gens,
                                     size_t cap) const;

    /// Adjoint matrix of an element (oracle hook for tests).
    IntMat to_matrix(const TitsElement& a) const;

private:
    const WeylGroup* weyl_;
    const ChevalleySystem* chev_;
    std::vector<uint32_t> coroot2_;        // by flat index
    std::vector<TitsElement> lifts_;       // canonical n_r by positive index - 1

    TitsElement mult_gen(const TitsElement& a, int i) const;
};

}  // namespace torusplit
