#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "torusplit/rootsys.hpp"

namespace torusplit {

enum class TwistKind { None, Triality, Ree };

/// Index permutation on roots describing the field/graph twist sigma
/// (acting on the root system; the field part is handled elsewhere).
struct Twist {
    TwistKind kind = TwistKind::None;
    std::vector<int> simple_image;  // 1-based images of simple roots
    std::vector<int> root_image;    // 1-based images of all positive roots

    int apply(int signed_root) const {
        if (kind == TwistKind::None) return signed_root;
        int a = signed_root > 0 ? signed_root : -signed_root;
        int img = root_image[a - 1];
        return signed_root > 0 ? img : -img;
    }
};

Twist make_twist(const RootSystem& sys, TwistKind kind);

/// The Weyl group, stored as permutations of the full set of roots.
/// Elements are identified by dense ids; id 0 is the identity.
class WeylGroup {
public:
    explicit WeylGroup(const RootSystem& sys);

    const RootSystem& system() const { return *sys_; }
    int size() const { return static_cast<int>(perms_.size()); }
    int identity() const { return 0; }
    int simple(int i) const { return simple_[i]; }  // i in [0, rank)

    int mult(int a, int b) const;      // (ab)(r) = a(b(r))
    int inverse(int a) const;
    int act(int w, int signed_root) const;
    int reflection(int signed_root) const;  // w_r as an element id
    int length(int w) const { return static_cast<int>(words_[w].size()); }
    const std::vector<int>& word(int w) const { return words_[w]; }  // 0-based gens
    int order_of(int w) const;
    int longest_element() const;

    /// Image of w under the twist, as an element id.
    int twist_element(const Twist& tw, int w) const;

    /// l x l integer matrix; column i holds coroot_coeffs(w(r_i)).
    std::vector<std::vector<int>> coroot_action(int w) const;

    /// Partition of W into sigma-conjugacy classes {x^-1 w x^sigma};
    /// each class is sorted, classes ordered by smallest member.
    std::vector<std::vector<int>> sigma_classes(const Twist& tw) const;

    /// {x in W : x^-1 w x^sigma = w}.
    std::vector<int> centralizer_sigma(const Twist& tw, int w) const;

private:
    const RootSystem* sys_;
    std::vector<std::vector<int16_t>> perms_;  // flat-index permutations
    std::vector<std::vector<int>> words_;
    std::vector<int> simple_;
    std::map<std::vector<int16_t>, int> id_by_perm_;
    std::vector<std::vector<int>> mult_table_;
    std::vector<int> inv_table_;

    int lookup(const std::vector<int16_t>& p) const;
};

}  // namespace torusplit
