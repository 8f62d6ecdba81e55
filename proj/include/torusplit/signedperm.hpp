#pragma once

#include <random>
#include <string>
#include <vector>

namespace torusplit {

/// Element of Sl_n: permutation phi of {+-1..+-n} with phi(-i) = -phi(i),
/// stored as images of 1..n.
struct SignedPerm {
    std::vector<int> img;

    static SignedPerm identity(int n);
    int n() const { return static_cast<int>(img.size()); }
    int apply(int i) const;
    SignedPerm compose(const SignedPerm& other) const;  // this after other
    SignedPerm inverse() const;
    bool operator==(const SignedPerm& o) const { return img == o.img; }
    bool operator<(const SignedPerm& o) const { return img < o.img; }
    /// Number of negative cycles even (membership in Sl_n^+).
    bool is_even() const;
};

struct CycleType {
    // (length, negative) entries, canonical order: negative cycles first,
    // each block sorted by length
    std::vector<std::pair<int, bool>> entries;

    int n() const;
    int negative_count() const;
    void canonicalize();
    bool operator==(const CycleType& o) const { return entries == o.entries; }
    std::string str() const;  // e.g. "(2-)(1)(1)"
};

CycleType cycle_type(const SignedPerm& phi);

/// Standard element of the given type in the canonical window layout
/// (windows laid out consecutively in canonical entry order).
SignedPerm standard_element(const CycleType& ct);

/// Window layout offsets for the canonical layout.
std::vector<int> window_offsets(const CycleType& ct);

/// omega_i / varpi_i / tau_i on window i, chi_i between windows i, i+1.
SignedPerm make_omega(const CycleType& ct, int i);
SignedPerm make_varpi(const CycleType& ct, int i);
SignedPerm make_tau(const CycleType& ct, int i);
SignedPerm make_chi(const CycleType& ct, int i);

/// Generators of the centralizer of standard_element(ct) in Sl_n.
std::vector<SignedPerm> centralizer_generators(const CycleType& ct);

/// Predicted centralizer order: product over blocks of equal parts of
/// (2 len)^count * count!.
long long centralizer_order_formula(const CycleType& ct);

std::vector<SignedPerm> all_signed_perms(int n);          // |.| = 2^n n!
std::vector<SignedPerm> group_closure(const std::vector<SignedPerm>& gens, int n);

SignedPerm random_signed_perm(int n, std::mt19937_64& rng);

}  // namespace torusplit
