#pragma once

#include "torusplit/signedperm.hpp"

#include <optional>
#include <string>
#include <vector>

namespace torusplit {

/// Arithmetic for monomial lifts of torus-normalizer elements in the
/// orthogonal model: windowed diagonal parts (one multiplicative parameter
/// per window, component orders q^len -+ 1) times signed-permutation
/// matrices that permute equal windows.

struct Window {
    int len = 0;
    bool neg = false;      // negative cycle window
    long long ord = 0;     // q^len - 1 (positive) or q^len + 1 (negative)
    int off = 0;           // first position (0-based)
};

struct WinLayout {
    long long q = 0;
    std::vector<Window> wins;
    int n = 0;

    int window_of(int pos) const;  // 0-based position -> window index
};

WinLayout make_layout(long long q, const std::vector<std::pair<int, bool>>& parts);

/// Monomial element: x0 scalar, signed permutation phi of positions, and a
/// per-position exponent: the scalar at source position i (0-based) is
/// zeta^(ex[i]) for zeta a fixed generator of the roots of unity of order
/// ord(window(i)).
struct WinElem {
    int xsign = 1;
    SignedPerm phi;
    std::vector<long long> ex;

    bool operator==(const WinElem& o) const {
        return xsign == o.xsign && phi == o.phi && ex == o.ex;
    }
    bool operator<(const WinElem& o) const;
};

WinElem win_identity(const WinLayout& L);
WinElem win_mul(const WinLayout& L, const WinElem& a, const WinElem& b);
WinElem win_inv(const WinLayout& L, const WinElem& a);

/// Plain lift of a window-compatible signed permutation (all scalars 1).
WinElem perm_lift(const WinLayout& L, const SignedPerm& phi, int xsign = 1);

/// Torus element with window parameters zeta^(e_w): position off+j carries
/// exponent e_w q^j.
WinElem torus_pattern(const WinLayout& L, const std::vector<long long>& e);

/// Spinor norm class per the determinant convention: class of
/// det(diagonal part) in Fq* times the norm of the underlying permutation
/// matrix over Fq.  nullopt when the determinant does not land in Fq*.
std::optional<bool> win_theta_square(const WinLayout& L, const WinElem& g);

enum class LemmaCase { M4, M3, M2 };

struct ObstructionResult {
    bool obstructed = false;
    std::string detail;
    long long tuples_checked = 0;
};

/// Exhaustive search for a consistent system of lifts of the designated
/// centralizer elements of the given lemma case.  Returns obstructed = true
/// when no lift tuple satisfies the membership and relation constraints.
ObstructionResult obstruction_check(const CycleType& ct, long long q, LemmaCase lc);

/// Which lemma case (if any) covers this cycle type shape.
std::optional<LemmaCase> lemma_case_for(const CycleType& ct);

}  // namespace torusplit
