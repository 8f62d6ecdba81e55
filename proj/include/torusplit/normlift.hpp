#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "torusplit/torus.hpp"

namespace torusplit {

enum class Family { G2, TwoG2, ThreeD4 };

Family parse_family(const std::string& label);
std::string to_string(Family f);
int num_classes(Family f);

/// Shared per-root-system machinery (built once, reused across q).
struct Theory {
    RootSystem sys;
    WeylGroup weyl;
    ChevalleySystem chev;
    TitsGroup tits;

    explicit Theory(RootSystemType t);
};

const Theory& theory_for(RootSystemType t);  // cached singletons

/// Element of the normalizer N = T.W over the working modulus M:
/// H(t) * n_w with n_w the canonical Tits lift; the h-part of Tits
/// elements is folded into t via h_i(-1) = exponent M/2.
struct NormalizerElement {
    ZVec t;
    int w = 0;
    bool operator==(const NormalizerElement& o) const { return w == o.w && t == o.t; }
    bool operator<(const NormalizerElement& o) const {
        if (w != o.w) return w < o.w;
        return t < o.t;
    }
};

struct Relation {
    std::string name;
    std::vector<std::pair<std::string, int>> word;  // (generator name, exponent)
};

struct Recipe {
    int class_id = 0;
    std::string w_label;                  // human-readable, e.g. "w1*w3"
    std::vector<int> w_word;              // root indices whose reflections multiply to w
    std::vector<std::string> n_atoms;     // twisting element
    std::vector<std::pair<std::string, std::vector<std::string>>> gens;
    std::vector<Relation> relations;
    int cw_order = 0;
    std::string cw_name;
};

const std::vector<Recipe>& paper_complement_recipes(Family f);
const Recipe& recipe_for(Family f, int class_id);

/// Expected torus invariant factors from the paper's tables.
std::vector<Z> expected_invariants(Family f, int class_id, const Z& q);
Z expected_torus_order(Family f, int class_id, const Z& q);

/// Everything needed to compute inside one twisted normalizer.
struct ClassContext {
    Family family = Family::G2;
    int class_id = 0;
    const Theory* th = nullptr;
    FrobConfig cfg;
    int w = 0;                 // Weyl element of the class representative
    TitsElement n;             // twisting element
    bool n0_is_paper = true;   // central lift n0 used the paper's h-part
    uint32_t n0_h = 0;
    ZMat A;                    // exponent action of sigma_n (t -> A t)
    TorusStructure structure;
    Z K = 1, M = 2;

    Z q() const { return cfg.q(); }
};

/// Build the context for a torus class; q must be valid for the family
/// (odd prime power; 3^(2m+1) for 2G2).  n_atoms_override replaces the
/// recipe's twisting element (for representative-independence checks).
ClassContext make_context(Family f, int class_id, const Z& q,
                          const std::vector<std::string>* n_atoms_override = nullptr);

/// The central order-2 lift over w0; searches H-corrections of the paper
/// word when the pinned sign convention requires it.
TitsElement central_lift(const Theory& th, Family f, bool* is_paper_word = nullptr);

NormalizerElement norm_one(const ClassContext& ctx);
NormalizerElement from_tits(const ClassContext& ctx, const TitsElement& e);
NormalizerElement norm_mult(const ClassContext& ctx, const NormalizerElement& x,
                            const NormalizerElement& y);
NormalizerElement norm_inv(const ClassContext& ctx, const NormalizerElement& x);
NormalizerElement norm_pow(const ClassContext& ctx, const NormalizerElement& x, int e);

/// n * sigma(x) * n^-1 (the paper's x^{sigma n}).
NormalizerElement sigma_n_apply(const ClassContext& ctx, const NormalizerElement& x);
bool is_fixed_element(const ClassContext& ctx, const NormalizerElement& x);

/// Resolve a generator word over the atoms h1..hl, n1..nN, n0, H1, H2.
NormalizerElement eval_word(const ClassContext& ctx,
                            const std::vector<std::string>& atoms);

struct Certificate {
    Family family = Family::G2;
    int class_id = 0;
    Z q;
    std::string w_label;
    std::vector<Z> invariant_factors;
    Z torus_order;
    Z K, M;
    bool n0_is_paper = true;
    std::vector<std::string> gen_names;
    std::vector<std::string> corrected_gens;  // needed a torus half-correction
    bool gens_fixed = false;
    size_t complement_order = 0;
    int expected_cw_order = 0;
    bool torus_ok = false;
    bool order_ok = false;
    bool image_ok = false;
    bool intersection_ok = false;
    bool relations_ok = false;

    bool ok() const {
        return gens_fixed && torus_ok && order_ok && image_ok &&
               intersection_ok && relations_ok;
    }
};

Certificate verify_complement(const ClassContext& ctx);

/// Closure cap for complement enumeration (env TORUS_SPLIT_CAP).
size_t closure_cap();

std::string certificate_json(const Certificate& c);

}  // namespace torusplit
