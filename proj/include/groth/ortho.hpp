#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groth/grothendieck.hpp"
#include "groth/involution.hpp"
#include "groth/multipoly.hpp"

namespace groth {

// Involution Grothendieck polynomial: sum of beta-weighted grothendieck(w) over
// the atom set binv(z).
MultiPoly invgroth(const Involution& z);

// Product formula for dominant involutions of symmetric shape lambda.
MultiPoly invgroth_dominant(const std::vector<int>& lambda);

// Orthogonal Grothendieck polynomial of a vexillary involution, computed by
// applying beta divided differences along dom_path(z) to the dominant
// product formula.
MultiPoly ortho_groth(const Involution& z);

// Theorem: for quasi-dominant z the orthogonal polynomial factors as
// invgroth(z) * prod_{i<=k(z)} (2 + beta*x_i).
MultiPoly qd_formula(const Involution& z);

// The coefficient function of the basis expansion of ortho_groth(z):
// ortho_groth(z) = sum_w values[w] * beta^(l(w) - ell_inv) * grothendieck(w).
struct Gco {
    std::map<Permutation, Coeff> values;
    long ell_inv = 0;
};
Gco gco(const Involution& z);

// Signed chain sum for the coefficient function in the quasi-dominant case.
std::map<Permutation, Coeff> dom_thm_gco(const Involution& z);

struct LeftSegment {
    std::vector<int> points;
    bool mobile = true;
};

struct ShiftTerm {
    std::vector<int> set;
    Permutation sigma;
    Involution conjugate;  // sigma^-1 * z * sigma
    MultiPoly varpi;
    Coeff theta;  // varpi at x = 0, equals +-2^(cyc - |set|)
};

struct ShiftableData {
    Involution z;
    std::vector<int> left_endpoints;
    std::vector<LeftSegment> segments;
    std::map<int, std::vector<int>> crossing_bounds;
    std::vector<ShiftTerm> sets;  // ordered by (size, lex); the empty set first
};

ShiftableData shiftable_data(const Involution& z);

// Main expansion: ortho_groth(z) as the shiftable-set sum.
MultiPoly ivex_formula(const Involution& z);

// All pairs a < b in a common mobile left segment satisfy z(a) > z(b).
bool is_locally_noncrossing(const Involution& z);

struct BinvPlus {
    std::vector<Permutation> members;          // sorted by (length, one-line)
    std::vector<std::pair<int, int>> edges;    // member indices, v -> s_i v
    std::set<Permutation> binv_members;
    bool connected = true;  // observational, never asserted
    int k = 0;
    int j = 0;
};
BinvPlus binv_plus(const Involution& z);

// Basis reindexing w -> 1 x w (up) or w -> w down 1 when w(1)=1 (down,
// deleting the other terms).
GrothExpansion shift_expansion(const GrothExpansion& e, bool up);

enum class StableKind { GQ, GP };

// Truncation of the polynomial for 1^steps x z to the first `vars`
// variables; callers detect stabilization by comparing consecutive steps.
MultiPoly stable_truncation(const Involution& z, StableKind kind, int steps, int vars);

// Composite isobaric operator fixing stable truncations.
MultiPoly stab_operator(int n, const MultiPoly& p);

struct IgrassTerm {
    std::vector<int> lambda;
    int sign = 1;  // (-1)^cols * (-1)^strip combined into +-1
    MultiPoly varpi;
    int beta_pow = 0;
    Involution conjugate;  // <lambda | n>
};

// Vertical-strip expansion of ortho_groth(<mu | n>) into involution
// Grothendieck polynomials.
std::vector<IgrassTerm> igrass_expansion(const std::vector<int>& mu, int n);

// Closed-form basis expansions for the families (2, n) and g_2n.
GrothExpansion closed_form_t(int n);
GrothExpansion closed_form_g(int n);

std::string shiftable_to_json(const ShiftableData& d);

}  // namespace groth
