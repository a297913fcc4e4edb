#pragma once

#include <map>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "groth/involution.hpp"
#include "groth/multipoly.hpp"
#include "groth/permutation.hpp"

namespace groth {

// Finite Z[beta]-linear combination of Grothendieck polynomials, stored as
// an association from basis index to its beta-polynomial coefficient.
class GrothExpansion {
  public:
    using Map = std::map<Permutation, MultiPoly>;

    GrothExpansion() = default;

    void add(const Permutation& w, const MultiPoly& coeff);
    MultiPoly coeff(const Permutation& w) const;
    const Map& terms() const { return terms_; }
    bool operator==(const GrothExpansion&) const = default;
    std::size_t size() const { return terms_.size(); }

    std::set<Permutation> support() const;
    GrothExpansion operator+(const GrothExpansion& o) const;
    GrothExpansion scaled(const MultiPoly& c) const;

  private:
    Map terms_;
};

// The Grothendieck polynomial of w, computed by beta divided differences
// down from the top monomial of the smallest symmetric group containing w.
// Results are cached process-wide; the cache is safe for concurrent use.
MultiPoly grothendieck(const Permutation& w);
std::shared_ptr<const MultiPoly> grothendieck_ptr(const Permutation& w);

// Independent construction by summing over bounded compatible sequences of
// Hecke words. Desk scale only.
MultiPoly groth_oracle(const Permutation& w);

// Truncation of the stable symmetric function limit of grothendieck(w) to n
// variables, built from unbounded compatible sequences. Desk scale only.
MultiPoly stable_groth_truncated(const Permutation& w, int n);

// Expansion of an arbitrary polynomial in the Grothendieck basis by
// iterated peeling of the extreme monomial at minimal x-degree.
GrothExpansion expand(const MultiPoly& p);

MultiPoly eval(const GrothExpansion& e);

std::string to_text(const GrothExpansion& e);
std::string to_json(const GrothExpansion& e);

// Bruhat order comparison via the rank criterion.
bool bruhat_leq(const Permutation& u, const Permutation& w);

// Expansion of (1 + beta*x_k) * grothendieck(v) as an alternating chain sum.
GrothExpansion lenart_transition(int k, const Permutation& v);

struct PieriChain {
    std::vector<std::pair<int, int>> steps;  // transpositions (a_i, b_i)
    long F = 0;
    long P = 0;
};

// The unique unmarked k-Pieri chain from v to w, if one exists.
std::optional<PieriChain> pieri_chain(const Permutation& v, const Permutation& w, int k);

// All unmarked k-Pieri chains out of v; at most one per endpoint.
std::map<Permutation, PieriChain> pieri_chains_from(const Permutation& v, int k);

// Expansion of grothendieck([1^p | k]) * grothendieck(v).
GrothExpansion lensot_product(int p, int k, const Permutation& v);

// Expansion of grothendieck([1^p | k]) * grothendieck([lambda | k]) by vertical strips.
GrothExpansion grassmannian_pieri(int p, int k, const std::vector<int>& lambda);

// Expansion of prod_{i<=k} (2 + beta*x_i).
GrothExpansion two_power_product(int k);

// Symplectic Grothendieck polynomial with its basis expansion.
std::pair<MultiPoly, GrothExpansion> symp_groth(const FpfInvolution& z);

}  // namespace groth
