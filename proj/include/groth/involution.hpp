#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groth/permutation.hpp"

namespace groth {

// Self-inverse permutation stored as disjoint 2-cycles (a, b), a < b,
// sorted by left endpoint.
class Involution {
  public:
    Involution() = default;  // identity
    static Involution from_cycles(std::vector<std::pair<int, int>> cycles);
    static Involution from_permutation(const Permutation& w);

    const std::vector<std::pair<int, int>>& cycles() const { return cycles_; }
    int apply(int i) const;
    bool is_identity() const { return cycles_.empty(); }
    int max_support() const { return cycles_.empty() ? 0 : maxsupp_; }

    Permutation to_permutation() const;

    bool operator==(const Involution&) const = default;
    std::strong_ordering operator<=>(const Involution& o) const {
        return to_permutation() <=> o.to_permutation();
    }

    std::string str() const;  // cycle notation "(1,4)(2,5)", "()" for identity

  private:
    std::vector<std::pair<int, int>> cycles_;
    int maxsupp_ = 0;
};

struct InvStats {
    long cyc = 0;
    long ell = 0;      // Coxeter length
    long ell_inv = 0;  // (ell + cyc)/2
    std::set<int> des_v;
    int k = 0;
    bool quasi_dominant = true;
    int j = 1;  // fixed-prefix length; 1 for the identity by convention
};
InvStats inv_stats(const Involution& z);

bool is_vexillary(const Involution& z);
// Arc-diagram criterion: no forbidden induced vertex-ordered subgraph.
bool is_vexillary_by_arcs(const Involution& z);

Permutation alpha_inv(const Involution& z);
std::set<Permutation> binv(const Involution& z);

// Fixed-point-free involutions of Z restricted to [n] (n even); the tail
// pairs (n+1, n+2)(n+3, n+4)... are implicit.
class FpfInvolution {
  public:
    FpfInvolution(int n, const Involution& z);
    int n() const { return n_; }
    const Involution& base() const { return z_; }
    std::string str() const { return z_.str(); }
    bool operator==(const FpfInvolution&) const = default;

  private:
    int n_ = 0;
    Involution z_;
};

Permutation alpha_fpf(const FpfInvolution& z);
std::set<Permutation> fpf_class(const FpfInvolution& z);

// Path z -> s_j z s_j -> ... -> dom_pq in the vexillary weak order, built
// from the distinguished ascent while z is not dominant and the dominant
// ascent afterwards. Every edge raises the length by exactly 2 and stays
// vexillary.
struct DomPath {
    std::vector<int> indices;             // edge labels i_1, ..., i_k
    std::vector<Involution> involutions;  // z = first, dom_pq = last
    int p = 0;
    int q = 0;
};
DomPath dom_path(const Involution& z);

Involution dom_pq(int p, int q);
Involution t_family(int n);               // (1, n)
Involution g_family(int n);               // (1,n+1)(2,n+2)...(n,2n)
Involution w_family(int i, int j);        // (i,j)(i+1,j-1)...
Involution g_grassmannian(int i, int j);  // g_ij
Involution igrassmannian(const std::vector<int>& mu, int n);

// Involution shape sh(z): the row counts of the upper half diagram
// sorted decreasingly; a strict partition for vexillary z.
std::vector<int> inv_shape(const Involution& z);

Involution one_times(const Involution& z, int n);
Involution shift_down_inv(const Involution& z, int n);
Involution dominant_involution(const std::vector<int>& lambda);

Involution parse_involution(const std::string& text);

std::vector<Involution> all_involutions(int n);      // I_n, deterministic order
std::vector<FpfInvolution> all_fpf_involutions(int n);

std::string to_json(const Involution& z);

}  // namespace groth
