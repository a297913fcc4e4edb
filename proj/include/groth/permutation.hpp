#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "groth/errors.hpp"

namespace groth {

// Permutation of the positive integers with finite support, stored as the
// canonical one-line window w(1..n): minimal n with w(i) = i for all i > n.
class Permutation {
  public:
    Permutation() = default;  // identity
    static Permutation identity() { return Permutation(); }
    static Permutation from_window(std::vector<int> win);
    static Permutation simple(int i);                // s_i
    static Permutation transposition(int a, int b);  // (a, b)

    int operator()(int i) const {
        return (i >= 1 && i <= (int)win_.size()) ? win_[i - 1] : i;
    }
    bool is_identity() const { return win_.empty(); }
    int size() const { return (int)win_.size(); }  // canonical window length
    const std::vector<int>& window() const { return win_; }
    std::vector<int> window_padded(int n) const;

    Permutation inverse() const;
    // Composition (u*v)(i) = u(v(i)).
    Permutation operator*(const Permutation& v) const;
    Permutation swap_positions(int a, int b) const;  // right mult by (a,b)

    long length() const;
    std::set<int> des_r() const;
    std::set<int> des_l() const;
    int max_descent() const;  // 0 for identity

    bool operator==(const Permutation&) const = default;
    // Lexicographic on the infinite one-line sequence.
    std::strong_ordering operator<=>(const Permutation& o) const;

    std::string str() const;  // compact one-line; digits if n <= 9

  private:
    std::vector<int> win_;
    void canonicalize();
};

struct RotheData {
    std::set<std::pair<int, int>> diagram;
    std::vector<int> code;  // trimmed of trailing zeros
    std::set<std::pair<int, int>> essential;
};
RotheData rothe(const Permutation& w);

std::vector<int> lehmer_code(const Permutation& w);
Permutation lehmer_decode(const std::vector<int>& code);

bool is_vexillary(const Permutation& w);  // 2143-avoidance scan
// Alternative criterion: the row sets D_i(w) are totally ordered by inclusion.
bool is_vexillary_by_rows(const Permutation& w);
bool is_dominant(const Permutation& w);

Permutation demazure(const Permutation& u, const Permutation& v);
// Reduced word built by repeatedly removing the smallest right descent.
std::vector<int> reduced_word(const Permutation& w);

std::set<std::vector<int>> hecke_words(const Permutation& w, int max_len);

// w = v*(a,b) if it covers v in Bruhat order, nullopt otherwise.
std::optional<Permutation> bruhat_cover(const Permutation& v, int a, int b);

Permutation one_times(const Permutation& w, int n);  // 1^n x w
Permutation shift_down_perm(const Permutation& w, int n);  // w "down" n

// The n-Grassmannian permutation [lambda | n].
Permutation grassmannian_perm(const std::vector<int>& lambda, int n);

Permutation parse_permutation(const std::string& text);

std::vector<Permutation> all_permutations(int n);  // S_n in window-lex order

}  // namespace groth
