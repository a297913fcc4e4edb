#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groth/errors.hpp"

namespace groth {

using Coeff = boost::multiprecision::cpp_int;

// Monomial key: distinguished beta exponent plus x exponents.
// Canonical form: trailing zeros of x are trimmed.
struct Monomial {
    int beta = 0;
    std::vector<int> x;

    void trim() {
        while (!x.empty() && x.back() == 0) x.pop_back();
    }
    int x_degree() const {
        int d = 0;
        for (int e : x) d += e;
        return d;
    }
    int exp(int i) const {  // exponent of x_i, 1-based
        return (i >= 1 && i <= (int)x.size()) ? x[i - 1] : 0;
    }
    auto operator<=>(const Monomial&) const = default;
};

// Sparse polynomial in Z[beta][x_1, x_2, ...] with exact integer
// coefficients. Invariants: no zero coefficient is stored, every key is
// trimmed, and terms are ordered by ascending beta exponent then
// lexicographically on x exponents. Immutable in spirit: all operations
// return new values.
class MultiPoly {
  public:
    using TermMap = std::map<Monomial, Coeff>;

    MultiPoly() = default;

    static MultiPoly zero() { return MultiPoly(); }
    static MultiPoly constant(Coeff c);
    static MultiPoly var(int i, int e = 1);  // x_i^e, i >= 1
    static MultiPoly beta(int k = 1);        // beta^k
    static MultiPoly term(const Monomial& m, Coeff c);

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }
    Coeff coeff(const Monomial& m) const;

    // Largest variable index that occurs, 0 for beta-only polynomials.
    int max_var() const;
    int max_x_degree() const;

    MultiPoly operator-() const;
    MultiPoly operator+(const MultiPoly& q) const;
    MultiPoly operator-(const MultiPoly& q) const;
    MultiPoly operator*(const MultiPoly& q) const;
    MultiPoly operator*(const Coeff& c) const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    bool operator==(const MultiPoly& q) const { return terms_ == q.terms_; }

    void add_term(const Monomial& m, const Coeff& c);

  private:
    TermMap terms_;
};

// Action of the simple transposition s_i on variables: swaps x_i, x_{i+1}.
MultiPoly act_si(int i, const MultiPoly& p);

// Divided difference (f - s_i f)/(x_i - x_{i+1}); the division is exact,
// a nonzero remainder signals an arithmetic bug and raises InternalError.
MultiPoly divdiff(int i, const MultiPoly& p);

// beta-deformed operator: -beta*f + (1 + beta*x_i)*divdiff(i, f).
MultiPoly beta_divdiff(int i, const MultiPoly& p);

// Isobaric variant: beta_divdiff(i, x_i * f); idempotent.
MultiPoly isobaric(int i, const MultiPoly& p);

// x (+) y := x + y + beta*x*y.
MultiPoly oplus(const MultiPoly& p, const MultiPoly& q);

// Ring homomorphism sending x_1 -> 0 and x_{i+1} -> x_i.
MultiPoly shift_down_poly(const MultiPoly& p);

// Set x_i = 0 for all i > vars.
MultiPoly truncate_vars(const MultiPoly& p, int vars);

// If every term has the same value of (sum of x exponents) - beta exponent,
// return it (beta counts with degree -1); otherwise nullopt.
std::optional<int> graded_degree(const MultiPoly& p);

std::string to_text(const MultiPoly& p);
std::string to_json(const MultiPoly& p);
MultiPoly poly_from_json(const std::string& s);

}  // namespace groth
