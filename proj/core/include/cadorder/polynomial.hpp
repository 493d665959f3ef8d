// Sparse multivariate polynomials over the integers.
//
// Variables are identified by their index in a problem's declared variable
// list; names live with the problem, not with the polynomial. Terms are kept
// sorted by the graded lexicographic order in which a smaller variable index
// is more significant, greatest term first, so the leading term is always
// terms().front().
#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace cadorder {

using Integer = mpz_class;

/// Index of a variable within a problem's declaration list.
using VarIndex = std::size_t;

inline constexpr std::size_t kMaxVariables = 16;

/// A power product x_0^e_0 ... x_{k-1}^e_{k-1}. Absent variables have
/// exponent zero, so the representation is canonical.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  static Monomial variable(VarIndex var, unsigned exponent = 1);

  [[nodiscard]] unsigned exponent(VarIndex var) const { return exps_[var]; }
  void set_exponent(VarIndex var, unsigned exponent);

  [[nodiscard]] unsigned total_degree() const { return total_; }
  [[nodiscard]] bool is_constant() const { return total_ == 0; }
  [[nodiscard]] bool contains(VarIndex var) const { return exps_[var] != 0; }

  /// True when this monomial divides `other`.
  [[nodiscard]] bool divides(const Monomial& other) const;

  /// Number of slots up to and including the highest variable present.
  [[nodiscard]] std::size_t span() const;

  Monomial operator*(const Monomial& other) const;
  /// Quotient; requires divides(other) to hold for *this = other * q.
  Monomial operator/(const Monomial& other) const;

  /// Graded lexicographic: total degree first, then exponent of the
  /// lowest-index variable, and so on.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (auto c = a.total_ <=> b.total_; c != 0) return c;
    return a.exps_ <=> b.exps_;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;

  [[nodiscard]] std::size_t hash() const;

 private:
  std::array<Exponent, kMaxVariables> exps_{};
  std::uint32_t total_ = 0;
};

struct Term {
  Monomial monomial;
  Integer coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(Integer constant);
  Polynomial(Monomial monomial, Integer coeff);

  static Polynomial variable(VarIndex var, unsigned exponent = 1);

  /// Builds a polynomial from arbitrary terms: sorts, merges duplicate
  /// monomials and drops zero coefficients.
  static Polynomial from_terms(std::vector<Term> terms);

  [[nodiscard]] const std::vector<Term>& terms() const { return terms_; }
  [[nodiscard]] std::size_t size() const { return terms_.size(); }

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] bool is_constant() const;
  [[nodiscard]] bool is_one() const;

  /// The constant term's value when is_constant(); zero otherwise.
  [[nodiscard]] Integer constant_value() const;

  /// Leading coefficient under the canonical order. Zero for 0.
  [[nodiscard]] const Integer& leading_coefficient() const;
  [[nodiscard]] const Monomial& leading_monomial() const;

  [[nodiscard]] bool contains(VarIndex var) const;
  /// Variables occurring in at least one term, ascending.
  [[nodiscard]] std::vector<VarIndex> variables() const;
  /// Highest variable index present plus one (0 for constants).
  [[nodiscard]] std::size_t variable_span() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Strict weak order used for set storage: by size, then term by term.
  friend bool canonical_less(const Polynomial& a, const Polynomial& b);

  [[nodiscard]] std::size_t hash() const;

 private:
  explicit Polynomial(std::vector<Term> sorted_terms, int /*tag*/)
      : terms_(std::move(sorted_terms)) {}

  std::vector<Term> terms_;
};

struct PolynomialLess {
  bool operator()(const Polynomial& a, const Polynomial& b) const {
    return canonical_less(a, b);
  }
};

struct PolynomialHash {
  std::size_t operator()(const Polynomial& p) const { return p.hash(); }
};

/// A deduplicated polynomial set, kept sorted by canonical_less.
using PolynomialSet = std::vector<Polynomial>;

/// Sorts and deduplicates.
PolynomialSet make_set(std::vector<Polynomial> polys);

/// deg(f, v); -1 for the zero polynomial.
int degree(const Polynomial& f, VarIndex var);

/// Total degree; throws AlgebraError on the zero polynomial.
unsigned total_degree(const Polynomial& f);

/// Coefficients of v^d, v^(d-1), ..., v^0 with d = degree(f, v).
std::vector<Polynomial> coefficients(const Polynomial& f, VarIndex var);

/// Inverse of coefficients(): sum of coeffs[i] * v^(d-i).
Polynomial from_coefficients(std::span<const Polynomial> coeffs, VarIndex var);

/// Leading coefficient of f viewed as univariate in v; 0 for f = 0.
Polynomial leading_coefficient(const Polynomial& f, VarIndex var);

Polynomial derivative(const Polynomial& f, VarIndex var);

Polynomial pow(const Polynomial& f, unsigned exponent);

/// Substitutes an integer value for one variable.
Polynomial evaluate(const Polynomial& f, VarIndex var, const Integer& value);

/// Positive gcd of all integer coefficients; 0 for the zero polynomial.
Integer integer_content(const Polynomial& f);

/// f or -f, whichever has a positive leading coefficient.
Polynomial sign_normalized(Polynomial f);

/// Divides every coefficient by `divisor`, which must divide each exactly.
Polynomial divide_exact(const Polynomial& f, const Integer& divisor);

/// Exact multivariate division; throws AlgebraError if g does not divide f.
Polynomial divide_exact(const Polynomial& f, const Polynomial& g);

/// Renders with explicit '*' and '^', greatest term first, unit
/// coefficients elided. Variables without a name print as x<index>.
std::string to_string(const Polynomial& f, std::span<const std::string> names);

}  // namespace cadorder
