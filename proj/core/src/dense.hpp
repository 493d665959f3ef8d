// Dense univariate integer polynomials, used internally where sparse
// arithmetic on univariate inputs would be wasteful.
#pragma once

#include <optional>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder::dense {

/// Lowest power first, no trailing zeros; empty is the zero polynomial.
using Dense = std::vector<Integer>;

inline int deg(const Dense& p) { return static_cast<int>(p.size()) - 1; }
void trim(Dense& p);

/// Empty when f has a variable other than var.
std::optional<Dense> from_polynomial(const Polynomial& f, VarIndex var);
Polynomial to_polynomial(const Dense& p, VarIndex var);

Dense derivative(const Dense& p);

/// Divides by the positive gcd of the coefficients.
void make_primitive(Dense& p);

/// lc(b)^(deg a - deg b + 1) * a mod b.
Dense pseudo_remainder(Dense a, const Dense& b);

/// a / b; throws AlgebraError when b does not divide a.
Dense exact_quotient(Dense a, const Dense& b);

/// True if b divides a over Z.
bool divides(const Dense& b, const Dense& a);

/// gcd over Z of two nonzero polynomials, integer content included, with a
/// positive leading coefficient. Modular: images modulo word-size primes are
/// combined by Chinese remaindering until a candidate divides both inputs.
Dense gcd(const Dense& a, const Dense& b);

/// res_var(f, g) for f, g in Z[var, other] of positive degree in var, by
/// evaluation at points of `other` and interpolation modulo word-size primes,
/// combined until the product of primes exceeds twice a Hadamard bound on
/// the result's coefficients.
Polynomial bivariate_resultant(const Polynomial& f, const Polynomial& g, VarIndex var,
                               VarIndex other);

/// Primitive squarefree part with a positive leading coefficient.
Dense squarefree(const Dense& p);

}  // namespace cadorder::dense
