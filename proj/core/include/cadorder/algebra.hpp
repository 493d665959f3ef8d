// Resultants, discriminants, gcds and squarefree parts over Z[x_0..x_k].
#pragma once

#include <optional>
#include <utility>

#include "cadorder/polynomial.hpp"

namespace cadorder {

/// prem(f, g, v) = lc_v(g)^(deg_v f - deg_v g + 1) * f  mod g.
/// Requires g to contain v; returns f unchanged when deg_v f < deg_v g.
Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, VarIndex var);

/// res_v(f, g) via the subresultant polynomial remainder sequence.
///
/// Both arguments must be nonzero. When neither contains v the result is the
/// constant 1; when exactly one is v-free it is that one raised to the other's
/// degree.
Polynomial resultant(const Polynomial& f, const Polynomial& g, VarIndex var);

/// disc_v(f) = (-1)^(d(d-1)/2) res_v(f, df/dv) / lc_v(f).
/// Returns 1 when deg_v f < 2.
Polynomial discriminant(const Polynomial& f, VarIndex var);

/// Greatest common divisor in Z[x], integer content included, with a positive
/// leading coefficient. gcd(0, g) is the normalized g; gcd(0, 0) throws.
Polynomial gcd(const Polynomial& f, const Polynomial& g);

/// Squarefree part: the primitive part p in the highest variable v becomes
/// p / gcd(p, dp/dv), times the squarefree part of the content when that is
/// not constant. Constant factors are dropped; the result is sign-normalized.
/// Throws on zero.
Polynomial squarefree_part(const Polynomial& f);

/// Two-argument form is gcd(); one-argument form is squarefree_part().
Polynomial gcd_squarefree(const Polynomial& f, const std::optional<Polynomial>& g);

struct ContentPrimitive {
  Polynomial content;
  Polynomial primitive;
};

/// content = normalized gcd of coefficients(f, v); primitive = f / content.
ContentPrimitive content_primitive(const Polynomial& f, VarIndex var);

/// Normalized gcd of the coefficients of f in v (f itself when v-free).
Polynomial content(const Polynomial& f, VarIndex var);

}  // namespace cadorder
