#include "cadorder/algebra.hpp"

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "cadorder/errors.hpp"
#include "dense.hpp"

namespace cadorder {

namespace {

// Dense univariate view over polynomial coefficients, lowest power first.
// An empty vector is the zero polynomial; the last entry is nonzero.
using UPoly = std::vector<Polynomial>;

UPoly to_upoly(const Polynomial& f, VarIndex var) {
  auto coeffs = coefficients(f, var);
  std::reverse(coeffs.begin(), coeffs.end());
  return coeffs;
}

Polynomial from_upoly(const UPoly& u, VarIndex var) {
  std::vector<Polynomial> coeffs(u.rbegin(), u.rend());
  return from_coefficients(coeffs, var);
}

void trim(UPoly& u) {
  while (!u.empty() && u.back().is_zero()) u.pop_back();
}

int udeg(const UPoly& u) { return static_cast<int>(u.size()) - 1; }

UPoly prem(UPoly a, const UPoly& b) {
  const int db = udeg(b);
  const Polynomial& lcb = b.back();
  int exponent = udeg(a) - db + 1;
  if (exponent <= 0) return a;
  while (!a.empty() && udeg(a) >= db) {
    const int shift = udeg(a) - db;
    Polynomial lca = a.back();
    for (auto& c : a) c *= lcb;
    for (int j = 0; j < db; ++j) a[static_cast<std::size_t>(j + shift)] -= lca * b[static_cast<std::size_t>(j)];
    a.pop_back();
    trim(a);
    --exponent;
  }
  if (exponent > 0 && !a.empty()) {
    Polynomial scale = pow(lcb, static_cast<unsigned>(exponent));
    for (auto& c : a) c *= scale;
  }
  return a;
}

void divide_coefficients(UPoly& u, const Polynomial& d) {
  if (d.is_one()) return;
  for (auto& c : u) c = divide_exact(c, d);
}

// Advances h <- g^delta / h^(delta - 1).
Polynomial next_h(const Polynomial& g, const Polynomial& h, int delta) {
  if (delta == 0) return h;
  if (delta == 1) return g;
  return divide_exact(pow(g, static_cast<unsigned>(delta)),
                      pow(h, static_cast<unsigned>(delta - 1)));
}

Polynomial primitive_part(const Polynomial& f, VarIndex var) {
  return divide_exact(f, content(f, var));
}

// Arithmetic modulo a prime below 2^31, so products fit in 64 bits.
using ModPoly = std::vector<std::uint64_t>;  // lowest power first

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

void trim_mod(ModPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

// Image of f under x_i -> point[i] (i != var) reduced mod p, dense in var.
ModPoly image_mod(const Polynomial& f, VarIndex var, const std::vector<std::uint64_t>& point,
                  std::uint64_t p) {
  ModPoly out(static_cast<std::size_t>(degree(f, var)) + 1, 0);
  for (const auto& t : f.terms()) {
    std::uint64_t c = mpz_fdiv_ui(t.coeff.get_mpz_t(), p);
    for (VarIndex i = 0; i < point.size() && c != 0; ++i) {
      if (i != var && t.monomial.exponent(i) != 0) c = c * pow_mod(point[i], t.monomial.exponent(i), p) % p;
    }
    auto& slot = out[t.monomial.exponent(var)];
    slot = (slot + c) % p;
  }
  return out;
}

std::size_t gcd_degree_mod(ModPoly a, ModPoly b, std::uint64_t p) {
  trim_mod(a);
  trim_mod(b);
  while (!b.empty()) {
    const std::uint64_t inv = pow_mod(b.back(), p - 2, p);
    while (a.size() >= b.size()) {
      const std::uint64_t q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) {
        a[j + shift] = (a[j + shift] + (p - q) * b[j]) % p;
      }
      trim_mod(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return a.empty() ? 0 : a.size() - 1;
}

// True only if f and g, both of positive degree in var, certainly share no
// factor of positive degree in var. A common factor h survives any
// evaluation and reduction that keeps the leading coefficient of f nonzero,
// so a constant gcd of such an image is a proof of coprimality.
bool certainly_coprime(const Polynomial& f, const Polynomial& g, VarIndex var) {
  static constexpr std::uint64_t kPrimes[] = {2147483647u, 2147483629u, 2147483587u};
  const std::size_t span = std::max(f.variable_span(), g.variable_span());
  for (std::uint64_t p : kPrimes) {
    std::vector<std::uint64_t> point(span);
    for (std::size_t i = 0; i < span; ++i) point[i] = (p / 7 + 40503u * (i + 1)) % p;
    ModPoly fa = image_mod(f, var, point, p);
    if (fa.back() == 0) continue;
    ModPoly ga = image_mod(g, var, point, p);
    if (gcd_degree_mod(std::move(fa), std::move(ga), p) == 0) return true;
  }
  return false;
}

// gcd of two polynomials primitive in var and both of positive degree in it.
Polynomial primitive_gcd(const Polynomial& f, const Polynomial& g, VarIndex var) {
  if (certainly_coprime(f, g, var)) return Polynomial(1);
  UPoly a = to_upoly(f, var);
  UPoly b = to_upoly(g, var);
  if (udeg(a) < udeg(b)) std::swap(a, b);
  Polynomial gg(1);
  Polynomial h(1);
  while (true) {
    const int delta = udeg(a) - udeg(b);
    UPoly r = prem(a, b);
    if (r.empty()) return sign_normalized(primitive_part(from_upoly(b, var), var));
    if (udeg(r) == 0) return Polynomial(1);
    a = std::move(b);
    divide_coefficients(r, gg * pow(h, static_cast<unsigned>(delta)));
    b = std::move(r);
    gg = a.back();
    h = next_h(gg, h, delta);
  }
}

}  // namespace

Polynomial pseudo_remainder(const Polynomial& f, const Polynomial& g, VarIndex var) {
  if (degree(g, var) < 1) throw AlgebraError("pseudo-remainder divisor must contain the variable");
  return from_upoly(prem(to_upoly(f, var), to_upoly(g, var)), var);
}

Polynomial resultant(const Polynomial& f, const Polynomial& g, VarIndex var) {
  if (f.is_zero() || g.is_zero()) throw AlgebraError("resultant of the zero polynomial");
  const int df = degree(f, var);
  const int dg = degree(g, var);
  if (df == 0 && dg == 0) return Polynomial(1);
  if (dg == 0) return pow(g, static_cast<unsigned>(df));
  if (df == 0) return pow(f, static_cast<unsigned>(dg));

  {
    std::vector<VarIndex> vars = f.variables();
    for (VarIndex v : g.variables()) {
      if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
    }
    std::erase(vars, var);
    if (vars.size() <= 1) {
      const VarIndex other = vars.empty() ? (var == 0 ? 1 : 0) : vars.front();
      return dense::bivariate_resultant(f, g, var, other);
    }
  }

  UPoly a = to_upoly(f, var);
  UPoly b = to_upoly(g, var);
  int sign = 1;
  if (df < dg) {
    std::swap(a, b);
    if ((df * dg) % 2 != 0) sign = -sign;
  }
  Polynomial gg(1);
  Polynomial h(1);
  while (true) {
    const int da = udeg(a);
    const int db = udeg(b);
    const int delta = da - db;
    if (da % 2 != 0 && db % 2 != 0) sign = -sign;
    UPoly r = prem(a, b);
    a = std::move(b);
    if (r.empty()) return {};
    divide_coefficients(r, gg * pow(h, static_cast<unsigned>(delta)));
    b = std::move(r);
    gg = a.back();
    h = next_h(gg, h, delta);
    if (udeg(b) == 0) break;
  }
  const int da = udeg(a);
  Polynomial res = next_h(b.back(), h, da);
  return sign > 0 ? res : -res;
}

Polynomial discriminant(const Polynomial& f, VarIndex var) {
  const int d = degree(f, var);
  if (d < 2) return Polynomial(1);
  Polynomial res = resultant(f, derivative(f, var), var);
  Polynomial disc = divide_exact(res, leading_coefficient(f, var));
  if ((d * (d - 1) / 2) % 2 != 0) disc = -disc;
  return disc;
}

Polynomial content(const Polynomial& f, VarIndex var) {
  if (f.is_zero()) throw AlgebraError("content of the zero polynomial");
  if (!f.contains(var)) return sign_normalized(f);
  Polynomial c;
  for (const auto& coeff : coefficients(f, var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? sign_normalized(coeff) : gcd(c, coeff);
    if (c.is_one()) break;
  }
  return c;
}

ContentPrimitive content_primitive(const Polynomial& f, VarIndex var) {
  Polynomial c = content(f, var);
  Polynomial p = divide_exact(f, c);
  return {std::move(c), std::move(p)};
}

Polynomial gcd(const Polynomial& f, const Polynomial& g) {
  if (f.is_zero() && g.is_zero()) throw AlgebraError("gcd of two zero polynomials");
  if (f.is_zero()) return sign_normalized(g);
  if (g.is_zero()) return sign_normalized(f);
  if (f.is_constant() || g.is_constant()) {
    Integer a = integer_content(f);
    Integer b = integer_content(g);
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return Polynomial(r);
  }
  if (f == g) return sign_normalized(f);
  const VarIndex var = std::max(f.variable_span(), g.variable_span()) - 1;
  if (auto df = dense::from_polynomial(f, var)) {
    if (auto dg = dense::from_polynomial(g, var)) {
      return dense::to_polynomial(dense::gcd(*df, *dg), var);
    }
  }
  if (!f.contains(var)) return gcd(f, content(g, var));
  if (!g.contains(var)) return gcd(content(f, var), g);

  auto [cf, pf] = content_primitive(f, var);
  auto [cg, pg] = content_primitive(g, var);
  Polynomial c = gcd(cf, cg);
  Polynomial p = primitive_gcd(pf, pg, var);
  return sign_normalized(c * p);
}

Polynomial squarefree_part(const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("squarefree part of the zero polynomial");
  if (auto vars = f.variables(); vars.size() == 1) {
    dense::Dense d = *dense::from_polynomial(f, vars.front());
    return sign_normalized(
        dense::to_polynomial(dense::exact_quotient(d, dense::gcd(d, dense::derivative(d))), vars.front()));
  }
  if (f.is_constant()) return sign_normalized(f);
  // Every factor of the primitive part contains v, so one derivative removes
  // all its repeated factors; the content is handled recursively.
  const VarIndex v = f.variables().back();
  auto [c, p] = content_primitive(f, v);
  Polynomial r = divide_exact(p, gcd(p, derivative(p, v)));
  if (!c.is_constant()) r *= squarefree_part(c);
  return sign_normalized(std::move(r));
}

Polynomial gcd_squarefree(const Polynomial& f, const std::optional<Polynomial>& g) {
  if (g) return gcd(f, *g);
  return squarefree_part(f);
}

}  // namespace cadorder
