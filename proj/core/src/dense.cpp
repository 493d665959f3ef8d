#include "dense.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "cadorder/errors.hpp"

namespace cadorder::dense {

namespace {

using Word = std::uint64_t;
using ModPoly = std::vector<Word>;

Word pow_mod(Word b, Word e, Word p) {
  Word r = 1;
  for (b %= p; e > 0; e >>= 1, b = b * b % p) {
    if (e & 1) r = r * b % p;
  }
  return r;
}

Word inverse_mod(Word x, Word p) { return pow_mod(x, p - 2, p); }

void trim_mod(ModPoly& u) {
  while (!u.empty() && u.back() == 0) u.pop_back();
}

ModPoly reduce(const Dense& a, Word p) {
  ModPoly out;
  out.reserve(a.size());
  for (const auto& c : a) out.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  trim_mod(out);
  return out;
}

// Monic gcd in (Z/p)[x].
ModPoly gcd_mod(ModPoly a, ModPoly b, Word p) {
  while (!b.empty()) {
    const Word inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const Word q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = (a[j + shift] + (p - q) * b[j]) % p;
      trim_mod(a);
    }
    std::swap(a, b);
  }
  if (!a.empty()) {
    const Word inv = inverse_mod(a.back(), p);
    for (auto& c : a) c = c * inv % p;
  }
  return a;
}

// Primes below 2^31 in descending order, so products of residues fit in 64 bits.
class PrimeSequence {
 public:
  Word next() {
    do {
      current_ -= 2;
    } while (mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(current_)).get_mpz_t(), 25) == 0);
    return current_;
  }

 private:
  Word current_ = 2147483649u;  // 2^31 + 1; the first result is 2^31 - 1
};

Integer content(const Dense& p) {
  Integer g = 0;
  for (const auto& c : p) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Dense positive_lead(Dense p) {
  if (!p.empty() && sgn(p.back()) < 0) {
    for (auto& c : p) c = -c;
  }
  return p;
}

}  // namespace

void trim(Dense& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::optional<Dense> from_polynomial(const Polynomial& f, VarIndex var) {
  Dense out;
  if (f.is_zero()) return out;
  out.resize(static_cast<std::size_t>(degree(f, var)) + 1);
  for (const auto& t : f.terms()) {
    if (t.monomial.total_degree() != t.monomial.exponent(var)) return std::nullopt;
    out[t.monomial.exponent(var)] = t.coeff;
  }
  return out;
}

Polynomial to_polynomial(const Dense& p, VarIndex var) {
  std::vector<Term> terms;
  for (std::size_t i = p.size(); i-- > 0;) {
    if (sgn(p[i]) != 0) terms.push_back({Monomial::variable(var, static_cast<unsigned>(i)), p[i]});
  }
  return Polynomial::from_terms(std::move(terms));
}

Dense derivative(const Dense& p) {
  Dense out;
  for (std::size_t i = 1; i < p.size(); ++i) out.push_back(p[i] * static_cast<unsigned long>(i));
  trim(out);
  return out;
}

void make_primitive(Dense& p) {
  Integer g = content(p);
  if (g > 1) {
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
}

Dense pseudo_remainder(Dense a, const Dense& b) {
  const int db = deg(b);
  const Integer& lcb = b.back();
  int exponent = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
    Integer lca = a.back();
    for (auto& c : a) c *= lcb;
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= lca * b[j];
    a.pop_back();
    trim(a);
    --exponent;
  }
  if (exponent > 0 && !a.empty()) {
    Integer scale;
    mpz_pow_ui(scale.get_mpz_t(), lcb.get_mpz_t(), static_cast<unsigned long>(exponent));
    for (auto& c : a) c *= scale;
  }
  return a;
}

namespace {

// Quotient of a by b, or nullopt when the division is inexact.
std::optional<Dense> try_quotient(Dense a, const Dense& b) {
  const int db = deg(b);
  if (db < 0) throw AlgebraError("division by the zero polynomial");
  Dense q(static_cast<std::size_t>(std::max(deg(a) - db + 1, 0)));
  Integer c;
  while (!a.empty() && deg(a) >= db) {
    const std::size_t shift = static_cast<std::size_t>(deg(a) - db);
    if (!mpz_divisible_p(a.back().get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(c.get_mpz_t(), a.back().get_mpz_t(), b.back().get_mpz_t());
    for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] -= c * b[j];
    q[shift] = c;
    trim(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

}  // namespace

Dense exact_quotient(Dense a, const Dense& b) {
  auto q = try_quotient(std::move(a), b);
  if (!q) throw AlgebraError("inexact univariate division");
  return *q;
}

bool divides(const Dense& b, const Dense& a) { return try_quotient(a, b).has_value(); }

Dense gcd(const Dense& a, const Dense& b) {
  if (a.empty() || b.empty()) throw AlgebraError("gcd of the zero polynomial");
  Integer ca = content(a);
  Integer cb = content(b);
  Integer c;
  mpz_gcd(c.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  if (deg(a) == 0 || deg(b) == 0) return {c};

  Dense pa = a;
  Dense pb = b;
  make_primitive(pa);
  make_primitive(pb);
  if (deg(pa) < deg(pb)) std::swap(pa, pb);
  if (divides(pb, pa)) {
    Dense g = positive_lead(pb);
    for (auto& x : g) x *= c;
    return g;
  }

  Integer gamma;
  mpz_gcd(gamma.get_mpz_t(), pa.back().get_mpz_t(), pb.back().get_mpz_t());

  PrimeSequence primes;
  int best = deg(pb) + 1;
  Dense acc;       // images combined so far, coefficients in [0, modulus)
  Integer modulus;
  Dense previous;  // last symmetric reconstruction
  while (true) {
    const Word p = primes.next();
    if (mpz_fdiv_ui(pa.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(pb.back().get_mpz_t(), p) == 0) {
      continue;
    }
    ModPoly g = gcd_mod(reduce(pa, p), reduce(pb, p), p);
    const int d = static_cast<int>(g.size()) - 1;
    if (d == 0) return {c};
    if (d > best) continue;  // unlucky prime
    const Word scale = mpz_fdiv_ui(gamma.get_mpz_t(), p);
    for (auto& x : g) x = x * scale % p;
    if (d < best) {
      best = d;
      acc.assign(g.begin(), g.end());
      modulus = static_cast<unsigned long>(p);
      previous.clear();
      continue;
    }
    // Chinese remaindering: acc + modulus * ((g - acc) / modulus mod p).
    const Word minv = inverse_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      const Word r = mpz_fdiv_ui(acc[i].get_mpz_t(), p);
      const Word t = (g[i] + p - r) % p * minv % p;
      acc[i] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(p);

    Dense sym = acc;
    const Integer half = modulus / 2;
    for (auto& x : sym) {
      if (x > half) x -= modulus;
    }
    if (sym == previous) {
      Dense candidate = sym;
      make_primitive(candidate);
      candidate = positive_lead(std::move(candidate));
      if (divides(candidate, pa) && divides(candidate, pb)) {
        for (auto& x : candidate) x *= c;
        return candidate;
      }
    }
    previous = std::move(sym);
  }
}

namespace {

// Resultant in (Z/p)[x] of polynomials with nonzero leading entries.
Word resultant_mod(ModPoly a, ModPoly b, Word p) {
  Word res = 1;
  while (b.size() > 1) {
    const std::size_t da = a.size() - 1;
    const std::size_t db = b.size() - 1;
    const Word inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size() && !a.empty()) {
      const Word q = a.back() * inv % p;
      const std::size_t shift = a.size() - b.size();
      for (std::size_t j = 0; j < b.size(); ++j) a[j + shift] = (a[j + shift] + (p - q) * b[j]) % p;
      trim_mod(a);
    }
    if (a.empty()) return 0;
    const std::size_t dr = a.size() - 1;
    if ((da * db) % 2 == 1) res = (p - res) % p;
    res = res * pow_mod(b.back(), da - dr, p) % p;
    std::swap(a, b);
  }
  return res * pow_mod(b.back(), a.size() - 1, p) % p;
}

// Coefficients of f in var, each a dense polynomial in other.
std::vector<Dense> split(const Polynomial& f, VarIndex var, VarIndex other) {
  std::vector<Dense> rows(static_cast<std::size_t>(degree(f, var)) + 1);
  for (const auto& t : f.terms()) {
    Dense& row = rows[t.monomial.exponent(var)];
    const std::size_t k = t.monomial.exponent(other);
    if (row.size() <= k) row.resize(k + 1);
    row[k] = t.coeff;
  }
  return rows;
}

Word eval_mod(const Dense& row, Word x, Word p) {
  Word acc = 0;
  for (std::size_t k = row.size(); k-- > 0;) {
    acc = (acc * x + mpz_fdiv_ui(row[k].get_mpz_t(), p)) % p;
  }
  return acc;
}

// log2 of sum over rows of (1-norm of row)^2.
double log2_row_norms(const std::vector<Dense>& rows) {
  mpz_class total = 0;
  for (const auto& row : rows) {
    mpz_class norm = 0;
    for (const auto& c : row) norm += abs(c);
    total += norm * norm;
  }
  return static_cast<double>(mpz_sizeinbase(total.get_mpz_t(), 2));
}

}  // namespace

Polynomial bivariate_resultant(const Polynomial& f, const Polynomial& g, VarIndex var,
                               VarIndex other) {
  const std::vector<Dense> fr = split(f, var, other);
  const std::vector<Dense> gr = split(g, var, other);
  const std::size_t m = fr.size() - 1;
  const std::size_t n = gr.size() - 1;
  const std::size_t dfw = static_cast<std::size_t>(std::max(degree(f, other), 0));
  const std::size_t dgw = static_cast<std::size_t>(std::max(degree(g, other), 0));
  const std::size_t bound_deg = std::min(n * dfw + m * dgw,
                                         static_cast<std::size_t>(total_degree(f)) * total_degree(g));
  // On |w| = 1 each Sylvester entry is bounded by the 1-norm of its
  // coefficient, so Hadamard bounds |res(w)| and thereby every coefficient.
  const double bits = 0.5 * static_cast<double>(n) * log2_row_norms(fr) +
                      0.5 * static_cast<double>(m) * log2_row_norms(gr) + 2.0;

  PrimeSequence primes;
  Dense acc(bound_deg + 1);
  Integer modulus = 1;
  double covered = 0.0;
  std::vector<Word> xs;
  std::vector<Word> ys;
  while (covered < bits) {
    const Word p = primes.next();
    xs.clear();
    ys.clear();
    ModPoly fa(m + 1);
    ModPoly ga(n + 1);
    for (Word x = 0; xs.size() < bound_deg + 1; ++x) {
      if (x >= p) throw InvariantViolation("too few evaluation points");
      for (std::size_t i = 0; i <= m; ++i) fa[i] = eval_mod(fr[i], x, p);
      for (std::size_t i = 0; i <= n; ++i) ga[i] = eval_mod(gr[i], x, p);
      if (fa.back() == 0 || ga.back() == 0) continue;
      xs.push_back(x);
      ys.push_back(resultant_mod(fa, ga, p));
    }
    // Newton divided differences, then expansion to monomial coefficients.
    std::vector<Word> c = ys;
    for (std::size_t j = 1; j < c.size(); ++j) {
      for (std::size_t i = c.size() - 1; i >= j; --i) {
        const Word num = (c[i] + p - c[i - 1]) % p;
        const Word den = (xs[i] + p - xs[i - j]) % p;
        c[i] = num * inverse_mod(den, p) % p;
      }
    }
    std::vector<Word> poly(c.size(), 0);
    for (std::size_t i = c.size(); i-- > 0;) {
      // poly = poly * (w - xs[i]) + c[i]
      for (std::size_t k = poly.size() - 1; k > 0; --k) {
        poly[k] = (poly[k - 1] + (p - xs[i]) * poly[k] % p) % p;
      }
      poly[0] = ((p - xs[i]) * poly[0] % p + c[i]) % p;
    }
    const Word minv = inverse_mod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
    for (std::size_t k = 0; k < acc.size(); ++k) {
      const Word r = mpz_fdiv_ui(acc[k].get_mpz_t(), p);
      const Word t = (poly[k] + p - r) % p * minv % p;
      acc[k] += modulus * static_cast<unsigned long>(t);
    }
    modulus *= static_cast<unsigned long>(p);
    covered += std::log2(static_cast<double>(p));
  }
  const Integer half = modulus / 2;
  std::vector<Term> terms;
  for (std::size_t k = acc.size(); k-- > 0;) {
    Integer v = acc[k];
    if (v > half) v -= modulus;
    if (sgn(v) != 0) terms.push_back({Monomial::variable(other, static_cast<unsigned>(k)), v});
  }
  return Polynomial::from_terms(std::move(terms));
}

Dense squarefree(const Dense& p) {
  Dense out = p;
  if (deg(p) >= 1) {
    Dense g = gcd(p, derivative(p));
    if (deg(g) >= 1) out = exact_quotient(p, g);
  }
  make_primitive(out);
  return positive_lead(std::move(out));
}

}  // namespace cadorder::dense
