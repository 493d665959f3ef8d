#include "cadorder/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <utility>

#include "cadorder/errors.hpp"

namespace cadorder {

namespace {

constexpr unsigned kExponentLimit = 0xFFFF;

// Descending canonical order.
bool term_greater(const Term& a, const Term& b) { return a.monomial > b.monomial; }

// Merges two descending term lists, scaling the second by `sign`.
std::vector<Term> merge_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                              int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    auto c = ia->monomial <=> ib->monomial;
    if (c > 0) {
      out.push_back(*ia++);
    } else if (c < 0) {
      out.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
      ++ib;
    } else {
      Integer sum = sign > 0 ? Integer(ia->coeff + ib->coeff) : Integer(ia->coeff - ib->coeff);
      if (sgn(sum) != 0) out.push_back({ia->monomial, std::move(sum)});
      ++ia;
      ++ib;
    }
  }
  for (; ia != a.end(); ++ia) out.push_back(*ia);
  for (; ib != b.end(); ++ib) {
    out.push_back({ib->monomial, sign > 0 ? ib->coeff : Integer(-ib->coeff)});
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------- Monomial

Monomial Monomial::variable(VarIndex var, unsigned exponent) {
  Monomial m;
  m.set_exponent(var, exponent);
  return m;
}

void Monomial::set_exponent(VarIndex var, unsigned exponent) {
  if (var >= kMaxVariables) {
    throw AlgebraError("variable index " + std::to_string(var) + " exceeds the supported " +
                       std::to_string(kMaxVariables) + " variables");
  }
  if (exponent > kExponentLimit) throw AlgebraError("exponent overflow");
  total_ = total_ - exps_[var] + exponent;
  exps_[var] = static_cast<Exponent>(exponent);
}

bool Monomial::divides(const Monomial& other) const {
  if (total_ > other.total_) return false;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

std::size_t Monomial::span() const {
  for (std::size_t i = kMaxVariables; i > 0; --i) {
    if (exps_[i - 1] != 0) return i;
  }
  return 0;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    unsigned e = unsigned{exps_[i]} + other.exps_[i];
    if (e > kExponentLimit) throw AlgebraError("exponent overflow");
    m.exps_[i] = static_cast<Exponent>(e);
  }
  m.total_ = total_ + other.total_;
  return m;
}

Monomial Monomial::operator/(const Monomial& other) const {
  Monomial m;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    m.exps_[i] = static_cast<Exponent>(exps_[i] - other.exps_[i]);
  }
  m.total_ = total_ - other.total_;
  return m;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

// -------------------------------------------------------------- Polynomial

Polynomial::Polynomial(long constant) {
  if (constant != 0) terms_.push_back({Monomial{}, Integer(constant)});
}

Polynomial::Polynomial(Integer constant) {
  if (sgn(constant) != 0) terms_.push_back({Monomial{}, std::move(constant)});
}

Polynomial::Polynomial(Monomial monomial, Integer coeff) {
  if (sgn(coeff) != 0) terms_.push_back({monomial, std::move(coeff)});
}

Polynomial Polynomial::variable(VarIndex var, unsigned exponent) {
  return Polynomial(Monomial::variable(var, exponent), Integer(1));
}

Polynomial Polynomial::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_greater);
  std::vector<Term> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back().monomial == t.monomial) {
      out.back().coeff += t.coeff;
      if (sgn(out.back().coeff) == 0) out.pop_back();
    } else if (sgn(t.coeff) != 0) {
      out.push_back(std::move(t));
    }
  }
  return Polynomial(std::move(out), 0);
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_constant());
}

bool Polynomial::is_one() const {
  return terms_.size() == 1 && terms_.front().monomial.is_constant() &&
         terms_.front().coeff == 1;
}

Integer Polynomial::constant_value() const {
  if (!terms_.empty() && terms_.back().monomial.is_constant()) return terms_.back().coeff;
  return 0;
}

const Integer& Polynomial::leading_coefficient() const {
  static const Integer zero(0);
  return terms_.empty() ? zero : terms_.front().coeff;
}

const Monomial& Polynomial::leading_monomial() const {
  static const Monomial one;
  return terms_.empty() ? one : terms_.front().monomial;
}

bool Polynomial::contains(VarIndex var) const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [var](const Term& t) { return t.monomial.contains(var); });
}

std::vector<VarIndex> Polynomial::variables() const {
  std::vector<VarIndex> out;
  for (VarIndex v = 0; v < kMaxVariables; ++v) {
    if (contains(v)) out.push_back(v);
  }
  return out;
}

std::size_t Polynomial::variable_span() const {
  std::size_t s = 0;
  for (const auto& t : terms_) s = std::max(s, t.monomial.span());
  return s;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (other.is_zero()) return *this;
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) { return *this = *this * other; }

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (sgn(scalar) == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= scalar;
  }
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const Polynomial& small = a.size() <= b.size() ? a : b;
  const Polynomial& large = a.size() <= b.size() ? b : a;
  if (small.size() == 1) {
    const Term& s = small.terms_.front();
    std::vector<Term> out;
    out.reserve(large.size());
    for (const auto& t : large.terms_) out.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
    return Polynomial(std::move(out), 0);
  }
  // Each row large * term is already sorted; merge rows pairwise so the
  // work stays near n*m*log(n).
  std::vector<std::vector<Term>> rows;
  rows.reserve(small.size());
  for (const auto& s : small.terms_) {
    std::vector<Term> row;
    row.reserve(large.size());
    for (const auto& t : large.terms_) row.push_back({t.monomial * s.monomial, t.coeff * s.coeff});
    rows.push_back(std::move(row));
  }
  while (rows.size() > 1) {
    std::vector<std::vector<Term>> next;
    next.reserve((rows.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
      next.push_back(merge_terms(rows[i], rows[i + 1], +1));
    }
    if (rows.size() % 2 == 1) next.push_back(std::move(rows.back()));
    rows = std::move(next);
  }
  return Polynomial(std::move(rows.front()), 0);
}

bool canonical_less(const Polynomial& a, const Polynomial& b) {
  if (a.terms_.size() != b.terms_.size()) return a.terms_.size() < b.terms_.size();
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    const Term& x = a.terms_[i];
    const Term& y = b.terms_[i];
    if (auto c = x.monomial <=> y.monomial; c != 0) return c < 0;
    if (int c = cmp(x.coeff, y.coeff); c != 0) return c < 0;
  }
  return false;
}

std::size_t Polynomial::hash() const {
  std::size_t h = terms_.size();
  for (const auto& t : terms_) {
    h = h * 31 + t.monomial.hash();
    h = h * 31 + static_cast<std::size_t>(mpz_get_si(t.coeff.get_mpz_t()));
  }
  return h;
}

// ------------------------------------------------------- free operations

PolynomialSet make_set(std::vector<Polynomial> polys) {
  std::sort(polys.begin(), polys.end(), PolynomialLess{});
  polys.erase(std::unique(polys.begin(), polys.end()), polys.end());
  return polys;
}

int degree(const Polynomial& f, VarIndex var) {
  if (f.is_zero()) return -1;
  unsigned d = 0;
  for (const auto& t : f.terms()) d = std::max(d, t.monomial.exponent(var));
  return static_cast<int>(d);
}

unsigned total_degree(const Polynomial& f) {
  if (f.is_zero()) throw AlgebraError("undefined tdeg");
  return f.leading_monomial().total_degree();
}

std::vector<Polynomial> coefficients(const Polynomial& f, VarIndex var) {
  int d = degree(f, var);
  if (d < 0) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial.exponent(var);
    Monomial m = t.monomial;
    m.set_exponent(var, 0);
    buckets[static_cast<std::size_t>(d) - e].push_back({m, t.coeff});
  }
  std::vector<Polynomial> out;
  out.reserve(buckets.size());
  // Removing one variable from a monomial can reorder terms, so re-sort.
  for (auto& b : buckets) out.push_back(Polynomial::from_terms(std::move(b)));
  return out;
}

Polynomial from_coefficients(std::span<const Polynomial> coeffs, VarIndex var) {
  std::vector<Term> terms;
  const std::size_t d = coeffs.empty() ? 0 : coeffs.size() - 1;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Monomial shift = Monomial::variable(var, static_cast<unsigned>(d - i));
    for (const auto& t : coeffs[i].terms()) {
      if (t.monomial.contains(var)) throw AlgebraError("coefficient contains the main variable");
      terms.push_back({t.monomial * shift, t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial leading_coefficient(const Polynomial& f, VarIndex var) {
  int d = degree(f, var);
  if (d < 0) return {};
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    if (t.monomial.exponent(var) == static_cast<unsigned>(d)) {
      Monomial m = t.monomial;
      m.set_exponent(var, 0);
      terms.push_back({m, t.coeff});
    }
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial derivative(const Polynomial& f, VarIndex var) {
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial.exponent(var);
    if (e == 0) continue;
    Monomial m = t.monomial;
    m.set_exponent(var, e - 1);
    terms.push_back({m, t.coeff * e});
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial result(1);
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

Polynomial evaluate(const Polynomial& f, VarIndex var, const Integer& value) {
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    unsigned e = t.monomial.exponent(var);
    Monomial m = t.monomial;
    m.set_exponent(var, 0);
    Integer c;
    mpz_pow_ui(c.get_mpz_t(), value.get_mpz_t(), e);
    terms.push_back({m, t.coeff * c});
  }
  return Polynomial::from_terms(std::move(terms));
}

Integer integer_content(const Polynomial& f) {
  Integer g = 0;
  for (const auto& t : f.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial sign_normalized(Polynomial f) {
  if (!f.is_zero() && sgn(f.leading_coefficient()) < 0) return -f;
  return f;
}

Polynomial divide_exact(const Polynomial& f, const Integer& divisor) {
  if (sgn(divisor) == 0) throw AlgebraError("division by zero");
  std::vector<Term> terms = f.terms();
  for (auto& t : terms) {
    if (!mpz_divisible_p(t.coeff.get_mpz_t(), divisor.get_mpz_t())) {
      throw AlgebraError("inexact integer division");
    }
    mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), divisor.get_mpz_t());
  }
  return Polynomial::from_terms(std::move(terms));
}

Polynomial divide_exact(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw AlgebraError("division by zero polynomial");
  if (g.is_constant()) return divide_exact(f, g.leading_coefficient());
  const Term& lead = g.terms().front();
  std::vector<Term> quotient;
  Polynomial rest = f;
  while (!rest.is_zero()) {
    const Term& top = rest.terms().front();
    if (!lead.monomial.divides(top.monomial) ||
        !mpz_divisible_p(top.coeff.get_mpz_t(), lead.coeff.get_mpz_t())) {
      throw AlgebraError("inexact polynomial division");
    }
    Term q{top.monomial / lead.monomial, Integer()};
    mpz_divexact(q.coeff.get_mpz_t(), top.coeff.get_mpz_t(), lead.coeff.get_mpz_t());
    rest -= g * Polynomial(q.monomial, q.coeff);
    quotient.push_back(std::move(q));
  }
  // Quotient terms are produced in descending order already.
  return Polynomial::from_terms(std::move(quotient));
}

std::string to_string(const Polynomial& f, std::span<const std::string> names) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : f.terms()) {
    Integer mag = abs(t.coeff);
    bool negative = sgn(t.coeff) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? '-' : '+');
    }
    first = false;
    bool wrote = false;
    if (mag != 1 || t.monomial.is_constant()) {
      os << mag.get_str();
      wrote = true;
    }
    for (VarIndex v = 0; v < kMaxVariables; ++v) {
      unsigned e = t.monomial.exponent(v);
      if (e == 0) continue;
      if (wrote) os << '*';
      if (v < names.size()) {
        os << names[v];
      } else {
        os << 'x' << v;
      }
      if (e > 1) os << '^' << e;
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace cadorder
