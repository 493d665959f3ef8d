#include "cadorder/realroots.hpp"

#include <utility>

#include "cadorder/errors.hpp"
#include "dense.hpp"

namespace cadorder {

namespace {

using dense::Dense;
using dense::deg;

Dense to_dense(const Polynomial& f, VarIndex var) {
  if (f.is_zero()) throw AlgebraError("Sturm chain of the zero polynomial");
  auto d = dense::from_polynomial(f, var);
  if (!d) throw AlgebraError("Sturm chain needs a univariate polynomial");
  return *d;
}

// Sturm sequence of f: f, f', then negated remainders. Each remainder is the
// sign-corrected pseudo-remainder divided by the magnitude of the
// subresultant divisor, which keeps coefficients at subresultant size
// without per-step content computations. When f is not squarefree the chain
// ends at gcd(f, f') and every entry carries that common factor, which
// leaves sign variations at any non-root unchanged.
std::vector<Dense> dense_chain(Dense f) {
  std::vector<Dense> chain;
  dense::make_primitive(f);
  chain.push_back(std::move(f));
  if (deg(chain[0]) < 1) return chain;
  chain.push_back(dense::derivative(chain[0]));
  Integer g = 1;
  Integer h = 1;
  while (deg(chain.back()) > 0) {
    const Dense& a = chain[chain.size() - 2];
    const Dense& b = chain.back();
    const int delta = deg(a) - deg(b);
    Dense r = dense::pseudo_remainder(a, b);
    if (r.empty()) break;
    // prem scales by lc(b)^(delta+1); undo the sign of that factor.
    const bool flip = sgn(b.back()) < 0 && (delta + 1) % 2 != 0;
    Integer divisor;
    mpz_pow_ui(divisor.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    divisor *= g;
    for (auto& c : r) {
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
      if (!flip) c = -c;
    }
    g = abs(b.back());
    if (delta == 0) {
      // h unchanged
    } else if (delta == 1) {
      h = g;
    } else {
      Integer num;
      Integer den;
      mpz_pow_ui(num.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    chain.push_back(std::move(r));
  }
  return chain;
}

std::size_t variations(const std::vector<int>& signs) {
  std::size_t n = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++n;
    last = s;
  }
  return n;
}

std::size_t count_dense(const Dense& f) {
  auto chain = dense_chain(f);
  std::vector<int> at_neg;
  std::vector<int> at_pos;
  for (const auto& p : chain) {
    if (p.empty()) continue;
    int s = sgn(p.back());
    at_pos.push_back(s);
    at_neg.push_back(deg(p) % 2 == 0 ? s : -s);
  }
  return variations(at_neg) - variations(at_pos);
}

}  // namespace

SturmChain sturm_chain(const Polynomial& f, VarIndex var) {
  SturmChain chain{var, {}};
  for (const auto& p : dense_chain(dense::squarefree(to_dense(f, var)))) {
    chain.seq.push_back(dense::to_polynomial(p, var));
  }
  return chain;
}

std::size_t count_real_roots(const Polynomial& f, VarIndex var) {
  return count_dense(to_dense(f, var));
}

std::size_t ndrr(std::span<const Polynomial> polys, VarIndex var) {
  std::vector<Polynomial> normalized;
  for (const auto& f : polys) {
    if (!f.is_constant()) normalized.push_back(sign_normalized(f));
  }
  std::size_t total = 0;
  for (const auto& f : make_set(std::move(normalized))) total += count_real_roots(f, var);
  return total;
}

}  // namespace cadorder
