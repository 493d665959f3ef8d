#include "cadorder/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <limits>

#include "cadorder/errors.hpp"

namespace cadorder {

namespace {

// All monomials in n variables of total degree <= d, ascending.
std::vector<Monomial> monomials_up_to(unsigned n, unsigned d) {
  std::vector<Monomial> out;
  std::vector<unsigned> exps(n, 0);
  // Odometer over exponent vectors with a total-degree bound.
  while (true) {
    Monomial m;
    for (unsigned i = 0; i < n; ++i) m.set_exponent(i, exps[i]);
    out.push_back(m);
    unsigned i = 0;
    while (i < n) {
      ++exps[i];
      unsigned total = 0;
      for (unsigned e : exps) total += e;
      if (total <= d) break;
      exps[i] = 0;
      ++i;
    }
    if (i == n) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::uint64_t RngStream::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

std::int64_t RngStream::between(std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
}

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index) {
  // FNV-1a over the label.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (char c : label) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return mix64(mix64(mix64(seed) ^ h) ^ index);
}

void check_params(const GenParams& params) {
  if (params.num_vars == 0 || params.max_tdeg == 0 || params.terms == 0 ||
      params.coeff_bound == 0) {
    throw InputError("generator bounds must be positive");
  }
  if (params.num_vars > kMaxVariables) {
    throw InputError("at most " + std::to_string(kMaxVariables) + " variables are supported");
  }
}

std::vector<std::string> default_variable_names(unsigned n) {
  static const char* const kSmall[] = {"x", "y", "z"};
  std::vector<std::string> names;
  for (unsigned i = 0; i < n; ++i) {
    names.push_back(n <= 3 ? std::string(kSmall[i]) : "x" + std::to_string(i + 1));
  }
  return names;
}

Polynomial random_polynomial(const GenParams& params, RngStream& stream) {
  check_params(params);
  std::vector<Monomial> pool = monomials_up_to(params.num_vars, params.max_tdeg);
  const std::size_t k = std::min<std::size_t>(params.terms, pool.size());
  const auto bound = static_cast<std::int64_t>(params.coeff_bound);
  while (true) {
    std::vector<Monomial> choice = pool;
    for (std::size_t i = 0; i < k; ++i) {
      std::size_t j = i + stream.below(choice.size() - i);
      std::swap(choice[i], choice[j]);
    }
    std::vector<Term> terms;
    for (std::size_t i = 0; i < k; ++i) {
      // Nonzero in [-bound, bound]: draw from 2*bound values and skip 0.
      std::int64_t c = stream.between(-bound, bound - 1);
      if (c >= 0) ++c;
      terms.push_back({choice[i], Integer(static_cast<long>(c))});
    }
    Polynomial f = Polynomial::from_terms(std::move(terms));
    if (!f.is_constant()) return f;
  }
}

void check_label(std::string_view label) {
  if (label.empty()) throw InputError("empty system type label");
  for (char c : label) {
    if (c < '0' || c > '2') {
      throw InputError("malformed system type label '" + std::string(label) +
                       "': digits must be 0, 1 or 2");
    }
  }
}

Problem random_problem(std::string_view label, const GenParams& params) {
  check_label(label);
  check_params(params);
  RngStream stream(params.seed);
  Problem p;
  p.variables = default_variable_names(params.num_vars);
  for (char digit : label) {
    const int ecs = digit - '0';
    Qff q;
    for (int i = 0; i < 2; ++i) {
      Polynomial f = sign_normalized(random_polynomial(params, stream));
      q.constraints.push_back({std::move(f), i < ecs ? Relation::kEq : Relation::kLt});
    }
    p.qffs.push_back(std::move(q));
  }
  return p;
}

std::vector<CorpusItem> generate_corpus(const std::vector<std::string>& labels,
                                        std::size_t count_per_type, const GenParams& params) {
  if (count_per_type == 0) throw InputError("count per type must be at least 1");
  for (const auto& l : labels) check_label(l);
  std::vector<CorpusItem> out;
  for (const auto& label : labels) {
    for (std::size_t i = 0; i < count_per_type; ++i) {
      GenParams item_params = params;
      item_params.seed = derive_seed(params.seed, label, i);
      char id[32];
      std::snprintf(id, sizeof id, "-%03zu", i);
      out.push_back({label + id, label, item_params.seed, random_problem(label, item_params)});
    }
  }
  return out;
}

}  // namespace cadorder
