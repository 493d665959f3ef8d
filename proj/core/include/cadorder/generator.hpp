// Seeded random problems shaped like the benchmark corpus: sparse
// polynomials, one QFF per label digit, each QFF holding `digit` equations
// followed by strict inequalities.
#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/formula.hpp"

namespace cadorder {

/// The generator's random stream. std::mt19937_64 is fully specified by the
/// standard, so streams are identical across platforms; bounded draws use
/// rejection sampling rather than std::uniform_int_distribution, whose
/// output is implementation-defined.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed for item `index` of type `label` in a corpus seeded with `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view label, std::uint64_t index);

struct GenParams {
  unsigned num_vars = 3;
  unsigned max_tdeg = 4;
  unsigned terms = 4;
  unsigned coeff_bound = 20;
  std::uint64_t seed = 0;
};

/// Throws InputError when a bound is zero or num_vars exceeds kMaxVariables.
void check_params(const GenParams& params);

/// x, y, z for up to three variables, otherwise x1, x2, ...
std::vector<std::string> default_variable_names(unsigned n);

/// A non-constant polynomial with at most params.terms monomials of total
/// degree <= max_tdeg, drawn uniformly without replacement, and coefficients
/// uniform over the nonzero integers in [-coeff_bound, coeff_bound].
Polynomial random_polynomial(const GenParams& params, RngStream& stream);

/// Throws InputError unless every character is a digit 0..2.
void check_label(std::string_view label);

/// One QFF per digit d: d equations then 2 - d constraints `f < 0`, each
/// polynomial sign-normalized. Uses a stream seeded with params.seed.
Problem random_problem(std::string_view label, const GenParams& params);

struct CorpusItem {
  std::string id;  // "<label>-<index>", index zero-padded to 3 digits
  std::string label;
  std::uint64_t seed = 0;
  Problem problem;
};

/// count_per_type problems per label, ordered by (label position, index).
/// Item seeds come from derive_seed(params.seed, label, index), so content
/// does not depend on generation order.
std::vector<CorpusItem> generate_corpus(const std::vector<std::string>& labels,
                                        std::size_t count_per_type, const GenParams& params);

}  // namespace cadorder
