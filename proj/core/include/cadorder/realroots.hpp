// Exact counting of distinct real roots with Sturm sequences.
#pragma once

#include <span>
#include <vector>

#include "cadorder/polynomial.hpp"

namespace cadorder {

struct SturmChain {
  VarIndex var = 0;
  /// seq[0] is the squarefree part of the input, seq[1] its derivative and
  /// each later entry a positively scaled negated remainder of the previous
  /// two. The chain ends at a nonzero constant.
  std::vector<Polynomial> seq;
};

/// Throws AlgebraError if f is zero or contains a variable other than var.
SturmChain sturm_chain(const Polynomial& f, VarIndex var);

/// Sign variations at -inf minus those at +inf.
std::size_t count_real_roots(const Polynomial& f, VarIndex var);

/// Sum of count_real_roots over the sign-normalized, deduplicated set.
/// Constants contribute nothing.
std::size_t ndrr(std::span<const Polynomial> polys, VarIndex var);

}  // namespace cadorder
