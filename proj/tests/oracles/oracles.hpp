// Slow, independent reference computations used only by tests.
#pragma once

#include <cstdint>
#include <vector>

#include "cadorder/formula.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/polynomial.hpp"

namespace oracle {

using cadorder::Integer;
using cadorder::Polynomial;
using cadorder::Problem;
using cadorder::VarIndex;
using cadorder::VariableOrdering;

/// det of the Sylvester matrix of f, g in var by memoized cofactor expansion.
Polynomial sylvester_resultant(const Polynomial& f, const Polynomial& g, VarIndex var);

/// Distinct real roots of a nonzero univariate integer polynomial, by
/// Descartes' rule of signs on bisected rational intervals inside the Cauchy
/// bound. Coefficients lowest power first.
std::size_t count_real_roots(const std::vector<Integer>& coeffs);
std::size_t count_real_roots(const Polynomial& f, VarIndex var);

/// Projection cascade recomputed with Sylvester resultants.
std::vector<std::vector<Polynomial>> naive_cascade(const Problem& p, const VariableOrdering& o,
                                                   cadorder::ProjectionKind kind);

std::uint64_t naive_sotd(const Problem& p, const std::vector<std::vector<Polynomial>>& cascade);
std::uint64_t naive_ndrr(const std::vector<std::vector<Polynomial>>& cascade, VarIndex last);

/// Minimizing ordering over all permutations (lex-first among ties).
VariableOrdering naive_search(const Problem& p, cadorder::Measure m, cadorder::ProjectionKind kind);

/// All n! orderings in lexicographic order.
std::vector<VariableOrdering> all_orderings(std::size_t n);

}  // namespace oracle
