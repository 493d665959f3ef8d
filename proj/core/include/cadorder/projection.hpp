// Projection operators: McCallum's sign-invariant operator, the reduced
// operator for truth-table invariance with equational constraints, full
// cascades, and the special polynomial sets that drive the NewH heuristics.
#pragma once

#include <span>
#include <vector>

#include "cadorder/formula.hpp"
#include "cadorder/polynomial.hpp"

namespace cadorder {

enum class ProjectionKind { kFull, kTti };

struct ProjectionSet {
  PolynomialSet polys;
  VarIndex eliminated = 0;
  /// Number of variables remaining after the step.
  std::size_t level = 0;
};

struct ProjectionCascade {
  /// stages[k] is the set after eliminating the k+1 greatest variables.
  std::vector<ProjectionSet> stages;
};

/// Drops zero and constant polynomials, replaces each by its squarefree part
/// with integer content removed, sign-normalizes and deduplicates.
PolynomialSet normalize_projection(std::vector<Polynomial> polys);

/// Drops zero and constant polynomials, sign-normalizes and deduplicates.
/// Degrees of the surviving objects are those of the raw inputs.
PolynomialSet normalize_raw(std::vector<Polynomial> polys);

/// Refines polynomials that each contain `var` and are primitive and
/// squarefree into a pairwise coprime set with the same product of factors.
std::vector<Polynomial> coprime_basis(std::vector<Polynomial> polys);

/// McCallum projection of `polys` eliminating `var`: contents, all
/// coefficients, discriminants and pairwise resultants of a squarefree
/// coprime basis of the primitive parts. Throws on a zero input.
ProjectionSet mccallum_project(std::span<const Polynomial> polys, VarIndex var);

/// Reduced projection with at most one declared EC (the first) per QFF.
/// Falls back to mccallum_project of all defining polynomials when no QFF
/// has an EC.
ProjectionSet tti_project(const Problem& p, VarIndex var);

/// Eliminates ordering[0], ordering[1], ... until one variable remains.
/// Only the first step is structure-aware for kind == kTti.
ProjectionCascade project_cascade(const Problem& p, const VariableOrdering& ordering,
                                  ProjectionKind kind);
ProjectionCascade project_cascade(std::span<const Polynomial> polys,
                                  const VariableOrdering& ordering);

/// The polynomials NewH measures with `var` as main variable: discriminants,
/// leading coefficients and cross-resultants of each QFF's first constraint;
/// the same over every constraint of EC-free QFFs; and the resultant of the
/// first two ECs of QFFs with more than one. Raw normalization only.
PolynomialSet newh_set(const Problem& p, VarIndex var);

/// Discriminants, leading coefficients and pairwise resultants over all
/// defining polynomials, minus newh_set(p, var).
PolynomialSet newh_omitted_set(const Problem& p, VarIndex var);

/// newh_set(p, var) together with newh_omitted_set(p, var).
PolynomialSet newh_closure(const Problem& p, VarIndex var);

}  // namespace cadorder
