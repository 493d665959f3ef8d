// Variable ordering heuristics.
//
// Every heuristic orders variables so that a smaller measure means greater
// in the ordering (eliminated earlier). Ties that survive every criterion are
// broken lexicographically: positional heuristics prefer the variable
// declared first, enumerating heuristics prefer the ordering whose sequence
// of declaration indices is lexicographically smallest.
#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cadorder/formula.hpp"
#include "cadorder/projection.hpp"

namespace cadorder {

enum class HeuristicId {
  kTriangular,
  kBrown,
  kSotd,
  kNdrr,
  kSn,
  kNs,
  kGs,
  kSTti,
  kNTti,
  kGsTti,
  kNewH,
  kNewHExt,
};

inline constexpr std::array<HeuristicId, 12> kAllHeuristics = {
    HeuristicId::kTriangular, HeuristicId::kBrown, HeuristicId::kSotd,  HeuristicId::kNdrr,
    HeuristicId::kSn,         HeuristicId::kNs,    HeuristicId::kGs,    HeuristicId::kSTti,
    HeuristicId::kNTti,       HeuristicId::kGsTti, HeuristicId::kNewH,  HeuristicId::kNewHExt,
};

/// Stable CLI/CSV name: triangular, brown, sotd, ndrr, sn, ns, gs, s-tti,
/// n-tti, gs-tti, newh, newh-ext.
std::string_view heuristic_name(HeuristicId id);
std::optional<HeuristicId> parse_heuristic(std::string_view name);

enum class Measure { kSotd, kNdrr };
std::string_view measure_name(Measure m);

/// Named integer measures recorded for one candidate (an ordering or a
/// variable), in the order they were consulted.
using MeasureTrace = std::vector<std::pair<std::string, std::uint64_t>>;

struct HeuristicReport {
  HeuristicId id = HeuristicId::kTriangular;
  VariableOrdering choice;
  /// Every evaluated ordering with its measures (enumerating heuristics), or
  /// the chosen ordering alone (positional heuristics).
  std::map<VariableOrdering, MeasureTrace> candidates;
  /// Per-variable measures for positional and greedy heuristics.
  std::map<VarIndex, MeasureTrace> variable_measures;
  /// Criteria that separated at least one decision, "lex" for the fallback.
  std::vector<std::string> tiebreaks_used;
  std::chrono::duration<double> elapsed{0};
  bool fallback_lex = false;
};

struct VariableMeasures {
  std::uint64_t max_degree = 0;           // m1
  std::uint64_t max_lcoeff_tdeg = 0;      // m2
  std::uint64_t sum_degree = 0;           // m3
  std::uint64_t max_monomial_tdeg = 0;    // m4
  std::uint64_t monomial_count = 0;       // m5

  friend bool operator==(const VariableMeasures&, const VariableMeasures&) = default;
};

/// The five input measures of variable v over P. m2, m4 and m5 only range
/// over polynomials or monomials containing v and are 0 when there are none.
/// m5 counts distinct monomials.
VariableMeasures variable_measures(std::span<const Polynomial> polys, VarIndex var);

/// Sorts by (m1, m2, m3).
HeuristicReport triangular_order(std::span<const Polynomial> polys, std::size_t num_vars);

/// Sorts by (m1, m4, m5).
HeuristicReport brown_order(std::span<const Polynomial> polys, std::size_t num_vars);

/// Sum over polynomials of the sum of total degrees of their monomials.
std::uint64_t sotd(std::span<const Polynomial> polys);
std::uint64_t sotd(std::span<const PolynomialSet> sets);

struct SearchOptions {
  /// ordering_search refuses problems with more variables than this.
  std::size_t ordering_cap = 8;
};

/// Enumerates all orderings and minimizes `measure` of its projection
/// cascade. sotd covers the input polynomials and every stage; ndrr covers
/// the final univariate stage.
HeuristicReport ordering_search(const Problem& p, Measure measure, ProjectionKind kind,
                                const SearchOptions& options = {});

/// Minimizes `primary`, then `secondary` among the tied orderings.
HeuristicReport combined_order(const Problem& p, Measure primary, Measure secondary,
                               ProjectionKind kind = ProjectionKind::kFull,
                               const SearchOptions& options = {});

/// Allocates variables greatest-first, each time fixing the one whose
/// one-step projection has the least sotd.
HeuristicReport greedy_sotd_order(const Problem& p, ProjectionKind kind);

/// Orders by maximum input degree, breaking ties by maximum degree over
/// newh_set with the greatest variable as main variable; with `extended`,
/// then over newh_omitted_set.
HeuristicReport newh_order(const Problem& p, bool extended);

/// Runs heuristic `id` and records its wall-clock cost.
HeuristicReport suggest(const Problem& p, HeuristicId id, const SearchOptions& options = {});

/// Measures a single ordering: sotd over input plus stages and ndrr of the
/// final stage.
struct OrderingMeasures {
  ProjectionCascade cascade;
  std::uint64_t sotd = 0;
  std::uint64_t ndrr = 0;
};
OrderingMeasures measure_ordering(const Problem& p, const VariableOrdering& ordering,
                                  ProjectionKind kind);

}  // namespace cadorder
