// Heuristic sweeps over a corpus and the percentage-savings evaluation
// against an externally produced table of CAD costs.
//
// Savings for a problem, a heuristic and its chosen ordering o:
//   cells: 100 * (avg_cells - cells(o)) / avg_cells
//   time:  100 * (avg_time - heuristic_time - time(o)) / avg_time
// where the averages run over every ordering of the problem. All arithmetic
// is exact; rounding happens only when formatting.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "cadorder/csv.hpp"
#include "cadorder/formula.hpp"
#include "cadorder/heuristics.hpp"

namespace cadorder {

struct NamedProblem {
  std::string id;
  Problem problem;
};

struct ChoiceRow {
  std::string problem_id;
  std::string heuristic;
  std::string ordering;            // "z>y>x", empty on error
  std::string heuristic_time_s;    // plain decimal seconds
  bool fallback_lex = false;
  std::string status = "ok";       // "ok", "ordering-cap-exceeded", "error"

  friend bool operator==(const ChoiceRow&, const ChoiceRow&) = default;
};

struct SweepOptions {
  unsigned jobs = 1;
  SearchOptions search;
};

/// Runs every heuristic on every problem. Rows are sorted by problem id,
/// then by heuristic in declaration order of HeuristicId, whatever the
/// number of jobs. Heuristic failures become rows with a non-ok status.
std::vector<ChoiceRow> run_sweep(const std::vector<NamedProblem>& corpus,
                                 const std::vector<HeuristicId>& heuristics,
                                 const SweepOptions& options = {});

CsvTable choices_to_csv(const std::vector<ChoiceRow>& rows);
std::vector<ChoiceRow> choices_from_csv(const CsvTable& table, std::string_view origin = "choices");

struct Cost {
  Rational cells;
  Rational time_s;
};

/// problem id -> ordering -> cost.
struct CostTable {
  std::map<std::string, std::map<std::string, Cost>> rows;

  /// Number of variables implied by the problem's ordering strings.
  [[nodiscard]] std::size_t num_variables(const std::string& problem_id) const;
  /// True when fewer than n! orderings are present (timeouts).
  [[nodiscard]] bool is_partial(const std::string& problem_id) const;
};

/// Reads problem_id, ordering, cells, time_s. Cells must be positive and
/// times nonnegative; duplicates are rejected.
CostTable costs_from_csv(const CsvTable& table, std::string_view origin = "costs");

struct SavingsRow {
  std::string problem_id;
  std::string group;
  std::string heuristic;
  std::string ordering;
  Rational cell_saving_pct;
  Rational time_saving_pct;
};

struct AggregateRow {
  std::string group;  // system type or "all"
  std::string heuristic;
  std::size_t problems = 0;
  Rational mean_cell_saving_pct;
  Rational mean_time_saving_pct;
};

struct CostSummaryRow {
  std::string group;
  std::size_t problems = 0;
  Rational mean_cells, median_cells, median_avg_cells;
  Rational mean_time_s, median_time_s, median_avg_time_s;
};

struct SavingsReport {
  std::vector<SavingsRow> rows;
  std::vector<AggregateRow> aggregate;
  std::vector<CostSummaryRow> summary;
  /// Problems dropped because some orderings have no cost row.
  std::vector<std::string> partial;
};

/// Group label for a problem: labels[id] when present, otherwise the id's
/// prefix before '-' when that prefix is all digits, otherwise "".
std::string group_of(const std::string& problem_id,
                     const std::map<std::string, std::string>& labels);

/// Throws InputError naming problem and ordering when a choice of a complete
/// problem has no cost row, or when a problem has no cost rows at all.
SavingsReport compute_savings(const CostTable& costs, const std::vector<ChoiceRow>& choices,
                              const std::map<std::string, std::string>& labels = {});

CsvTable savings_to_csv(const SavingsReport& report);
CsvTable aggregate_to_csv(const SavingsReport& report);
CsvTable summary_to_csv(const SavingsReport& report);

}  // namespace cadorder
