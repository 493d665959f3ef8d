#include "cadorder/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <set>
#include <thread>

#include "cadorder/errors.hpp"

namespace cadorder {

namespace {

std::size_t heuristic_rank(const std::string& name) {
  auto id = parse_heuristic(name);
  return id ? static_cast<std::size_t>(*id) : kAllHeuristics.size();
}

bool row_less(const std::string& pa, const std::string& ha, const std::string& pb,
              const std::string& hb) {
  if (pa != pb) return pa < pb;
  std::size_t ra = heuristic_rank(ha);
  std::size_t rb = heuristic_rank(hb);
  if (ra != rb) return ra < rb;
  return ha < hb;
}

std::string seconds(std::chrono::duration<double> d) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", d.count());
  return buf;
}

ChoiceRow run_one(const NamedProblem& item, HeuristicId id, const SearchOptions& search) {
  ChoiceRow row;
  row.problem_id = item.id;
  row.heuristic = std::string(heuristic_name(id));
  try {
    HeuristicReport r = suggest(item.problem, id, search);
    row.ordering = r.choice.to_string(item.problem.variables);
    row.heuristic_time_s = seconds(r.elapsed);
    row.fallback_lex = r.fallback_lex;
  } catch (const OrderingCapExceeded&) {
    row.status = "ordering-cap-exceeded";
    row.heuristic_time_s = "0";
  } catch (const std::exception&) {
    row.status = "error";
    row.heuristic_time_s = "0";
  }
  return row;
}

Rational mean(const std::vector<Rational>& values) {
  Rational sum = 0;
  for (const auto& v : values) sum += v;
  return values.empty() ? Rational(0) : Rational(sum / static_cast<long>(values.size()));
}

Rational median(std::vector<Rational> values) {
  if (values.empty()) return 0;
  std::sort(values.begin(), values.end());
  const std::size_t n = values.size();
  if (n % 2 == 1) return values[n / 2];
  return (values[n / 2 - 1] + values[n / 2]) / 2;
}

// Report column order for known system types, then other labels, then "all".
std::vector<std::string> ordered_groups(const std::set<std::string>& present) {
  static const std::vector<std::string> kKnown = {"22", "12", "11", "20", "10", "00"};
  std::vector<std::string> out;
  for (const auto& g : kKnown) {
    if (present.count(g) != 0) out.push_back(g);
  }
  for (const auto& g : present) {
    if (g != "all" && std::find(kKnown.begin(), kKnown.end(), g) == kKnown.end()) out.push_back(g);
  }
  out.emplace_back("all");
  return out;
}

std::size_t factorial(std::size_t n) {
  std::size_t r = 1;
  for (std::size_t i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

std::vector<ChoiceRow> run_sweep(const std::vector<NamedProblem>& corpus,
                                 const std::vector<HeuristicId>& heuristics,
                                 const SweepOptions& options) {
  std::vector<std::pair<std::size_t, HeuristicId>> work;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    for (HeuristicId id : heuristics) work.emplace_back(i, id);
  }
  std::vector<ChoiceRow> rows(work.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < work.size(); k = next++) {
      rows[k] = run_one(corpus[work[k].first], work[k].second, options.search);
    }
  };
  const unsigned jobs = std::max(1u, std::min<unsigned>(options.jobs, static_cast<unsigned>(work.size())));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ChoiceRow& a, const ChoiceRow& b) {
    return row_less(a.problem_id, a.heuristic, b.problem_id, b.heuristic);
  });
  return rows;
}

CsvTable choices_to_csv(const std::vector<ChoiceRow>& rows) {
  CsvTable t;
  t.header = {"problem_id", "heuristic", "ordering", "heuristic_time_s", "fallback_lex", "status"};
  for (const auto& r : rows) {
    t.rows.push_back({r.problem_id, r.heuristic, r.ordering, r.heuristic_time_s,
                      r.fallback_lex ? "1" : "0", r.status});
  }
  return t;
}

std::vector<ChoiceRow> choices_from_csv(const CsvTable& table, std::string_view origin) {
  const std::size_t pid = table.column("problem_id", origin);
  const std::size_t heu = table.column("heuristic", origin);
  const std::size_t ord = table.column("ordering", origin);
  const std::size_t tim = table.column("heuristic_time_s", origin);
  const std::size_t fb = table.column("fallback_lex", origin);
  const std::size_t st = table.column("status", origin);
  std::vector<ChoiceRow> rows;
  for (const auto& r : table.rows) {
    rows.push_back({r[pid], r[heu], r[ord], r[tim], r[fb] == "1" || r[fb] == "true", r[st]});
  }
  return rows;
}

std::size_t CostTable::num_variables(const std::string& problem_id) const {
  auto it = rows.find(problem_id);
  if (it == rows.end() || it->second.empty()) return 0;
  const std::string& o = it->second.begin()->first;
  return static_cast<std::size_t>(std::count(o.begin(), o.end(), '>')) + 1;
}

bool CostTable::is_partial(const std::string& problem_id) const {
  auto it = rows.find(problem_id);
  if (it == rows.end()) return true;
  return it->second.size() < factorial(num_variables(problem_id));
}

CostTable costs_from_csv(const CsvTable& table, std::string_view origin) {
  const std::size_t pid = table.column("problem_id", origin);
  const std::size_t ord = table.column("ordering", origin);
  const std::size_t cel = table.column("cells", origin);
  const std::size_t tim = table.column("time_s", origin);
  CostTable costs;
  for (const auto& r : table.rows) {
    Cost c{parse_decimal(r[cel]), parse_decimal(r[tim])};
    if (sgn(c.cells) <= 0) {
      throw InputError(std::string(origin) + ": cell count must be positive for problem '" + r[pid] +
                       "' ordering '" + r[ord] + "'");
    }
    if (sgn(c.time_s) < 0) {
      throw InputError(std::string(origin) + ": negative time for problem '" + r[pid] +
                       "' ordering '" + r[ord] + "'");
    }
    if (!costs.rows[r[pid]].emplace(r[ord], std::move(c)).second) {
      throw InputError(std::string(origin) + ": duplicate cost row for problem '" + r[pid] +
                       "' ordering '" + r[ord] + "'");
    }
  }
  return costs;
}

std::string group_of(const std::string& problem_id,
                     const std::map<std::string, std::string>& labels) {
  if (auto it = labels.find(problem_id); it != labels.end()) return it->second;
  const std::size_t dash = problem_id.find('-');
  if (dash == std::string::npos || dash == 0) return "";
  const std::string prefix = problem_id.substr(0, dash);
  const bool digits = std::all_of(prefix.begin(), prefix.end(),
                                  [](char c) { return c >= '0' && c <= '9'; });
  return digits ? prefix : "";
}

SavingsReport compute_savings(const CostTable& costs, const std::vector<ChoiceRow>& choices,
                              const std::map<std::string, std::string>& labels) {
  SavingsReport report;
  std::set<std::string> partial;
  for (const auto& [id, _] : costs.rows) {
    if (costs.is_partial(id)) partial.insert(id);
  }

  for (const auto& choice : choices) {
    if (choice.status != "ok") continue;
    auto problem = costs.rows.find(choice.problem_id);
    if (problem == costs.rows.end()) {
      throw InputError("missing cost row for problem '" + choice.problem_id + "' ordering '" +
                       choice.ordering + "'");
    }
    if (partial.count(choice.problem_id) != 0) continue;
    auto chosen = problem->second.find(choice.ordering);
    if (chosen == problem->second.end()) {
      throw InputError("missing cost row for problem '" + choice.problem_id + "' ordering '" +
                       choice.ordering + "'");
    }
    std::vector<Rational> cells;
    std::vector<Rational> times;
    for (const auto& [_, c] : problem->second) {
      cells.push_back(c.cells);
      times.push_back(c.time_s);
    }
    const Rational avg_cells = mean(cells);
    const Rational avg_time = mean(times);
    if (sgn(avg_time) == 0) {
      throw InputError("average time is zero for problem '" + choice.problem_id + "'");
    }
    const Rational heuristic_time = parse_decimal(choice.heuristic_time_s);
    SavingsRow row;
    row.problem_id = choice.problem_id;
    row.group = group_of(choice.problem_id, labels);
    row.heuristic = choice.heuristic;
    row.ordering = choice.ordering;
    row.cell_saving_pct = 100 * (avg_cells - chosen->second.cells) / avg_cells;
    row.time_saving_pct = 100 * (avg_time - heuristic_time - chosen->second.time_s) / avg_time;
    report.rows.push_back(std::move(row));
  }
  std::stable_sort(report.rows.begin(), report.rows.end(), [](const SavingsRow& a, const SavingsRow& b) {
    return row_less(a.problem_id, a.heuristic, b.problem_id, b.heuristic);
  });
  report.partial.assign(partial.begin(), partial.end());

  // Savings aggregated per (group, heuristic).
  std::set<std::string> groups;
  std::vector<std::string> heuristics;
  for (const auto& r : report.rows) {
    if (!r.group.empty()) groups.insert(r.group);
    if (std::find(heuristics.begin(), heuristics.end(), r.heuristic) == heuristics.end()) {
      heuristics.push_back(r.heuristic);
    }
  }
  std::stable_sort(heuristics.begin(), heuristics.end(), [](const std::string& a, const std::string& b) {
    return heuristic_rank(a) != heuristic_rank(b) ? heuristic_rank(a) < heuristic_rank(b) : a < b;
  });
  for (const auto& group : ordered_groups(groups)) {
    for (const auto& h : heuristics) {
      std::vector<Rational> c;
      std::vector<Rational> t;
      for (const auto& r : report.rows) {
        if (r.heuristic != h || (group != "all" && r.group != group)) continue;
        c.push_back(r.cell_saving_pct);
        t.push_back(r.time_saving_pct);
      }
      if (c.empty()) continue;
      report.aggregate.push_back({group, h, c.size(), mean(c), mean(t)});
    }
  }

  // Cost distribution per group over complete problems.
  std::set<std::string> cost_groups;
  for (const auto& [id, _] : costs.rows) {
    if (partial.count(id) != 0) continue;
    if (auto g = group_of(id, labels); !g.empty()) cost_groups.insert(g);
  }
  for (const auto& group : ordered_groups(cost_groups)) {
    std::vector<Rational> cells, times, avg_cells, avg_times;
    std::size_t problems = 0;
    for (const auto& [id, by_ordering] : costs.rows) {
      if (partial.count(id) != 0) continue;
      if (group != "all" && group_of(id, labels) != group) continue;
      ++problems;
      std::vector<Rational> pc, pt;
      for (const auto& [_, c] : by_ordering) {
        pc.push_back(c.cells);
        pt.push_back(c.time_s);
      }
      cells.insert(cells.end(), pc.begin(), pc.end());
      times.insert(times.end(), pt.begin(), pt.end());
      avg_cells.push_back(mean(pc));
      avg_times.push_back(mean(pt));
    }
    if (problems == 0) continue;
    report.summary.push_back({group, problems, mean(cells), median(cells), median(avg_cells),
                              mean(times), median(times), median(avg_times)});
  }
  return report;
}

CsvTable savings_to_csv(const SavingsReport& report) {
  CsvTable t;
  t.header = {"problem_id", "heuristic", "ordering", "cell_saving_pct", "time_saving_pct"};
  for (const auto& r : report.rows) {
    t.rows.push_back({r.problem_id, r.heuristic, r.ordering, format_decimal(r.cell_saving_pct, 1),
                      format_decimal(r.time_saving_pct, 1)});
  }
  return t;
}

CsvTable aggregate_to_csv(const SavingsReport& report) {
  CsvTable t;
  t.header = {"group", "heuristic", "mean_cell_saving_pct", "mean_time_saving_pct"};
  for (const auto& r : report.aggregate) {
    t.rows.push_back({r.group, r.heuristic, format_decimal(r.mean_cell_saving_pct, 1),
                      format_decimal(r.mean_time_saving_pct, 1)});
  }
  return t;
}

CsvTable summary_to_csv(const SavingsReport& report) {
  CsvTable t;
  t.header = {"group",       "problems",      "mean_cells",    "median_cells",
              "median_avg_cells", "mean_time_s", "median_time_s", "median_avg_time_s"};
  for (const auto& r : report.summary) {
    t.rows.push_back({r.group, std::to_string(r.problems), format_decimal(r.mean_cells, 2),
                      format_decimal(r.median_cells, 2), format_decimal(r.median_avg_cells, 2),
                      format_decimal(r.mean_time_s, 2), format_decimal(r.median_time_s, 2),
                      format_decimal(r.median_avg_time_s, 2)});
  }
  return t;
}

}  // namespace cadorder
