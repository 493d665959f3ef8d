#include "cadorder/heuristics.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <tuple>

#include "cadorder/errors.hpp"
#include "cadorder/realroots.hpp"

namespace cadorder {

namespace {

constexpr std::array<std::string_view, 12> kNames = {
    "triangular", "brown", "sotd", "ndrr", "sn", "ns",
    "gs", "s-tti", "n-tti", "gs-tti", "newh", "newh-ext",
};

// Sorts variables by their key vectors (smaller first), falling back to the
// declaration index. Records which criterion separated each adjacent pair.
struct PositionalResult {
  std::vector<VarIndex> order;
  std::vector<std::string> tiebreaks;
  bool fallback = false;
};

void note(std::vector<std::string>& used, const std::string& name) {
  if (std::find(used.begin(), used.end(), name) == used.end()) used.push_back(name);
}

PositionalResult rank_by_keys(std::vector<VarIndex> vars,
                              const std::map<VarIndex, std::vector<std::uint64_t>>& keys,
                              const std::vector<std::string>& criteria) {
  std::stable_sort(vars.begin(), vars.end(), [&](VarIndex a, VarIndex b) {
    const auto& ka = keys.at(a);
    const auto& kb = keys.at(b);
    if (ka != kb) return ka < kb;
    return a < b;
  });
  PositionalResult r;
  for (std::size_t i = 0; i + 1 < vars.size(); ++i) {
    const auto& ka = keys.at(vars[i]);
    const auto& kb = keys.at(vars[i + 1]);
    auto mismatch = std::mismatch(ka.begin(), ka.end(), kb.begin());
    if (mismatch.first == ka.end()) {
      r.fallback = true;
      note(r.tiebreaks, "lex");
    } else {
      note(r.tiebreaks, criteria[static_cast<std::size_t>(mismatch.first - ka.begin())]);
    }
  }
  r.order = std::move(vars);
  return r;
}

std::vector<VarIndex> all_variables(std::size_t n) {
  std::vector<VarIndex> v(n);
  std::iota(v.begin(), v.end(), VarIndex{0});
  return v;
}

HeuristicReport positional(HeuristicId id, std::span<const Polynomial> polys, std::size_t num_vars,
                           const std::vector<std::string>& criteria,
                           std::vector<std::uint64_t> (*key)(const VariableMeasures&)) {
  HeuristicReport report;
  report.id = id;
  std::map<VarIndex, std::vector<std::uint64_t>> keys;
  for (VarIndex v = 0; v < num_vars; ++v) {
    keys[v] = key(variable_measures(polys, v));
    MeasureTrace trace;
    for (std::size_t i = 0; i < criteria.size(); ++i) trace.emplace_back(criteria[i], keys[v][i]);
    report.variable_measures[v] = std::move(trace);
  }
  PositionalResult r = rank_by_keys(all_variables(num_vars), keys, criteria);
  report.choice = VariableOrdering(std::move(r.order));
  report.tiebreaks_used = std::move(r.tiebreaks);
  report.fallback_lex = r.fallback;
  report.candidates[report.choice] = {};
  return report;
}

// Projection stages memoized by the prefix of eliminated variables, so that
// orderings sharing a prefix share work.
class CascadeMemo {
 public:
  CascadeMemo(const Problem& p, ProjectionKind kind)
      : problem_(p), kind_(kind), input_(defining_polynomials(p)) {}

  const PolynomialSet& input() const { return input_; }

  const PolynomialSet& stage(const std::vector<VarIndex>& prefix) {
    auto it = memo_.find(prefix);
    if (it != memo_.end()) return it->second;
    PolynomialSet result;
    if (prefix.size() == 1) {
      result = kind_ == ProjectionKind::kTti ? tti_project(problem_, prefix[0]).polys
                                             : mccallum_project(input_, prefix[0]).polys;
    } else {
      std::vector<VarIndex> parent(prefix.begin(), prefix.end() - 1);
      PolynomialSet previous = stage(parent);
      result = mccallum_project(previous, prefix.back()).polys;
    }
    return memo_.emplace(prefix, std::move(result)).first->second;
  }

  std::uint64_t sotd_of(const VariableOrdering& o) {
    std::uint64_t total = sotd(input_);
    std::vector<VarIndex> prefix;
    for (std::size_t i = 0; i + 1 < o.size(); ++i) {
      prefix.push_back(o[i]);
      total += sotd(stage(prefix));
    }
    return total;
  }

  std::uint64_t ndrr_of(const VariableOrdering& o) {
    if (o.size() < 2) return ndrr(input_, o[0]);
    std::vector<VarIndex> prefix(o.order().begin(), o.order().end() - 1);
    return ndrr(stage(prefix), o.order().back());
  }

  std::uint64_t measure(Measure m, const VariableOrdering& o) {
    return m == Measure::kSotd ? sotd_of(o) : ndrr_of(o);
  }

 private:
  const Problem& problem_;
  ProjectionKind kind_;
  PolynomialSet input_;
  std::map<std::vector<VarIndex>, PolynomialSet> memo_;
};

std::vector<VariableOrdering> all_orderings(std::size_t n, const SearchOptions& options) {
  if (n > options.ordering_cap) throw OrderingCapExceeded(n, options.ordering_cap);
  std::vector<VariableOrdering> out;
  std::vector<VarIndex> perm = all_variables(n);
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

HeuristicId search_id(Measure m, ProjectionKind kind) {
  if (m == Measure::kSotd) return kind == ProjectionKind::kTti ? HeuristicId::kSTti : HeuristicId::kSotd;
  return kind == ProjectionKind::kTti ? HeuristicId::kNTti : HeuristicId::kNdrr;
}

}  // namespace

std::string_view heuristic_name(HeuristicId id) { return kNames[static_cast<std::size_t>(id)]; }

std::optional<HeuristicId> parse_heuristic(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return static_cast<HeuristicId>(i);
  }
  return std::nullopt;
}

std::string_view measure_name(Measure m) { return m == Measure::kSotd ? "sotd" : "ndrr"; }

VariableMeasures variable_measures(std::span<const Polynomial> polys, VarIndex var) {
  VariableMeasures m;
  std::set<Monomial> monomials;
  for (const auto& f : polys) {
    int d = degree(f, var);
    if (d <= 0) continue;
    m.max_degree = std::max<std::uint64_t>(m.max_degree, static_cast<std::uint64_t>(d));
    m.sum_degree += static_cast<std::uint64_t>(d);
    m.max_lcoeff_tdeg =
        std::max<std::uint64_t>(m.max_lcoeff_tdeg, total_degree(leading_coefficient(f, var)));
    for (const auto& t : f.terms()) {
      if (!t.monomial.contains(var)) continue;
      m.max_monomial_tdeg = std::max<std::uint64_t>(m.max_monomial_tdeg, t.monomial.total_degree());
      monomials.insert(t.monomial);
    }
  }
  m.monomial_count = monomials.size();
  return m;
}

HeuristicReport triangular_order(std::span<const Polynomial> polys, std::size_t num_vars) {
  return positional(HeuristicId::kTriangular, polys, num_vars, {"m1", "m2", "m3"},
                    [](const VariableMeasures& m) {
                      return std::vector<std::uint64_t>{m.max_degree, m.max_lcoeff_tdeg,
                                                        m.sum_degree};
                    });
}

HeuristicReport brown_order(std::span<const Polynomial> polys, std::size_t num_vars) {
  return positional(HeuristicId::kBrown, polys, num_vars, {"m1", "m4", "m5"},
                    [](const VariableMeasures& m) {
                      return std::vector<std::uint64_t>{m.max_degree, m.max_monomial_tdeg,
                                                        m.monomial_count};
                    });
}

std::uint64_t sotd(std::span<const Polynomial> polys) {
  std::uint64_t total = 0;
  for (const auto& f : polys) {
    for (const auto& t : f.terms()) total += t.monomial.total_degree();
  }
  return total;
}

std::uint64_t sotd(std::span<const PolynomialSet> sets) {
  std::uint64_t total = 0;
  for (const auto& s : sets) total += sotd(std::span<const Polynomial>(s));
  return total;
}

HeuristicReport ordering_search(const Problem& p, Measure measure, ProjectionKind kind,
                                const SearchOptions& options) {
  HeuristicReport report;
  report.id = search_id(measure, kind);
  CascadeMemo memo(p, kind);
  std::optional<std::uint64_t> best;
  std::size_t best_count = 0;
  for (const auto& o : all_orderings(p.num_variables(), options)) {
    std::uint64_t value = memo.measure(measure, o);
    report.candidates[o] = {{std::string(measure_name(measure)), value}};
    if (!best || value < *best) {
      best = value;
      best_count = 1;
      report.choice = o;
    } else if (value == *best) {
      ++best_count;
    }
  }
  report.tiebreaks_used.emplace_back(measure_name(measure));
  if (best_count > 1) {
    report.fallback_lex = true;
    report.tiebreaks_used.emplace_back("lex");
  }
  return report;
}

HeuristicReport combined_order(const Problem& p, Measure primary, Measure secondary,
                               ProjectionKind kind, const SearchOptions& options) {
  HeuristicReport report;
  report.id = primary == Measure::kSotd ? HeuristicId::kSn : HeuristicId::kNs;
  CascadeMemo memo(p, kind);
  const auto orderings = all_orderings(p.num_variables(), options);
  std::optional<std::uint64_t> best;
  for (const auto& o : orderings) {
    std::uint64_t value = memo.measure(primary, o);
    report.candidates[o] = {{std::string(measure_name(primary)), value}};
    if (!best || value < *best) best = value;
  }
  report.tiebreaks_used.emplace_back(measure_name(primary));
  std::vector<VariableOrdering> tied;
  for (const auto& o : orderings) {
    if (report.candidates[o].front().second == *best) tied.push_back(o);
  }
  report.choice = tied.front();
  if (tied.size() == 1) return report;

  report.tiebreaks_used.emplace_back(measure_name(secondary));
  std::optional<std::uint64_t> best2;
  std::size_t count = 0;
  for (const auto& o : tied) {
    std::uint64_t value = memo.measure(secondary, o);
    report.candidates[o].emplace_back(std::string(measure_name(secondary)), value);
    if (!best2 || value < *best2) {
      best2 = value;
      count = 1;
      report.choice = o;
    } else if (value == *best2) {
      ++count;
    }
  }
  if (count > 1) {
    report.fallback_lex = true;
    report.tiebreaks_used.emplace_back("lex");
  }
  return report;
}

HeuristicReport greedy_sotd_order(const Problem& p, ProjectionKind kind) {
  HeuristicReport report;
  report.id = kind == ProjectionKind::kTti ? HeuristicId::kGsTti : HeuristicId::kGs;
  report.tiebreaks_used.emplace_back("sotd");
  std::vector<VarIndex> remaining = all_variables(p.num_variables());
  std::vector<VarIndex> order;
  PolynomialSet working = defining_polynomials(p);
  bool first = true;
  while (remaining.size() > 1) {
    std::optional<std::uint64_t> best;
    std::size_t best_count = 0;
    VarIndex chosen = remaining.front();
    PolynomialSet chosen_set;
    for (VarIndex v : remaining) {
      PolynomialSet next = (first && kind == ProjectionKind::kTti) ? tti_project(p, v).polys
                                                                   : mccallum_project(working, v).polys;
      std::uint64_t value = sotd(next);
      report.variable_measures[v].emplace_back("sotd@" + std::to_string(order.size() + 1), value);
      if (!best || value < *best) {
        best = value;
        best_count = 1;
        chosen = v;
        chosen_set = std::move(next);
      } else if (value == *best) {
        ++best_count;
      }
    }
    if (best_count > 1) {
      report.fallback_lex = true;
      note(report.tiebreaks_used, "lex");
    }
    order.push_back(chosen);
    remaining.erase(std::find(remaining.begin(), remaining.end(), chosen));
    working = std::move(chosen_set);
    first = false;
  }
  order.insert(order.end(), remaining.begin(), remaining.end());
  report.choice = VariableOrdering(std::move(order));
  report.candidates[report.choice] = {{"sotd", sotd(working)}};
  return report;
}

HeuristicReport newh_order(const Problem& p, bool extended) {
  HeuristicReport report;
  report.id = extended ? HeuristicId::kNewHExt : HeuristicId::kNewH;
  const std::size_t n = p.num_variables();
  PolynomialSet input = defining_polynomials(p);
  std::map<VarIndex, std::uint64_t> m1;
  for (VarIndex v = 0; v < n; ++v) {
    m1[v] = variable_measures(input, v).max_degree;
    report.variable_measures[v].emplace_back("m1", m1[v]);
  }
  report.tiebreaks_used.emplace_back("m1");

  // The greatest variable: least m1, ties to the first declared.
  VarIndex greatest = 0;
  for (VarIndex v = 1; v < n; ++v) {
    if (m1[v] < m1[greatest]) greatest = v;
  }
  for (VarIndex v = 0; v < n; ++v) {
    if (v != greatest && m1[v] == m1[greatest]) {
      report.fallback_lex = true;
      note(report.tiebreaks_used, "lex");
      break;
    }
  }

  std::vector<VarIndex> rest;
  for (VarIndex v = 0; v < n; ++v) {
    if (v != greatest) rest.push_back(v);
  }
  auto tied_groups_remain = [&](const std::map<VarIndex, std::vector<std::uint64_t>>& keys) {
    for (std::size_t i = 0; i < rest.size(); ++i) {
      for (std::size_t j = i + 1; j < rest.size(); ++j) {
        if (keys.at(rest[i]) == keys.at(rest[j])) return true;
      }
    }
    return false;
  };

  std::map<VarIndex, std::vector<std::uint64_t>> keys;
  std::vector<std::string> criteria = {"m1"};
  for (VarIndex v : rest) keys[v] = {m1[v]};

  auto add_degree_key = [&](const PolynomialSet& set, const std::string& name) {
    criteria.push_back(name);
    for (VarIndex v : rest) {
      std::uint64_t d = 0;
      for (const auto& g : set) d = std::max<std::uint64_t>(d, static_cast<std::uint64_t>(degree(g, v)));
      keys[v].push_back(d);
      report.variable_measures[v].emplace_back(name, d);
    }
  };
  if (tied_groups_remain(keys)) {
    add_degree_key(newh_set(p, greatest), "newh-degree");
    if (extended && tied_groups_remain(keys)) {
      add_degree_key(newh_omitted_set(p, greatest), "omitted-degree");
    }
  }

  PositionalResult r = rank_by_keys(rest, keys, criteria);
  for (const auto& t : r.tiebreaks) note(report.tiebreaks_used, t);
  report.fallback_lex = report.fallback_lex || r.fallback;
  std::vector<VarIndex> order{greatest};
  order.insert(order.end(), r.order.begin(), r.order.end());
  report.choice = VariableOrdering(std::move(order));
  report.candidates[report.choice] = {};
  return report;
}

HeuristicReport suggest(const Problem& p, HeuristicId id, const SearchOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  HeuristicReport report;
  switch (id) {
    case HeuristicId::kTriangular: {
      PolynomialSet input = defining_polynomials(p);
      report = triangular_order(input, p.num_variables());
      break;
    }
    case HeuristicId::kBrown: {
      PolynomialSet input = defining_polynomials(p);
      report = brown_order(input, p.num_variables());
      break;
    }
    case HeuristicId::kSotd:
      report = ordering_search(p, Measure::kSotd, ProjectionKind::kFull, options);
      break;
    case HeuristicId::kNdrr:
      report = ordering_search(p, Measure::kNdrr, ProjectionKind::kFull, options);
      break;
    case HeuristicId::kSn:
      report = combined_order(p, Measure::kSotd, Measure::kNdrr, ProjectionKind::kFull, options);
      break;
    case HeuristicId::kNs:
      report = combined_order(p, Measure::kNdrr, Measure::kSotd, ProjectionKind::kFull, options);
      break;
    case HeuristicId::kGs:
      report = greedy_sotd_order(p, ProjectionKind::kFull);
      break;
    case HeuristicId::kSTti:
      report = ordering_search(p, Measure::kSotd, ProjectionKind::kTti, options);
      break;
    case HeuristicId::kNTti:
      report = ordering_search(p, Measure::kNdrr, ProjectionKind::kTti, options);
      break;
    case HeuristicId::kGsTti:
      report = greedy_sotd_order(p, ProjectionKind::kTti);
      break;
    case HeuristicId::kNewH:
      report = newh_order(p, false);
      break;
    case HeuristicId::kNewHExt:
      report = newh_order(p, true);
      break;
  }
  report.id = id;
  report.elapsed = std::chrono::steady_clock::now() - start;
  if (!report.choice.is_permutation_of(p.num_variables())) {
    throw InvariantViolation("heuristic " + std::string(heuristic_name(id)) +
                             " returned a non-permutation");
  }
  return report;
}

OrderingMeasures measure_ordering(const Problem& p, const VariableOrdering& ordering,
                                  ProjectionKind kind) {
  OrderingMeasures m;
  m.cascade = project_cascade(p, ordering, kind);
  PolynomialSet input = defining_polynomials(p);
  m.sotd = sotd(input);
  for (const auto& s : m.cascade.stages) m.sotd += sotd(s.polys);
  m.ndrr = m.cascade.stages.empty() ? ndrr(input, ordering[0])
                                    : ndrr(m.cascade.stages.back().polys, ordering.order().back());
  return m;
}

}  // namespace cadorder
