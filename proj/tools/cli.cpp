#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "cadorder/csv.hpp"
#include "cadorder/errors.hpp"
#include "cadorder/generator.hpp"
#include "cadorder/harness.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/problem_io.hpp"
#include "cadorder/projection.hpp"

namespace fs = std::filesystem;

namespace cadorder::cli {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<HeuristicId> parse_heuristic_list(const std::string& text) {
  if (text == "all") return {kAllHeuristics.begin(), kAllHeuristics.end()};
  std::vector<HeuristicId> ids;
  for (const auto& name : split_list(text)) {
    auto id = parse_heuristic(name);
    if (!id) throw CLI::ValidationError("--heuristics", "unknown heuristic '" + name + "'");
    ids.push_back(*id);
  }
  if (ids.empty()) throw CLI::ValidationError("--heuristics", "empty heuristic list");
  return ids;
}

void print_trace(std::ostream& out, const Problem& p, const HeuristicReport& r) {
  for (const auto& [var, trace] : r.variable_measures) {
    out << "  var " << p.variables[var] << ':';
    for (const auto& [name, value] : trace) out << ' ' << name << '=' << value;
    out << '\n';
  }
  for (const auto& [ordering, trace] : r.candidates) {
    out << "  " << ordering.to_string(p.variables) << ':';
    for (const auto& [name, value] : trace) out << ' ' << name << '=' << value;
    out << '\n';
  }
  if (!r.tiebreaks_used.empty()) {
    out << "  tiebreaks:";
    for (const auto& t : r.tiebreaks_used) out << ' ' << t;
    out << '\n';
  }
  out << "  elapsed_s: " << r.elapsed.count() << '\n';
}

std::map<std::string, std::string> read_manifest_labels(const std::string& path) {
  std::map<std::string, std::string> labels;
  CsvTable t = read_csv(path);
  const std::size_t id = t.column("id", path);
  const std::size_t label = t.column("label", path);
  for (const auto& row : t.rows) labels[row[id]] = row[label];
  return labels;
}

std::vector<NamedProblem> load_corpus(const std::string& dir) {
  std::vector<NamedProblem> corpus;
  const fs::path root(dir);
  if (!fs::is_directory(root)) throw InputError("corpus directory '" + dir + "' does not exist");
  const fs::path manifest = root / "manifest.csv";
  if (fs::exists(manifest)) {
    CsvTable t = read_csv(manifest.string());
    const std::size_t id = t.column("id", manifest.string());
    const std::size_t path = t.column("path", manifest.string());
    for (const auto& row : t.rows) {
      fs::path file(row[path]);
      if (file.is_relative()) file = root / file;
      corpus.push_back({row[id], load_problem(file.string())});
    }
  } else {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(root)) {
      if (entry.is_regular_file() && entry.path().extension() == ".prob") files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end());
    for (const auto& f : files) corpus.push_back({f.stem().string(), load_problem(f.string())});
  }
  std::sort(corpus.begin(), corpus.end(),
            [](const NamedProblem& a, const NamedProblem& b) { return a.id < b.id; });
  return corpus;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write '" + path + "'");
  f << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Variable ordering advice for CAD problems", "cadorder"};
  app.require_subcommand(1);

  // suggest
  auto* suggest_cmd = app.add_subcommand("suggest", "Suggest a variable ordering for a problem");
  std::string suggest_file;
  std::string suggest_heuristic = "brown";
  bool suggest_all = false;
  bool suggest_trace = false;
  std::size_t cap = SearchOptions{}.ordering_cap;
  suggest_cmd->add_option("file", suggest_file, "Problem file (.prob)")->required();
  suggest_cmd->add_option("--heuristic,-H", suggest_heuristic, "Heuristic name");
  suggest_cmd->add_flag("--all", suggest_all, "Run every heuristic, one line each");
  suggest_cmd->add_flag("--trace", suggest_trace, "Print the measures behind each choice");
  suggest_cmd->add_option("--cap", cap, "Largest variable count for ordering enumeration");

  // gen
  auto* gen_cmd = app.add_subcommand("gen", "Generate a seeded random corpus");
  std::string gen_types = "22,12,11,20,10,00";
  std::size_t gen_count = 100;
  GenParams params;
  std::string gen_out;
  gen_cmd->add_option("--types", gen_types, "Comma-separated system type labels");
  gen_cmd->add_option("--count", gen_count, "Problems per system type");
  gen_cmd->add_option("--seed", params.seed, "Corpus seed");
  gen_cmd->add_option("--out", gen_out, "Output directory")->required();
  gen_cmd->add_option("--vars", params.num_vars, "Variables per problem");
  gen_cmd->add_option("--max-tdeg", params.max_tdeg, "Total degree bound");
  gen_cmd->add_option("--terms", params.terms, "Terms per polynomial");
  gen_cmd->add_option("--coeff-bound", params.coeff_bound, "Coefficient magnitude bound");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Run heuristics over a corpus");
  std::string sweep_corpus;
  std::string sweep_heuristics = "all";
  std::string sweep_out;
  unsigned jobs = 1;
  sweep_cmd->add_option("--corpus", sweep_corpus, "Corpus directory")->required();
  sweep_cmd->add_option("--heuristics", sweep_heuristics, "Comma-separated names or 'all'");
  sweep_cmd->add_option("--out", sweep_out, "choices.csv to write")->required();
  sweep_cmd->add_option("--jobs,-j", jobs, "Worker threads");
  sweep_cmd->add_option("--cap", cap, "Largest variable count for ordering enumeration");

  // eval
  auto* eval_cmd = app.add_subcommand("eval", "Compute savings from a cost table");
  std::string costs_path;
  std::string choices_path;
  std::string savings_path;
  std::string aggregate_path;
  std::string summary_path;
  std::string manifest_path;
  eval_cmd->add_option("--costs", costs_path, "costs.csv")->required();
  eval_cmd->add_option("--choices", choices_path, "choices.csv")->required();
  eval_cmd->add_option("--out", savings_path, "savings.csv to write")->required();
  eval_cmd->add_option("--aggregate", aggregate_path, "aggregate.csv to write");
  eval_cmd->add_option("--summary", summary_path, "Cost summary CSV to write");
  eval_cmd->add_option("--manifest", manifest_path, "manifest.csv giving system type labels");

  // measure
  auto* measure_cmd = app.add_subcommand("measure", "Projection diagnostics for one ordering");
  std::string measure_file;
  std::string measure_ordering_text;
  std::string measure_kind = "full";
  measure_cmd->add_option("file", measure_file, "Problem file (.prob)")->required();
  measure_cmd->add_option("--ordering", measure_ordering_text, "Ordering such as z>y>x")->required();
  measure_cmd->add_option("--kind", measure_kind, "full or tti")
      ->check(CLI::IsMember({"full", "tti"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "cadorder: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*suggest_cmd) {
      const Problem p = load_problem(suggest_file);
      SearchOptions search;
      search.ordering_cap = cap;
      std::vector<HeuristicId> ids;
      if (suggest_all) {
        ids.assign(kAllHeuristics.begin(), kAllHeuristics.end());
      } else {
        auto id = parse_heuristic(suggest_heuristic);
        if (!id) {
          err << "cadorder: unknown heuristic '" << suggest_heuristic << "'\n";
          return kUsage;
        }
        ids.push_back(*id);
      }
      for (HeuristicId id : ids) {
        HeuristicReport r = suggest(p, id, search);
        if (suggest_all) out << heuristic_name(id) << ": ";
        out << r.choice.to_string(p.variables) << '\n';
        if (suggest_trace) print_trace(out, p, r);
      }
      return kOk;
    }

    if (*gen_cmd) {
      const auto labels = split_list(gen_types);
      if (labels.empty()) throw InputError("no system types given");
      auto corpus = generate_corpus(labels, gen_count, params);
      fs::create_directories(gen_out);
      CsvTable manifest;
      manifest.header = {"id", "label", "seed", "path"};
      for (const auto& item : corpus) {
        const std::string name = item.id + ".prob";
        write_text((fs::path(gen_out) / name).string(), print_problem(item.problem));
        manifest.rows.push_back({item.id, item.label, std::to_string(item.seed), name});
      }
      write_csv_file((fs::path(gen_out) / "manifest.csv").string(), manifest);
      out << "wrote " << corpus.size() << " problems to " << gen_out << '\n';
      return kOk;
    }

    if (*sweep_cmd) {
      std::vector<HeuristicId> ids;
      try {
        ids = parse_heuristic_list(sweep_heuristics);
      } catch (const CLI::ValidationError& e) {
        err << "cadorder: " << e.what() << '\n';
        return kUsage;
      }
      auto corpus = load_corpus(sweep_corpus);
      SweepOptions options;
      options.jobs = jobs;
      options.search.ordering_cap = cap;
      auto rows = run_sweep(corpus, ids, options);
      write_csv_file(sweep_out, choices_to_csv(rows));
      std::size_t failed = 0;
      for (const auto& r : rows) failed += r.status != "ok" ? 1 : 0;
      out << "wrote " << rows.size() << " rows to " << sweep_out;
      if (failed > 0) out << " (" << failed << " with non-ok status)";
      out << '\n';
      return kOk;
    }

    if (*eval_cmd) {
      const CostTable costs = costs_from_csv(read_csv(costs_path), costs_path);
      const auto choices = choices_from_csv(read_csv(choices_path), choices_path);
      std::map<std::string, std::string> labels;
      if (!manifest_path.empty()) labels = read_manifest_labels(manifest_path);
      SavingsReport report = compute_savings(costs, choices, labels);
      write_csv_file(savings_path, savings_to_csv(report));
      if (!aggregate_path.empty()) write_csv_file(aggregate_path, aggregate_to_csv(report));
      if (!summary_path.empty()) write_csv_file(summary_path, summary_to_csv(report));
      for (const auto& id : report.partial) {
        err << "cadorder: excluded partial problem '" << id << "'\n";
      }
      out << "wrote " << report.rows.size() << " rows to " << savings_path << '\n';
      return kOk;
    }

    if (*measure_cmd) {
      const Problem p = load_problem(measure_file);
      const auto ordering = VariableOrdering::parse(measure_ordering_text, p.variables);
      const ProjectionKind kind = measure_kind == "tti" ? ProjectionKind::kTti : ProjectionKind::kFull;
      OrderingMeasures m = measure_ordering(p, ordering, kind);
      out << "ordering: " << ordering.to_string(p.variables) << '\n';
      out << "kind: " << measure_kind << '\n';
      out << "sotd: " << m.sotd << '\n';
      out << "ndrr: " << m.ndrr << '\n';
      for (std::size_t k = 0; k < m.cascade.stages.size(); ++k) {
        const auto& stage = m.cascade.stages[k];
        out << "stage " << k + 1 << " (eliminated " << p.variables[stage.eliminated] << "): "
            << stage.polys.size() << " polynomials, sotd " << sotd(stage.polys) << '\n';
        for (const auto& f : stage.polys) out << "  " << to_string(f, p.variables) << '\n';
      }
      return kOk;
    }
  } catch (const ParseError& e) {
    for (const auto& d : e.diagnostics()) err << d.to_string() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "cadorder: " << e.what() << '\n';
    return kInputError;
  } catch (const OrderingCapExceeded& e) {
    err << "cadorder: " << e.what() << '\n';
    return kInputError;
  } catch (const InvariantViolation& e) {
    err << "cadorder: internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const AlgebraError& e) {
    err << "cadorder: internal error: " << e.what() << '\n';
    return kInvariant;
  } catch (const fs::filesystem_error& e) {
    err << "cadorder: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}

}  // namespace cadorder::cli
