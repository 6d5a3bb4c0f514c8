// SPDX-License-Identifier: Apache-2.0
#include "mobb/bench.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include <json.hpp>

#include "mobb/instances.hpp"
#include "mobb/oracle.hpp"

namespace mobb {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

constexpr int kOracleVariableLimit = 25;

[[noreturn]] void plan_error(const std::string& message) {
  throw std::invalid_argument("experiment plan: " + message);
}

std::vector<std::string> string_list(const json& value, const char* name) {
  std::vector<std::string> out;
  if (value.is_string()) {
    out.push_back(value.get<std::string>());
    return out;
  }
  if (!value.is_array()) plan_error(std::string("\"") + name + "\" must be a string or an array");
  for (const auto& item : value) {
    if (!item.is_string()) plan_error(std::string("\"") + name + "\" entries must be strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<SelectionStrategy> all_selections() {
  return {SelectionStrategy::DepthFirst,     SelectionStrategy::BreadthFirst,
          SelectionStrategy::HypervolumeGap, SelectionStrategy::HypervolumeBox,
          SelectionStrategy::Hausdorff,      SelectionStrategy::WidthOfEnclosure};
}

std::vector<BranchingRuleKind> all_rules() {
  return {BranchingRuleKind::MostOftenFractional, BranchingRuleKind::HowFractional,
          BranchingRuleKind::SumOfRatios, BranchingRuleKind::RatioDominance};
}

/// Shell-style match supporting * and ? only.
bool wildcard_match(const std::string& pattern, const std::string& text) {
  std::size_t pi = 0, ti = 0, star = std::string::npos, mark = 0;
  while (ti < text.size()) {
    if (pi < pattern.size() && (pattern[pi] == '?' || pattern[pi] == text[ti])) {
      ++pi;
      ++ti;
    } else if (pi < pattern.size() && pattern[pi] == '*') {
      star = pi++;
      mark = ti;
    } else if (star != std::string::npos) {
      pi = star + 1;
      ti = ++mark;
    } else {
      return false;
    }
  }
  while (pi < pattern.size() && pattern[pi] == '*') ++pi;
  return pi == pattern.size();
}

struct RunTask {
  std::size_t instance_index;
  SelectionStrategy selection;
  BranchingRuleKind rule;
  int repetition;
};

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string quoted = "\"";
  for (char c : field) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

std::string full_precision(double value) {
  std::ostringstream out;
  out << std::setprecision(17) << value;
  return out.str();
}

}  // namespace

std::vector<std::string> expand_instance_patterns(const std::vector<std::string>& patterns) {
  std::vector<std::string> paths;
  for (const std::string& pattern : patterns) {
    if (pattern.find_first_of("*?") == std::string::npos) {
      paths.push_back(pattern);
      continue;
    }
    const fs::path full(pattern);
    const fs::path dir = full.has_parent_path() ? full.parent_path() : fs::path(".");
    const std::string name_pattern = full.filename().string();
    if (dir.string().find_first_of("*?") != std::string::npos)
      plan_error("wildcards are only supported in the file name: " + pattern);
    std::vector<std::string> matches;
    if (fs::is_directory(dir)) {
      for (const auto& entry : fs::directory_iterator(dir)) {
        if (!entry.is_regular_file()) continue;
        if (wildcard_match(name_pattern, entry.path().filename().string()))
          matches.push_back(entry.path().string());
      }
    }
    std::sort(matches.begin(), matches.end());
    paths.insert(paths.end(), matches.begin(), matches.end());
  }
  if (paths.empty()) plan_error("no instances matched");
  return paths;
}

ExperimentPlan plan_from_text(const std::string& text) {
  const json doc = json::parse(text);
  if (!doc.is_object()) plan_error("top level must be an object");

  ExperimentPlan plan;
  const auto instances = doc.find("instances");
  if (instances == doc.end()) plan_error("missing field \"instances\"");
  plan.instance_patterns = string_list(*instances, "instances");
  if (plan.instance_patterns.empty()) plan_error("\"instances\" must be non-empty");

  if (const auto it = doc.find("selections"); it != doc.end()) {
    for (const std::string& name : string_list(*it, "selections"))
      plan.selections.push_back(parse_selection(name));
  } else {
    plan.selections = all_selections();
  }
  if (const auto it = doc.find("rules"); it != doc.end()) {
    for (const std::string& name : string_list(*it, "rules")) plan.rules.push_back(parse_rule(name));
  } else {
    plan.rules = all_rules();
  }
  if (plan.selections.empty()) plan_error("\"selections\" must be non-empty");
  if (plan.rules.empty()) plan_error("\"rules\" must be non-empty");

  if (const auto it = doc.find("time_limit"); it != doc.end()) {
    if (!it->is_number()) plan_error("\"time_limit\" must be a number");
    plan.time_limit_seconds = it->get<double>();
  }
  if (!(plan.time_limit_seconds > 0.0)) plan_error("\"time_limit\" must be positive");

  if (const auto it = doc.find("node_limit"); it != doc.end()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 1)
      plan_error("\"node_limit\" must be a positive integer");
    plan.node_limit = it->get<std::uint64_t>();
  }

  if (const auto it = doc.find("repetitions"); it != doc.end()) {
    if (!it->is_number_integer()) plan_error("\"repetitions\" must be an integer");
    plan.repetitions = it->get<int>();
  }
  if (plan.repetitions < 1) plan_error("\"repetitions\" must be at least 1");

  if (const auto it = doc.find("output_dir"); it != doc.end()) {
    if (!it->is_string()) plan_error("\"output_dir\" must be a string");
    plan.output_dir = it->get<std::string>();
  }
  if (const auto it = doc.find("jobs"); it != doc.end()) {
    if (!it->is_number_integer()) plan_error("\"jobs\" must be an integer");
    plan.jobs = it->get<int>();
    if (plan.jobs < 1) plan_error("\"jobs\" must be at least 1");
  }
  if (const auto it = doc.find("seed"); it != doc.end()) {
    if (!it->is_number_integer()) plan_error("\"seed\" must be an integer");
    plan.seed = it->get<std::uint64_t>();
  }
  return plan;
}

ExperimentPlan load_plan(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open plan file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return plan_from_text(buffer.str());
}

namespace {

struct LoadedInstance {
  std::string path;
  MoilpInstance instance;
};

std::vector<LoadedInstance> load_all(const ExperimentPlan& plan) {
  std::vector<LoadedInstance> loaded;
  for (const std::string& path : expand_instance_patterns(plan.instance_patterns))
    loaded.push_back({path, load_instance(path)});
  return loaded;
}

std::vector<RunTask> task_list(const ExperimentPlan& plan, std::size_t instance_count) {
  std::vector<RunTask> tasks;
  tasks.reserve(plan.selections.size() * plan.rules.size() * instance_count *
                static_cast<std::size_t>(plan.repetitions));
  for (SelectionStrategy selection : plan.selections)
    for (BranchingRuleKind rule : plan.rules)
      for (std::size_t i = 0; i < instance_count; ++i)
        for (int rep = 0; rep < plan.repetitions; ++rep) tasks.push_back({i, selection, rule, rep});
  return tasks;
}

RunRecord run_one(const ExperimentPlan& plan, const LoadedInstance& loaded, const RunTask& task) {
  RunRecord row;
  row.family = loaded.instance.family;
  row.p = loaded.instance.num_objectives;
  row.n = loaded.instance.num_variables;
  row.combo = combo_label(task.selection, task.rule);
  row.instance = loaded.path;
  SearchConfig config;
  config.selection = task.selection;
  config.rule = task.rule;
  config.time_limit_seconds = plan.time_limit_seconds;
  config.node_limit = plan.node_limit;
  if (plan.seed) config.rng_seed = *plan.seed;
  try {
    const SearchResult result = solve(loaded.instance, config);
    row.status = status_name(result.status);
    row.nodes_created = result.nodes_created;
    row.nodes_processed = result.nodes_processed;
    row.time_s = result.wall_time_seconds;
  } catch (const std::exception&) {
    row.status = "error";
  }
  return row;
}

}  // namespace

std::string results_csv(const std::vector<RunRecord>& rows) {
  std::ostringstream out;
  out << "family,p,n,combo,instance,status,nodes_created,nodes_processed,time_s\n";
  for (const RunRecord& row : rows) {
    out << csv_escape(row.family) << ',' << row.p << ',' << row.n << ',' << csv_escape(row.combo)
        << ',' << csv_escape(row.instance) << ',' << csv_escape(row.status) << ','
        << row.nodes_created << ',' << row.nodes_processed << ',' << std::fixed
        << std::setprecision(9) << row.time_s << '\n';
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

std::string summary_markdown(const ExperimentPlan& plan, const std::vector<RunRecord>& rows) {
  // size class -> combo -> (solved count, total, sums over solved runs)
  struct Cell {
    int solved = 0;
    int total = 0;
    double node_sum = 0.0;
    double time_sum = 0.0;
  };
  std::map<std::tuple<std::string, int, int>, std::map<std::string, Cell>> classes;
  for (const RunRecord& row : rows) {
    Cell& cell = classes[{row.family, row.p, row.n}][row.combo];
    ++cell.total;
    if (row.status == "Complete") {
      ++cell.solved;
      cell.node_sum += static_cast<double>(row.nodes_created);
      cell.time_sum += row.time_s;
    }
  }

  std::vector<std::string> combo_order;
  for (SelectionStrategy selection : plan.selections)
    for (BranchingRuleKind rule : plan.rules) combo_order.push_back(combo_label(selection, rule));

  std::ostringstream out;
  out << "# Benchmark summary\n\n"
      << "Means are over solved runs only; a bracketed count marks combinations\n"
      << "that did not finish every run within the time limit.\n";
  for (const auto& [key, combos] : classes) {
    const auto& [family, p, n] = key;
    out << "\n## " << family << " p=" << p << " n=" << n << "\n\n"
        << "| combo | mean nodes created | mean time [s] | solved |\n"
        << "|---|---:|---:|---:|\n";
    for (const std::string& combo : combo_order) {
      const auto it = combos.find(combo);
      if (it == combos.end()) continue;
      const Cell& cell = it->second;
      out << "| " << combo << " | ";
      if (cell.solved > 0) {
        out << full_precision(cell.node_sum / cell.solved) << " | "
            << full_precision(cell.time_sum / cell.solved) << " | ";
      } else {
        out << "- | - | ";
      }
      if (cell.solved < cell.total)
        out << '[' << cell.solved << '/' << cell.total << ']';
      else
        out << cell.solved << '/' << cell.total;
      out << " |\n";
    }
  }
  return out.str();
}

BenchReport run_bench(const ExperimentPlan& plan, std::ostream& log) {
  const std::vector<LoadedInstance> loaded = load_all(plan);
  const std::vector<RunTask> tasks = task_list(plan, loaded.size());

  BenchReport report;
  report.rows.resize(tasks.size());
  const int jobs = std::max(1, plan.jobs);
#pragma omp parallel for schedule(dynamic) num_threads(jobs)
  for (std::ptrdiff_t t = 0; t < static_cast<std::ptrdiff_t>(tasks.size()); ++t)
    report.rows[static_cast<std::size_t>(t)] =
        run_one(plan, loaded[tasks[static_cast<std::size_t>(t)].instance_index],
                tasks[static_cast<std::size_t>(t)]);

  for (const RunRecord& row : report.rows)
    if (row.status == "error") report.exit_code = 2;

  fs::create_directories(plan.output_dir);
  const fs::path csv_path = fs::path(plan.output_dir) / "results.csv";
  const fs::path summary_path = fs::path(plan.output_dir) / "summary.md";
  {
    std::ofstream out(csv_path, std::ios::binary | std::ios::trunc);
    out << results_csv(report.rows);
    if (!out) throw std::runtime_error("failed writing " + csv_path.string());
  }
  {
    std::ofstream out(summary_path, std::ios::binary | std::ios::trunc);
    out << summary_markdown(plan, report.rows);
    if (!out) throw std::runtime_error("failed writing " + summary_path.string());
  }
  log << "wrote " << csv_path.string() << " (" << report.rows.size() << " runs) and "
      << summary_path.string() << "\n";
  return report;
}

int verify_bench(const ExperimentPlan& plan, std::ostream& log) {
  const std::vector<LoadedInstance> loaded = load_all(plan);
  bool all_pass = true;
  for (const LoadedInstance& entry : loaded) {
    if (entry.instance.num_variables > kOracleVariableLimit) {
      log << "skip " << entry.path << ": " << entry.instance.num_variables
          << " variables exceed the oracle budget (" << kOracleVariableLimit << ")\n";
      continue;
    }
    const ParetoFront truth = brute_force_front(entry.instance);
    for (SelectionStrategy selection : plan.selections) {
      for (BranchingRuleKind rule : plan.rules) {
        SearchConfig config;
        config.selection = selection;
        config.rule = rule;
        config.time_limit_seconds = plan.time_limit_seconds;
        if (plan.seed) config.rng_seed = *plan.seed;
        const std::string label = combo_label(selection, rule);
        std::string verdict = "pass";
        std::string detail;
        try {
          const SearchResult result = solve(entry.instance, config);
          if (result.status != SearchStatus::Complete) {
            verdict = "fail";
            detail = " (" + status_name(result.status) + ")";
          } else {
            std::vector<std::vector<std::int64_t>> got;
            got.reserve(result.nondominated_set.size());
            for (const SolutionPoint& point : result.nondominated_set) got.push_back(point.y);
            if (got != truth.images) {
              verdict = "fail";
              detail = " (got " + std::to_string(got.size()) + " points, oracle has " +
                       std::to_string(truth.images.size()) + ")";
            }
          }
        } catch (const std::exception& error) {
          verdict = "fail";
          detail = std::string(" (error: ") + error.what() + ")";
        }
        if (verdict == "fail") all_pass = false;
        log << verdict << ' ' << label << ' ' << entry.path << detail << '\n';
      }
    }
  }
  return all_pass ? 0 : 1;
}

}  // namespace mobb
