// SPDX-License-Identifier: Apache-2.0
// Command-line front end: solve one instance, run benchmark plans, generate
// seeded instances, and verify solver output against the brute-force oracle.
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mobb/bench.hpp"
#include "mobb/engine.hpp"
#include "mobb/instances.hpp"

namespace {

namespace fs = std::filesystem;

std::optional<std::uint64_t> env_seed_override() {
  const char* text = std::getenv("MOBB_SEED");
  if (text == nullptr || *text == '\0') return std::nullopt;
  std::size_t used = 0;
  const std::uint64_t value = std::stoull(text, &used);
  if (used != std::string(text).size())
    throw std::invalid_argument(std::string("MOBB_SEED is not an integer: ") + text);
  return value;
}

/// Accepts "7", "1,5,9", and the inclusive range form "1..10".
std::vector<std::uint64_t> parse_seed_list(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  const auto range = text.find("..");
  if (range != std::string::npos) {
    const std::uint64_t lo = std::stoull(text.substr(0, range));
    const std::uint64_t hi = std::stoull(text.substr(range + 2));
    if (hi < lo) throw std::invalid_argument("seed range is empty: " + text);
    for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    return seeds;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const std::string item = text.substr(start, comma == std::string::npos ? comma : comma - start);
    if (item.empty()) throw std::invalid_argument("bad seed list: " + text);
    seeds.push_back(std::stoull(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return seeds;
}

struct SolveArgs {
  std::string path;
  std::string select = "df";
  std::string rule = "mof";
  double time_limit = 3600.0;
  std::uint64_t node_limit = 0;
  bool rescore = false;
  bool extremes_only = false;
};

int run_solve(const SolveArgs& args) {
  const mobb::MoilpInstance instance = mobb::load_instance(args.path);
  mobb::SearchConfig config;
  config.selection = mobb::parse_selection(args.select);
  config.rule = mobb::parse_rule(args.rule);
  config.time_limit_seconds = args.time_limit;
  if (args.node_limit > 0) config.node_limit = args.node_limit;
  config.rescore_on_pop = args.rescore;
  if (args.extremes_only) config.dominance_test = mobb::DominanceTest::ExtremePointsOnly;
  if (const auto seed = env_seed_override()) config.rng_seed = *seed;

  const mobb::SearchResult result = mobb::solve(instance, config);
  std::cout << "instance: " << args.path << "\n"
            << "combo: " << mobb::combo_label(config.selection, config.rule) << "\n"
            << "status: " << mobb::status_name(result.status) << "\n"
            << "nodes created: " << result.nodes_created << "\n"
            << "nodes processed: " << result.nodes_processed << "\n"
            << "time [s]: " << std::fixed << std::setprecision(6) << result.wall_time_seconds
            << "\n"
            << "nondominated points: " << result.nondominated_set.size() << "\n";
  for (const mobb::SolutionPoint& point : result.nondominated_set) {
    std::cout << "  (";
    for (std::size_t k = 0; k < point.display_y.size(); ++k) {
      if (k > 0) std::cout << ", ";
      std::cout << point.display_y[k];
    }
    std::cout << ")  x =";
    for (const std::int64_t v : point.x) std::cout << ' ' << v;
    std::cout << "\n";
  }
  return result.status == mobb::SearchStatus::Complete ? 0 : 2;
}

struct PlanArgs {
  std::string plan_path;
  std::vector<std::string> instances;
  std::vector<std::string> selects;
  std::vector<std::string> rules;
  double time_limit = 3600.0;
  int repetitions = 1;
  std::string out_dir = ".";
  int jobs = 1;
  bool time_limit_set = false;
  bool out_set = false;
  bool jobs_set = false;
};

mobb::ExperimentPlan make_plan(const PlanArgs& args) {
  mobb::ExperimentPlan plan;
  if (!args.plan_path.empty()) {
    plan = mobb::load_plan(args.plan_path);
    if (args.time_limit_set) plan.time_limit_seconds = args.time_limit;
    if (args.out_set) plan.output_dir = args.out_dir;
    if (args.jobs_set) plan.jobs = args.jobs;
  } else {
    if (args.instances.empty())
      throw std::invalid_argument("no instances given (pass files or --plan)");
    plan.instance_patterns = args.instances;
    for (const std::string& name : args.selects) plan.selections.push_back(mobb::parse_selection(name));
    for (const std::string& name : args.rules) plan.rules.push_back(mobb::parse_rule(name));
    if (plan.selections.empty())
      plan.selections = {mobb::SelectionStrategy::DepthFirst,     mobb::SelectionStrategy::BreadthFirst,
                         mobb::SelectionStrategy::HypervolumeGap, mobb::SelectionStrategy::HypervolumeBox,
                         mobb::SelectionStrategy::Hausdorff,      mobb::SelectionStrategy::WidthOfEnclosure};
    if (plan.rules.empty())
      plan.rules = {mobb::BranchingRuleKind::MostOftenFractional, mobb::BranchingRuleKind::HowFractional,
                    mobb::BranchingRuleKind::SumOfRatios, mobb::BranchingRuleKind::RatioDominance};
    plan.time_limit_seconds = args.time_limit;
    plan.repetitions = args.repetitions;
    plan.output_dir = args.out_dir;
    plan.jobs = args.jobs;
  }
  if (const auto seed = env_seed_override()) plan.seed = *seed;
  return plan;
}

struct GenArgs {
  std::string family;
  int p = 3;
  int n = 0;
  int machines = 0;
  int jobs = 0;
  std::string seeds = "1";
  std::string out_dir = "instances";
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  double tightness = 0.0;
};

int run_gen(const GenArgs& args) {
  std::vector<std::uint64_t> seeds = parse_seed_list(args.seeds);
  if (const auto seed = env_seed_override()) seeds = {*seed};

  for (const std::uint64_t seed : seeds) {
    mobb::GeneratorSpec spec;
    if (args.family == "knapsack") {
      spec = mobb::knapsack_spec(args.p, args.n, seed);
    } else if (args.family == "gap") {
      spec = mobb::gap_spec(args.p, args.machines, args.jobs, seed);
    } else {
      throw std::invalid_argument("unknown family: " + args.family);
    }
    if (args.lo > 0) spec.value_lo = args.lo;
    if (args.hi > 0) spec.value_hi = args.hi;
    if (args.tightness > 0.0) spec.tightness = args.tightness;

    const fs::path dir = fs::path(args.out_dir) / args.family;
    fs::create_directories(dir);
    const fs::path path = dir / mobb::instance_filename(spec);
    mobb::save_instance(mobb::generate(spec), path.string());
    std::cout << "wrote " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Multi-objective branch-and-bound solver and benchmark runner"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Solve one instance file");
  solve_cmd->add_option("file", solve_args.path, "instance file")->required();
  solve_cmd->add_option("--select", solve_args.select, "node selection: df|bf|hvg|hvb|hd|woe");
  solve_cmd->add_option("--rule", solve_args.rule, "branching rule: mof|hf|sr|dom");
  solve_cmd->add_option("--time-limit", solve_args.time_limit, "seconds");
  solve_cmd->add_option("--node-limit", solve_args.node_limit, "max processed nodes (0 = none)");
  solve_cmd->add_flag("--rescore", solve_args.rescore, "refresh stale scores on pop");
  solve_cmd->add_flag("--extremes-only", solve_args.extremes_only,
                      "dominance fathoming from extreme points only");

  PlanArgs bench_args;
  CLI::App* bench_cmd = app.add_subcommand("bench", "Run a benchmark batch");
  bench_cmd->add_option("instances", bench_args.instances, "instance files or globs");
  CLI::Option* bench_plan = bench_cmd->add_option("--plan", bench_args.plan_path, "plan JSON file");
  bench_cmd->add_option("--select", bench_args.selects, "selection subset (default: all)")
      ->excludes(bench_plan);
  bench_cmd->add_option("--rule", bench_args.rules, "rule subset (default: all)")->excludes(bench_plan);
  bench_cmd->add_option("--reps", bench_args.repetitions, "repetitions per run")->excludes(bench_plan);
  bench_cmd->add_option("--time-limit", bench_args.time_limit, "seconds")
      ->each([&](const std::string&) { bench_args.time_limit_set = true; });
  bench_cmd->add_option("--out", bench_args.out_dir, "output directory")
      ->each([&](const std::string&) { bench_args.out_set = true; });
  bench_cmd->add_option("--jobs", bench_args.jobs, "parallel runs")
      ->each([&](const std::string&) { bench_args.jobs_set = true; });

  GenArgs gen_args;
  CLI::App* gen_cmd = app.add_subcommand("gen", "Generate seeded random instances");
  gen_cmd->add_option("--family", gen_args.family, "knapsack|gap")->required();
  gen_cmd->add_option("--p", gen_args.p, "objective count (2 or 3)")->required();
  gen_cmd->add_option("--n", gen_args.n, "knapsack item count");
  gen_cmd->add_option("--machines", gen_args.machines, "gap machine count");
  gen_cmd->add_option("--jobs", gen_args.jobs, "gap job count");
  gen_cmd->add_option("--seeds", gen_args.seeds, "seed, list, or range a..b (default 1)");
  gen_cmd->add_option("--out", gen_args.out_dir, "output root directory (default instances)");
  gen_cmd->add_option("--lo", gen_args.lo, "override value range lower end");
  gen_cmd->add_option("--hi", gen_args.hi, "override value range upper end");
  gen_cmd->add_option("--tightness", gen_args.tightness, "override capacity tightness");

  PlanArgs verify_args;
  CLI::App* verify_cmd =
      app.add_subcommand("verify", "Check solver output against the brute-force oracle");
  verify_cmd->add_option("instances", verify_args.instances, "instance files or globs");
  CLI::Option* verify_plan =
      verify_cmd->add_option("--plan", verify_args.plan_path, "plan JSON file");
  verify_cmd->add_option("--select", verify_args.selects, "selection subset (default: all)")
      ->excludes(verify_plan);
  verify_cmd->add_option("--rule", verify_args.rules, "rule subset (default: all)")
      ->excludes(verify_plan);
  verify_cmd->add_option("--time-limit", verify_args.time_limit, "seconds")
      ->each([&](const std::string&) { verify_args.time_limit_set = true; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (solve_cmd->parsed()) return run_solve(solve_args);
    if (gen_cmd->parsed()) return run_gen(gen_args);
    if (bench_cmd->parsed()) return mobb::run_bench(make_plan(bench_args), std::cout).exit_code;
    if (verify_cmd->parsed()) return mobb::verify_bench(make_plan(verify_args), std::cout);
  } catch (const std::exception& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
