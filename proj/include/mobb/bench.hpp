// SPDX-License-Identifier: Apache-2.0
#ifndef MOBB_BENCH_HPP
#define MOBB_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mobb/engine.hpp"

namespace mobb {

/// Batch description: the full selection x rule matrix over a set of
/// instance files, mirroring the reporting protocol of the experiments.
struct ExperimentPlan {
  std::vector<std::string> instance_patterns;  // paths, may contain * and ?
  std::vector<SelectionStrategy> selections;   // non-empty
  std::vector<BranchingRuleKind> rules;        // non-empty
  double time_limit_seconds = 3600.0;
  std::optional<std::uint64_t> node_limit;  // per-run processed-node cap
  int repetitions = 1;
  std::string output_dir = ".";
  int jobs = 1;
  std::optional<std::uint64_t> seed;  // forwarded to SearchConfig::rng_seed
};

/// Parses a plan document. Missing "selections"/"rules" default to the full
/// matrix (6 selections x 4 rules). Throws std::invalid_argument on schema
/// violations and when the plan would be empty.
ExperimentPlan plan_from_text(const std::string& text);

ExperimentPlan load_plan(const std::string& path);

/// Expands `*`/`?` patterns against the filesystem (sorted matches, stable
/// order) and passes plain paths through. Throws std::invalid_argument when
/// nothing matches at all.
std::vector<std::string> expand_instance_patterns(const std::vector<std::string>& patterns);

/// One CSV data row of a benchmark batch.
struct RunRecord {
  std::string family;
  int p = 0;
  int n = 0;
  std::string combo;
  std::string instance;
  std::string status;  // Complete, TimeLimit, NodeLimit, or error
  std::uint64_t nodes_created = 0;
  std::uint64_t nodes_processed = 0;
  double time_s = 0.0;
};

struct BenchReport {
  std::vector<RunRecord> rows;  // combo-major, then instance, then repetition
  int exit_code = 0;            // 0 on full completion, 2 if any run errored
};

/// Runs the plan (parallel across runs up to `jobs`; each solve is
/// single-threaded), then writes results.csv and summary.md into the output
/// directory. Progress and file locations go to `log`.
BenchReport run_bench(const ExperimentPlan& plan, std::ostream& log);

/// Serializes rows in the stable column order
/// family,p,n,combo,instance,status,nodes_created,nodes_processed,time_s.
std::string results_csv(const std::vector<RunRecord>& rows);

/// Markdown summary per size class: one row per combo with mean nodes and
/// mean time over solved runs, solved counts bracketed when < total. Means
/// are printed at full precision so they can be recomputed from the CSV.
std::string summary_markdown(const ExperimentPlan& plan, const std::vector<RunRecord>& rows);

/// Solves every combo x instance pair and compares each nondominated set
/// against the brute-force oracle, printing one pass/fail line per run.
/// Instances beyond the oracle budget are skipped with a warning. Returns 0
/// iff every executed comparison passed.
int verify_bench(const ExperimentPlan& plan, std::ostream& log);

}  // namespace mobb

#endif  // MOBB_BENCH_HPP
