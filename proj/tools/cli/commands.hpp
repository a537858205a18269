#pragma once

#include "cli/bench_summary.hpp"

#include "elastic/ingest.hpp"
#include "elastic/solver.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace elastic::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int { kOk = 0, kInvalidInput = 1, kNonFinite = 2 };

/// Where the dissimilarities come from: a builtin dataset or a file.
struct InputSpec {
  std::optional<std::string> dataset;
  std::optional<std::string> path;
  MatrixFormat format = MatrixFormat::automatic;
  /// Unset means identity for files and the dataset's own preprocessing for builtins.
  std::optional<Transform> transform;
  std::optional<std::string> weights_path;
};

struct SolveCommand {
  InputSpec input;
  SolveOptions options;
  std::string out_prefix = "elastic";
};

struct BenchCommand {
  InputSpec input;
  std::vector<Level> levels{Level::ratio, Level::ordinal};
  SolveOptions options;
  int reps = 100;
  int warmup = 5;
  std::string csv_path = "elastic_bench.csv";
};

/// Loads and validates the dissimilarities named by spec. Non-fatal parse notes go to
/// warnings when given.
DissimilarityData load_input(const InputSpec& spec, std::ostream* warnings = nullptr);

/// Short name of the input for labels: the dataset name or the file stem.
std::string input_name(const InputSpec& spec);

/// The JSON result document (schema 1) as text, newline-terminated.
std::string result_json(const SolveCommand& cmd, const DissimilarityData& data,
                        const SolveResult& result);

/// One-line summary printed by `solve`.
std::string summary_line(const SolveResult& result);

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err);

/// Runs the timed solves and returns one summary per level. Throws like solve().
std::vector<BenchSummary> run_bench(const BenchCommand& cmd);
int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err);

int cmd_datasets(const std::optional<std::string>& show, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace elastic::cli
