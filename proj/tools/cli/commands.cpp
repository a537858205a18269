#include "cli/commands.hpp"

#include "elastic/datasets.hpp"
#include "elastic/diagnostics.hpp"
#include "elastic/errors.hpp"
#include "elastic/numeric_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <map>

namespace elastic::cli {
namespace {

using json = nlohmann::ordered_json;

json stress_json(const StressReport& r) {
  return json{{"elastic", r.elastic},
              {"ratio_form", r.ratio_form},
              {"log_stress", r.log_stress},
              {"kruskal_normalized", r.kruskal_normalized}};
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw ValidationError("cannot open output file '" + path + "' for writing");
  file << text;
  if (!file) throw ValidationError("failed writing '" + path + "'");
}

template <typename Fn>
int guarded(std::ostream& err, Fn&& fn) {
  try {
    return fn();
  } catch (const NonFiniteStressError& e) {
    err << "error: " << e.what() << '\n';
    return kNonFinite;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace

DissimilarityData load_input(const InputSpec& spec, std::ostream* warnings) {
  if (spec.dataset.has_value() == spec.path.has_value()) {
    throw ValidationError("exactly one of --input or --dataset is required");
  }
  std::optional<RawMatrix> weights;
  if (spec.weights_path) weights = parse_matrix(read_file(*spec.weights_path), MatrixFormat::automatic);

  if (spec.dataset) {
    if (!spec.transform && !weights) return builtin_dataset(*spec.dataset);
    const Transform t = spec.transform.value_or(builtin_transform(*spec.dataset));
    const RawMatrix raw =
        parse_matrix(builtin_dataset_source(*spec.dataset), MatrixFormat::csv_full, MatrixKind::similarity);
    return to_dissimilarities(raw, t, std::move(weights));
  }

  const Transform t = spec.transform.value_or(Transform::identity);
  const MatrixKind kind = t == Transform::identity ? MatrixKind::dissimilarity : MatrixKind::similarity;
  const RawMatrix raw = parse_matrix(read_file(*spec.path), spec.format, kind);
  if (warnings) {
    for (const std::string& w : raw.warnings) *warnings << "warning: " << w << '\n';
  }
  return to_dissimilarities(raw, t, std::move(weights));
}

std::string input_name(const InputSpec& spec) {
  if (spec.dataset) return *spec.dataset;
  if (spec.path) return std::filesystem::path(*spec.path).stem().string();
  return "input";
}

std::string result_json(const SolveCommand& cmd, const DissimilarityData& data, const SolveResult& result) {
  json input;
  if (cmd.input.dataset) {
    input["dataset"] = *cmd.input.dataset;
  } else {
    input["path"] = cmd.input.path.value_or("");
    input["format"] = std::string(to_string(cmd.input.format));
  }
  if (cmd.input.transform) input["transform"] = std::string(to_string(*cmd.input.transform));
  if (cmd.input.weights_path) input["weights"] = *cmd.input.weights_path;

  const SolveOptions& o = cmd.options;
  json coords = json::array();
  for (Eigen::Index i = 0; i < result.config.coords().rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < result.config.coords().cols(); ++c) row.push_back(result.config.coords()(i, c));
    coords.push_back(std::move(row));
  }

  json doc{
      {"schema", 1},
      {"input", std::move(input)},
      {"n", data.n()},
      {"m", data.size()},
      {"options",
       {{"level", std::string(to_string(o.level))},
        {"dims", o.dims},
        {"max_iter", o.max_iter},
        {"eps", o.eps},
        {"relative", o.relative}}},
      {"iterations", result.iterations},
      {"converged", result.converged},
      {"lambda", result.lambda},
      {"stress", stress_json(result.report)},
      {"stress_trace", result.stress_trace},
      {"labels", data.labels()},
      {"configuration", std::move(coords)},
      {"delta_hat", result.delta_hat},
  };
  return doc.dump(2) + '\n';
}

std::string summary_line(const SolveResult& result) {
  return std::string(to_string(result.level)) + ": iterations " + std::to_string(result.iterations) +
         (result.converged ? " (converged)" : " (max_iter reached)") + ", stress " +
         format_shortest(result.final_stress()) + ", log-stress " + format_shortest(result.report.log_stress);
}

int cmd_solve(const SolveCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const DissimilarityData data = load_input(cmd.input, &err);
    const SolveResult result = solve(data, cmd.options);

    const std::string json_text = result_json(cmd, data, result);
    const std::string config_text = export_configuration(result.config, data.labels());
    const std::string shepard_text = write_shepard_csv(shepard_table(data, result));
    write_text(cmd.out_prefix + ".result.json", json_text);
    write_text(cmd.out_prefix + ".config.csv", config_text);
    write_text(cmd.out_prefix + ".shepard.csv", shepard_text);

    out << summary_line(result) << '\n';
    return kOk;
  });
}

std::vector<BenchSummary> run_bench(const BenchCommand& cmd) {
  if (cmd.reps < 1) throw ValidationError("--reps must be at least 1");
  if (cmd.warmup < 0) throw ValidationError("--warmup must be non-negative");
  const DissimilarityData data = load_input(cmd.input);
  const std::string name = input_name(cmd.input);

  std::vector<BenchSummary> rows;
  for (Level level : cmd.levels) {
    SolveOptions opts = cmd.options;
    opts.level = level;
    for (int w = 0; w < cmd.warmup; ++w) (void)solve(data, opts);

    std::vector<double> millis;
    millis.reserve(static_cast<std::size_t>(cmd.reps));
    for (int r = 0; r < cmd.reps; ++r) {
      const auto start = std::chrono::steady_clock::now();
      const SolveResult result = solve(data, opts);
      const auto stop = std::chrono::steady_clock::now();
      if (result.iterations < 1) throw NumericalError("benchmark solve did not iterate");
      millis.push_back(std::chrono::duration<double, std::milli>(stop - start).count());
    }
    rows.push_back(summarize(name + "/" + std::string(to_string(level)), std::move(millis)));
  }
  return rows;
}

int cmd_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::vector<BenchSummary> rows = run_bench(cmd);
    out << format_bench_table(rows);
    if (!cmd.csv_path.empty()) write_text(cmd.csv_path, write_bench_csv(rows));
    return kOk;
  });
}

int cmd_datasets(const std::optional<std::string>& show, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (show) {
      out << write_dissimilarities(builtin_dataset(*show));
      return kOk;
    }
    for (const DatasetInfo& d : list_datasets()) {
      out << d.name << "\tn=" << d.n << "\tm=" << pair_count(d.n)
          << (d.available ? "" : "\t(not bundled)") << '\t' << d.citation << '\n';
    }
    return kOk;
  });
}

namespace {

void add_input_options(CLI::App& cmd, InputSpec& spec, std::string& format, std::string& transform) {
  auto* in = cmd.add_option("-i,--input", spec.path, "Dissimilarity matrix file");
  auto* ds = cmd.add_option("-d,--dataset", spec.dataset, "Builtin dataset")
                 ->check(CLI::IsMember({"ekman", "morse"}));
  in->excludes(ds);
  cmd.add_option("--format", format, "Input layout")
      ->check(CLI::IsMember({"auto", "csv", "csv-full", "triangle", "triangle-rows", "triangle-diag"}));
  cmd.add_option("--transform", transform, "Similarity-to-dissimilarity conversion")
      ->check(CLI::IsMember({"identity", "one-minus", "max-minus"}));
  cmd.add_option("--weights", spec.weights_path, "Weight matrix file (same layouts as the input)");
}

void add_solver_options(CLI::App& cmd, SolveOptions& opts) {
  cmd.add_option("-p,--dims", opts.dims, "Dimensionality")->capture_default_str();
  cmd.add_option("--maxiter", opts.max_iter, "Maximum iterations")->capture_default_str();
  cmd.add_option("--eps", opts.eps, "Stress-change tolerance")->capture_default_str();
  cmd.add_flag("--relative", opts.relative, "Use relative stress change for convergence");
}

void finish_input(InputSpec& spec, const std::string& format, const std::string& transform) {
  spec.format = parse_format_name(format).value_or(MatrixFormat::automatic);
  if (!transform.empty()) spec.transform = parse_transform_name(transform);
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Elastic multidimensional scaling"};
  app.require_subcommand(1);

  SolveCommand solve_cmd;
  std::string solve_format = "auto", solve_transform, solve_level = "ordinal";
  auto* solve_app = app.add_subcommand("solve", "Fit a configuration and write result files");
  add_input_options(*solve_app, solve_cmd.input, solve_format, solve_transform);
  add_solver_options(*solve_app, solve_cmd.options);
  solve_app->add_option("--level", solve_level, "ratio or ordinal")
      ->check(CLI::IsMember({"ratio", "ordinal"}))
      ->capture_default_str();
  solve_app->add_option("-o,--out", solve_cmd.out_prefix, "Output file prefix")->capture_default_str();

  BenchCommand bench_cmd;
  std::string bench_format = "auto", bench_transform, bench_level = "both";
  auto* bench_app = app.add_subcommand("bench", "Time repeated full solves");
  add_input_options(*bench_app, bench_cmd.input, bench_format, bench_transform);
  add_solver_options(*bench_app, bench_cmd.options);
  bench_app->add_option("--level", bench_level, "ratio, ordinal or both")
      ->check(CLI::IsMember({"ratio", "ordinal", "both"}))
      ->capture_default_str();
  bench_app->add_option("--reps", bench_cmd.reps, "Timed repetitions per level")->capture_default_str();
  bench_app->add_option("--warmup", bench_cmd.warmup, "Untimed warmup solves per level")->capture_default_str();
  bench_app->add_option("--csv", bench_cmd.csv_path, "CSV output path (empty to skip)")->capture_default_str();

  std::optional<std::string> show;
  auto* datasets_app = app.add_subcommand("datasets", "List builtin datasets");
  datasets_app->add_option("--show", show, "Print a dataset as pair CSV");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }

  if (solve_app->parsed()) {
    finish_input(solve_cmd.input, solve_format, solve_transform);
    solve_cmd.options.level = *parse_level_name(solve_level);
    return cmd_solve(solve_cmd, out, err);
  }
  if (bench_app->parsed()) {
    finish_input(bench_cmd.input, bench_format, bench_transform);
    if (bench_level != "both") bench_cmd.levels = {*parse_level_name(bench_level)};
    return cmd_bench(bench_cmd, out, err);
  }
  return cmd_datasets(show, out, err);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("elastic");
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace elastic::cli
