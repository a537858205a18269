#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace elastic::cli {

/// Wall-clock statistics of repeated full solves, in milliseconds.
struct BenchSummary {
  std::string label;
  double min = 0.0;
  double lq = 0.0;
  double mean = 0.0;
  double median = 0.0;
  double uq = 0.0;
  double max = 0.0;
  int repetitions = 0;
};

/// Quartiles use linear interpolation between order statistics (R's default type 7).
/// Throws std::invalid_argument on an empty sample.
BenchSummary summarize(std::string label, std::vector<double> millis);

/// Fixed-width table with columns min lq mean median uq max reps.
std::string format_bench_table(const std::vector<BenchSummary>& rows);

std::string write_bench_csv(const std::vector<BenchSummary>& rows);
std::vector<BenchSummary> read_bench_csv(std::string_view csv);

}  // namespace elastic::cli
