#include "cli/bench_summary.hpp"

#include "elastic/errors.hpp"
#include "elastic/numeric_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <stdexcept>

namespace elastic::cli {
namespace {

double quantile_sorted(const std::vector<double>& x, double prob) {
  const double h = (static_cast<double>(x.size()) - 1.0) * prob;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, x.size() - 1);
  return x[lo] + (h - static_cast<double>(lo)) * (x[hi] - x[lo]);
}

}  // namespace

BenchSummary summarize(std::string label, std::vector<double> millis) {
  if (millis.empty()) throw std::invalid_argument("benchmark summary needs at least one timing");
  std::sort(millis.begin(), millis.end());
  BenchSummary s;
  s.label = std::move(label);
  s.repetitions = static_cast<int>(millis.size());
  s.min = millis.front();
  s.max = millis.back();
  s.lq = quantile_sorted(millis, 0.25);
  s.median = quantile_sorted(millis, 0.5);
  s.uq = quantile_sorted(millis, 0.75);
  s.mean = std::accumulate(millis.begin(), millis.end(), 0.0) / static_cast<double>(millis.size());
  // Interpolation can land a hair outside [min, max] or reorder equal neighbours.
  s.lq = std::clamp(s.lq, s.min, s.max);
  s.median = std::clamp(s.median, s.lq, s.max);
  s.uq = std::clamp(s.uq, s.median, s.max);
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

std::string format_bench_table(const std::vector<BenchSummary>& rows) {
  std::size_t width = 5;
  for (const auto& r : rows) width = std::max(width, r.label.size());
  std::string out(width, ' ');
  char buf[160];
  std::snprintf(buf, sizeof buf, " %9s %9s %9s %9s %9s %9s %6s\n", "min", "lq", "mean", "median", "uq",
                "max", "reps");
  out += buf;
  for (const auto& r : rows) {
    out += r.label + std::string(width - r.label.size(), ' ');
    std::snprintf(buf, sizeof buf, " %9.3f %9.3f %9.3f %9.3f %9.3f %9.3f %6d\n", r.min, r.lq, r.mean,
                  r.median, r.uq, r.max, r.repetitions);
    out += buf;
  }
  return out;
}

std::string write_bench_csv(const std::vector<BenchSummary>& rows) {
  std::string out = "label,min_ms,lq_ms,mean_ms,median_ms,uq_ms,max_ms,reps\n";
  for (const auto& r : rows) {
    out += r.label;
    for (double v : {r.min, r.lq, r.mean, r.median, r.uq, r.max}) out += ',' + format_shortest(v);
    out += ',' + std::to_string(r.repetitions) + '\n';
  }
  return out;
}

std::vector<BenchSummary> read_bench_csv(std::string_view csv) {
  std::vector<BenchSummary> rows;
  std::size_t start = 0;
  std::size_t line_no = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    const std::string_view line = csv.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty() || line_no == 1) continue;

    std::vector<std::string_view> cells;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      cells.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    if (cells.size() != 8) throw ParseError(line_no, 1, "benchmark CSV rows need 8 fields");
    BenchSummary s;
    s.label = std::string(cells[0]);
    double* fields[] = {&s.min, &s.lq, &s.mean, &s.median, &s.uq, &s.max};
    for (std::size_t c = 0; c < 6; ++c) {
      const auto v = parse_double(cells[c + 1]);
      if (!v) throw ParseError(line_no, c + 2, "non-numeric field '" + std::string(cells[c + 1]) + "'");
      *fields[c] = *v;
    }
    const auto reps = parse_double(cells[7]);
    if (!reps) throw ParseError(line_no, 8, "non-numeric repetition count");
    s.repetitions = static_cast<int>(*reps);
    rows.push_back(std::move(s));
  }
  return rows;
}

}  // namespace elastic::cli
