#include "elastic/diagnostics.hpp"

#include "elastic/errors.hpp"
#include "elastic/numeric_io.hpp"

#include <algorithm>

namespace elastic {

std::vector<ShepardRow> shepard_table(const DissimilarityData& data, const SolveResult& result) {
  const std::vector<double> dist = pair_distances(result.config);
  const auto delta = data.delta();
  const auto w = data.weights();
  if (result.delta_hat.size() != data.size() || dist.size() != data.size()) {
    throw ValidationError("shepard table: result does not match the data");
  }

  std::vector<ShepardRow> rows;
  rows.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    const double dhat = result.delta_hat[k];
    rows.push_back({pair_at(data.n(), k), delta[k], dhat, dist[k], w[k], 1.0 - dist[k] / dhat});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const ShepardRow& a, const ShepardRow& b) {
    if (a.delta != b.delta) return a.delta < b.delta;
    return a.dhat < b.dhat;
  });
  return rows;
}

std::string write_shepard_csv(const std::vector<ShepardRow>& rows) {
  std::string out = "i,j,delta,dhat,dist,weight,residual_ratio\n";
  for (const ShepardRow& r : rows) {
    out += std::to_string(r.pair.col + 1) + ',' + std::to_string(r.pair.row + 1) + ',' +
           format_full(r.delta) + ',' + format_full(r.dhat) + ',' + format_full(r.dist) + ',' +
           format_full(r.weight) + ',' + format_full(r.residual_ratio) + '\n';
  }
  return out;
}

std::string export_configuration(const Configuration& config, const std::vector<std::string>& labels) {
  const std::size_t n = config.n();
  if (!labels.empty() && labels.size() != n) {
    throw ValidationError("label count " + std::to_string(labels.size()) +
                          " does not match point count " + std::to_string(n));
  }
  std::string out = "label";
  for (std::size_t c = 0; c < config.dims(); ++c) out += ",dim" + std::to_string(c + 1);
  out += '\n';
  for (std::size_t i = 0; i < n; ++i) {
    out += labels.empty() ? "P" + std::to_string(i + 1) : labels[i];
    for (std::size_t c = 0; c < config.dims(); ++c) {
      out += ',' + format_full(config.coords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)));
    }
    out += '\n';
  }
  return out;
}

Configuration parse_configuration(std::string_view csv, std::vector<std::string>* labels_out) {
  std::vector<std::vector<std::string_view>> rows;
  std::size_t start = 0;
  while (start < csv.size()) {
    std::size_t end = csv.find('\n', start);
    if (end == std::string_view::npos) end = csv.size();
    std::string_view line = csv.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) {
      std::vector<std::string_view> cells;
      std::size_t pos = 0;
      while (true) {
        const std::size_t comma = line.find(',', pos);
        cells.push_back(line.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos));
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
      }
      rows.push_back(std::move(cells));
    }
    start = end + 1;
  }
  if (rows.size() < 2 || rows.front().size() < 2) throw ParseError(1, 1, "configuration CSV needs a header and rows");

  const std::size_t p = rows.front().size() - 1;
  Matrix coords(static_cast<Eigen::Index>(rows.size() - 1), static_cast<Eigen::Index>(p));
  if (labels_out) labels_out->clear();
  for (std::size_t r = 1; r < rows.size(); ++r) {
    if (rows[r].size() != p + 1) throw ParseError(r + 1, 1, "ragged configuration row");
    if (labels_out) labels_out->emplace_back(rows[r][0]);
    for (std::size_t c = 0; c < p; ++c) {
      const auto v = parse_double(rows[r][c + 1]);
      if (!v) throw ParseError(r + 1, c + 2, "non-numeric coordinate '" + std::string(rows[r][c + 1]) + "'");
      coords(static_cast<Eigen::Index>(r - 1), static_cast<Eigen::Index>(c)) = *v;
    }
  }
  return Configuration(std::move(coords));
}

}  // namespace elastic
