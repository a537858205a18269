#include "elastic/solver.hpp"

#include "elastic/errors.hpp"
#include "elastic/init.hpp"
#include "elastic/isotonic.hpp"
#include "elastic/majorize.hpp"
#include "elastic/numeric_io.hpp"

#include <cmath>
#include <optional>

namespace elastic {

std::string_view to_string(Level level) { return level == Level::ratio ? "ratio" : "ordinal"; }

std::optional<Level> parse_level_name(std::string_view name) {
  if (name == "ratio" || name == "metric" || name == "numerical") return Level::ratio;
  if (name == "ordinal" || name == "nonmetric") return Level::ordinal;
  return std::nullopt;
}

void SolveOptions::validate() const {
  if (dims == 0) throw ValidationError("dimensionality must be at least 1");
  if (max_iter < 1) throw ValidationError("max_iter must be at least 1, got " + std::to_string(max_iter));
  if (!(eps > 0.0) || !std::isfinite(eps)) throw ValidationError("eps must be positive and finite");
}

SolveResult solve(const DissimilarityData& data, const SolveOptions& options) {
  options.validate();

  SolveResult result;
  result.level = options.level;
  ScaledInit init = initial_configuration(data, options.dims);
  result.lambda = init.lambda;
  result.config = std::move(init.config);
  result.delta_hat.assign(data.delta().begin(), data.delta().end());

  const auto weights = data.weights();
  auto stress_now = [&] { return elastic_stress(result.delta_hat, weights, pair_distances(result.config)); };
  result.stress_trace.push_back(stress_now());

  // Ratio level keeps one workspace; ordinal rebuilds it after every monotone regression.
  std::optional<MajorizationWorkspace> workspace(std::in_place, data, result.delta_hat);

  for (int iter = 1; iter <= options.max_iter; ++iter) {
    result.config = guttman_update(*workspace, result.delta_hat, result.config);
    if (options.level == Level::ordinal) {
      result.delta_hat = update_delta(data, result.config);
      workspace.emplace(data, result.delta_hat);
    }

    const double previous = result.stress_trace.back();
    const double current = stress_now();
    result.stress_trace.push_back(current);
    result.iterations = iter;
    if (!std::isfinite(current)) {
      throw NonFiniteStressError(iter, result.stress_trace,
                                 "stress became non-finite at iteration " + std::to_string(iter) +
                                     " (previous stress " + format_shortest(previous) + ")");
    }

    const double change = std::abs(previous - current);
    const double scale = options.relative ? std::abs(previous) : 1.0;
    if (change < options.eps * scale) {
      result.converged = true;
      break;
    }
  }

  result.report = stress_report(data, result);
  return result;
}

StressReport stress_report(const DissimilarityData& data, const SolveResult& result) {
  return stress_report(result.delta_hat, data.weights(), pair_distances(result.config));
}

}  // namespace elastic
