#include "elastic/stress.hpp"

#include "elastic/errors.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace elastic {
namespace {

void check_lengths(std::span<const double> delta, std::span<const double> weights,
                   std::span<const double> dist) {
  if (delta.size() != weights.size() || delta.size() != dist.size()) {
    throw ValidationError("stress: length mismatch (delta " + std::to_string(delta.size()) +
                          ", weights " + std::to_string(weights.size()) + ", distances " +
                          std::to_string(dist.size()) + ")");
  }
}

void check_positive_delta(std::span<const double> delta) {
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (!(delta[k] > 0.0)) {
      throw ZeroDissimilarityError(k, "elastic stress is undefined for a non-positive "
                                      "dissimilarity (pair index " + std::to_string(k) + ")");
    }
  }
}

}  // namespace

double elastic_stress(std::span<const double> delta, std::span<const double> weights,
                      std::span<const double> dist) {
  check_lengths(delta, weights, dist);
  check_positive_delta(delta);
  double sum = 0.0;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    const double r = delta[k] - dist[k];
    sum += weights[k] * (r * r / (delta[k] * delta[k]));
  }
  return sum;
}

double ratio_form_stress(std::span<const double> delta, std::span<const double> weights,
                         std::span<const double> dist) {
  check_lengths(delta, weights, dist);
  check_positive_delta(delta);
  double sum = 0.0;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    const double r = 1.0 - dist[k] / delta[k];
    sum += weights[k] * r * r;
  }
  return sum;
}

double log_stress(std::span<const double> delta, std::span<const double> weights,
                  std::span<const double> dist) {
  check_lengths(delta, weights, dist);
  check_positive_delta(delta);
  double sum = 0.0;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    if (!(dist[k] > 0.0)) {
      throw ZeroDistanceError(k, "log-stress is undefined for a zero distance (pair index " +
                                     std::to_string(k) + ")");
    }
    const double r = std::log(delta[k]) - std::log(dist[k]);
    sum += weights[k] * r * r;
  }
  return sum;
}

double kruskal_stress(std::span<const double> delta, std::span<const double> weights,
                      std::span<const double> dist) {
  check_lengths(delta, weights, dist);
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < delta.size(); ++k) {
    const double r = delta[k] - dist[k];
    num += weights[k] * r * r;
    den += weights[k] * delta[k] * delta[k];
  }
  if (!(den > 0.0)) throw ValidationError("normalized stress: weighted dissimilarity norm is zero");
  return num / den;
}

double elastic_stress(const DissimilarityData& data, const Configuration& config) {
  return elastic_stress(data.delta(), data.weights(), pair_distances(config));
}

double log_stress(const DissimilarityData& data, const Configuration& config) {
  return log_stress(data.delta(), data.weights(), pair_distances(config));
}

double kruskal_stress(const DissimilarityData& data, const Configuration& config) {
  return kruskal_stress(data.delta(), data.weights(), pair_distances(config));
}

StressReport stress_report(std::span<const double> delta, std::span<const double> weights,
                           std::span<const double> dist) {
  StressReport report;
  report.elastic = elastic_stress(delta, weights, dist);
  report.ratio_form = ratio_form_stress(delta, weights, dist);
  try {
    report.log_stress = log_stress(delta, weights, dist);
  } catch (const ZeroDistanceError&) {
    report.log_stress = std::numeric_limits<double>::infinity();
  }
  report.kruskal_normalized = kruskal_stress(delta, weights, dist);
  return report;
}

}  // namespace elastic
