#pragma once

#include "elastic/types.hpp"

#include <span>

namespace elastic {

/// The four loss forms evaluated at one (dissimilarities, configuration) point.
struct StressReport {
  double elastic = 0.0;             ///< sum w (delta - d)^2 / delta^2
  double ratio_form = 0.0;          ///< sum w (1 - d / delta)^2, algebraically equal to elastic
  double log_stress = 0.0;          ///< sum w (log delta - log d)^2
  double kruskal_normalized = 0.0;  ///< sum w (delta - d)^2 / sum w delta^2
};

// Vector forms. All three spans share canonical pair order and length; a length mismatch
// throws ValidationError.

/// Throws ZeroDissimilarityError if any delta <= 0.
double elastic_stress(std::span<const double> delta, std::span<const double> weights,
                      std::span<const double> dist);

/// Same quantity written as squared deviations of d/delta from one.
double ratio_form_stress(std::span<const double> delta, std::span<const double> weights,
                         std::span<const double> dist);

/// Throws ZeroDissimilarityError for delta <= 0 and ZeroDistanceError for d == 0.
double log_stress(std::span<const double> delta, std::span<const double> weights,
                  std::span<const double> dist);

/// Throws ValidationError when sum w delta^2 is zero.
double kruskal_stress(std::span<const double> delta, std::span<const double> weights,
                      std::span<const double> dist);

double elastic_stress(const DissimilarityData& data, const Configuration& config);
double log_stress(const DissimilarityData& data, const Configuration& config);
double kruskal_stress(const DissimilarityData& data, const Configuration& config);

/// Evaluates every form. log_stress is NaN-free only if no distance is zero; when one is,
/// the log term is reported as +infinity rather than throwing.
StressReport stress_report(std::span<const double> delta, std::span<const double> weights,
                           std::span<const double> dist);

}  // namespace elastic
