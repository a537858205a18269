#pragma once

#include "elastic/stress.hpp"
#include "elastic/types.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace elastic {

enum class Level { ratio, ordinal };

std::string_view to_string(Level level);
std::optional<Level> parse_level_name(std::string_view name);

struct SolveOptions {
  Level level = Level::ordinal;
  std::size_t dims = 2;
  int max_iter = 1000;
  /// Iteration stops once the stress change between consecutive iterations drops below eps.
  double eps = 1e-6;
  /// Measure the change relative to the previous stress instead of absolutely.
  bool relative = false;

  /// Throws ValidationError if max_iter < 1, eps <= 0 or non-finite, or dims == 0.
  void validate() const;
};

struct SolveResult {
  Level level = Level::ordinal;
  Configuration config;
  /// Fitted dissimilarities; identical to the observed ones in ratio mode.
  std::vector<double> delta_hat;
  /// Entry 0 is the stress of the scaled start, entry k the stress after iteration k.
  std::vector<double> stress_trace;
  int iterations = 0;
  bool converged = false;
  /// Scale applied to the classical-scaling start.
  double lambda = 1.0;
  StressReport report;

  double final_stress() const { return stress_trace.back(); }
};

/// Alternating minimization of elastic stress.
///
/// Ratio level repeats Guttman transforms with the observed dissimilarities. Ordinal level
/// alternates one Guttman transform (weights w/dhat^2) with one monotone regression of
/// dhat, starting from dhat = delta. Stress is recorded after each full iteration.
/// Reaching max_iter returns converged == false. Throws NonFiniteStressError if stress
/// stops being finite.
SolveResult solve(const DissimilarityData& data, const SolveOptions& options);

/// All stress forms at the solution, using dhat as the dissimilarities.
StressReport stress_report(const DissimilarityData& data, const SolveResult& result);

}  // namespace elastic
