#pragma once

#include "elastic/types.hpp"

namespace elastic {

struct ScaledInit {
  Configuration config;
  double lambda = 1.0;
};

/// Classical scaling of the squared dissimilarities. Weights are not used.
///
/// The doubly centered matrix -1/2 J D^2 J is decomposed in full; the p largest
/// eigenpairs give the coordinates, with negative eigenvalues clamped to zero. Columns
/// come out in descending eigenvalue order, each signed so its largest-magnitude entry is
/// positive (first such entry on exact ties), and the result is centered.
/// Throws ValidationError if p == 0 or p > n - 1, NumericalError if the solver fails.
Configuration torgerson(const DissimilarityData& data, std::size_t p);

/// Scale factor minimizing sum (w/delta^2)(delta - lambda d)^2:
/// lambda = sum (w/delta) d / sum (w/delta^2) d^2.
/// Throws DegenerateConfigurationError when the denominator is zero.
double optimal_lambda(const DissimilarityData& data, const Configuration& config);

/// torgerson() followed by rescaling with optimal_lambda().
ScaledInit initial_configuration(const DissimilarityData& data, std::size_t p);

}  // namespace elastic
