#pragma once

#include "elastic/types.hpp"

#include <span>
#include <vector>

namespace elastic {

/// Weighted least-squares projection onto non-decreasing sequences.
///
/// Single left-to-right pass of pool-adjacent-violators with a block stack. Each output
/// block equals the weighted mean of its targets; blocks whose weights are all zero take
/// the plain mean. Throws ValidationError on length mismatch, negative weights, or when
/// every weight is zero.
std::vector<double> weighted_pava(std::span<const double> targets, std::span<const double> weights);

/// Distances at or below this fraction of the largest distance are raised to it before
/// the reciprocal transform.
inline constexpr double kDistanceFloorFraction = 1e-10;

/// Fitted dissimilarities for fixed configuration distances.
///
/// Works on gamma = -1/dhat: targets c = -1/d, weights w d^2, monotone along data.order()
/// with tied observed dissimilarities left unconstrained among themselves (within a tie
/// block, pairs are visited in ascending c). Returns dhat = -1/gamma in canonical order.
/// Throws DegenerateConfigurationError when every distance is zero.
std::vector<double> update_delta(const DissimilarityData& data, std::span<const double> dist);

std::vector<double> update_delta(const DissimilarityData& data, const Configuration& config);

}  // namespace elastic
