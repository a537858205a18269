#pragma once

#include "oracles.hpp"

#include "elastic/types.hpp"

#include <random>
#include <vector>

namespace testing_support {

inline elastic::Configuration to_config(const oracle::Dense& x) {
  elastic::Matrix m(static_cast<Eigen::Index>(x.size()), static_cast<Eigen::Index>(x.front().size()));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t c = 0; c < x[i].size(); ++c) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = x[i][c];
  return elastic::Configuration(std::move(m));
}

inline oracle::Dense to_dense(const elastic::Configuration& config) {
  oracle::Dense x(config.n(), std::vector<double>(config.dims()));
  for (std::size_t i = 0; i < config.n(); ++i)
    for (std::size_t c = 0; c < config.dims(); ++c)
      x[i][c] = config.coords()(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c));
  return x;
}

/// Dissimilarities equal to the distances of random points (exactly Euclidean data).
inline elastic::DissimilarityData euclidean_data(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  return elastic::DissimilarityData(n, oracle::distances(oracle::random_points(rng, n, p)));
}

/// Positive dissimilarities uniform in [lo, hi] with optional random weights in [0.2, 2].
inline elastic::DissimilarityData random_data(std::mt19937_64& rng, std::size_t n, bool weighted = false,
                                              double lo = 0.5, double hi = 3.0) {
  std::uniform_real_distribution<double> ud(lo, hi);
  std::uniform_real_distribution<double> uw(0.2, 2.0);
  std::vector<double> delta(elastic::pair_count(n));
  std::vector<double> w;
  for (double& d : delta) d = ud(rng);
  if (weighted) {
    w.resize(delta.size());
    for (double& x : w) x = uw(rng);
  }
  return elastic::DissimilarityData(n, std::move(delta), std::move(w));
}

/// Dissimilarities drawn from a small integer grid, so tie blocks are common.
inline elastic::DissimilarityData tied_data(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> ui(1, 6);
  std::vector<double> delta(elastic::pair_count(n));
  for (double& d : delta) d = ui(rng);
  return elastic::DissimilarityData(n, std::move(delta));
}

}  // namespace testing_support
