#include "elastic/init.hpp"

#include "elastic/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>

namespace elastic {

Configuration torgerson(const DissimilarityData& data, std::size_t p) {
  const std::size_t n = data.n();
  if (p == 0 || p > n - 1) {
    throw ValidationError("dimensionality must be between 1 and n - 1 = " + std::to_string(n - 1) +
                          ", got " + std::to_string(p));
  }
  const auto ni = static_cast<Eigen::Index>(n);

  Matrix sq = Matrix::Zero(ni, ni);
  const auto delta = data.delta();
  std::size_t k = 0;
  for (Eigen::Index j = 0; j + 1 < ni; ++j) {
    for (Eigen::Index i = j + 1; i < ni; ++i, ++k) {
      sq(i, j) = sq(j, i) = delta[k] * delta[k];
    }
  }

  // -1/2 J sq J without forming J.
  const Eigen::VectorXd row_means = sq.rowwise().mean();
  const double grand_mean = row_means.mean();
  Matrix b(ni, ni);
  for (Eigen::Index i = 0; i < ni; ++i) {
    for (Eigen::Index j = 0; j < ni; ++j) {
      b(i, j) = -0.5 * (sq(i, j) - row_means(i) - row_means(j) + grand_mean);
    }
  }

  Eigen::SelfAdjointEigenSolver<Matrix> eig(b);
  if (eig.info() != Eigen::Success) throw NumericalError("classical scaling: eigen-decomposition failed");

  // Eigen returns eigenvalues in ascending order.
  Matrix coords(ni, static_cast<Eigen::Index>(p));
  for (std::size_t c = 0; c < p; ++c) {
    const Eigen::Index src = ni - 1 - static_cast<Eigen::Index>(c);
    Eigen::VectorXd v = eig.eigenvectors().col(src);
    Eigen::Index arg = 0;
    for (Eigen::Index i = 1; i < ni; ++i) {
      if (std::abs(v(i)) > std::abs(v(arg))) arg = i;
    }
    if (v(arg) < 0.0) v = -v;
    coords.col(static_cast<Eigen::Index>(c)) = v * std::sqrt(std::max(eig.eigenvalues()(src), 0.0));
  }

  Configuration config(std::move(coords));
  config.center();
  return config;
}

double optimal_lambda(const DissimilarityData& data, const Configuration& config) {
  const std::vector<double> dist = pair_distances(config);
  const auto delta = data.delta();
  const auto w = data.weights();
  double num = 0.0;
  double den = 0.0;
  for (std::size_t k = 0; k < dist.size(); ++k) {
    const double u = w[k] / delta[k];
    num += u * dist[k];
    den += u / delta[k] * dist[k] * dist[k];
  }
  if (!(den > 0.0)) {
    throw DegenerateConfigurationError("cannot rescale a configuration whose weighted distances are all zero");
  }
  return num / den;
}

ScaledInit initial_configuration(const DissimilarityData& data, std::size_t p) {
  ScaledInit init{torgerson(data, p), 1.0};
  init.lambda = optimal_lambda(data, init.config);
  init.config.scale(init.lambda);
  init.config.center();
  return init;
}

}  // namespace elastic
