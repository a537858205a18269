#include "elastic/majorize.hpp"

#include "elastic/errors.hpp"

#include <cmath>

namespace elastic {

MajorizationWorkspace::MajorizationWorkspace(const DissimilarityData& data,
                                             std::span<const double> delta_hat)
    : n_(data.n()) {
  const std::size_t m = data.size();
  if (delta_hat.size() != m) {
    throw ValidationError("fitted dissimilarities: expected " + std::to_string(m) + ", got " +
                          std::to_string(delta_hat.size()));
  }
  const auto w = data.weights();
  u_.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    if (!(delta_hat[k] > 0.0)) {
      throw ZeroDissimilarityError(k, "fitted dissimilarity at pair index " + std::to_string(k) +
                                          " is not strictly positive");
    }
    u_[k] = w[k] / (delta_hat[k] * delta_hat[k]);
  }

  const auto ni = static_cast<Eigen::Index>(n_);
  v_ = Matrix::Zero(ni, ni);
  std::size_t k = 0;
  for (Eigen::Index j = 0; j + 1 < ni; ++j) {
    for (Eigen::Index i = j + 1; i < ni; ++i, ++k) {
      v_(i, j) = v_(j, i) = -u_[k];
      v_(i, i) += u_[k];
      v_(j, j) += u_[k];
    }
  }

  const Matrix shifted = v_ + Matrix::Constant(ni, ni, 1.0 / static_cast<double>(n_));
  factor_.compute(shifted);
  if (factor_.info() != Eigen::Success || !factor_.isPositive()) {
    throw NumericalError("majorization: cannot factor the weighted Laplacian");
  }
  const Eigen::VectorXd diag = factor_.vectorD();
  if (diag.minCoeff() <= 1e-13 * diag.maxCoeff()) {
    throw NumericalError("majorization: weighted Laplacian is singular; the graph of positive "
                         "weights is disconnected");
  }
}

Matrix MajorizationWorkspace::apply_pseudoinverse(const Matrix& rhs) const {
  Matrix y = factor_.solve(rhs);
  const Eigen::RowVectorXd means = y.colwise().mean();
  y.rowwise() -= means;
  return y;
}

Matrix guttman_rhs(const MajorizationWorkspace& ws, std::span<const double> delta_hat,
                   const Configuration& config) {
  const Matrix& x = config.coords();
  const auto ni = static_cast<Eigen::Index>(ws.n());
  const auto u = ws.effective_weights();
  Matrix rhs = Matrix::Zero(ni, x.cols());
  std::size_t k = 0;
  for (Eigen::Index j = 0; j + 1 < ni; ++j) {
    for (Eigen::Index i = j + 1; i < ni; ++i, ++k) {
      const Eigen::RowVectorXd diff = x.row(i) - x.row(j);
      const double d = diff.norm();
      if (d == 0.0) continue;
      const double c = u[k] * delta_hat[k] / d;
      rhs.row(i) += c * diff;
      rhs.row(j) -= c * diff;
    }
  }
  return rhs;
}

Configuration guttman_update(const MajorizationWorkspace& ws, std::span<const double> delta_hat,
                             const Configuration& config) {
  if (config.n() != ws.n()) {
    throw ValidationError("configuration has " + std::to_string(config.n()) +
                          " points, workspace expects " + std::to_string(ws.n()));
  }
  if (delta_hat.size() != ws.effective_weights().size()) {
    throw ValidationError("fitted dissimilarities do not match the workspace");
  }
  const Matrix& x = config.coords();
  if ((x.rowwise() - x.row(0)).cwiseAbs().maxCoeff() == 0.0) {
    throw DegenerateConfigurationError("majorization: all points coincide");
  }
  return Configuration(ws.apply_pseudoinverse(guttman_rhs(ws, delta_hat, config)));
}

}  // namespace elastic
