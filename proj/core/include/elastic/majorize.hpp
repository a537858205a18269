#pragma once

#include "elastic/types.hpp"

#include <Eigen/Cholesky>

#include <span>
#include <vector>

namespace elastic {

/// Quadratic majorizer data for fixed fitted dissimilarities.
///
/// Holds the effective weights u = w / dhat^2, their Laplacian V, and a factorization of
/// V + (1/n) 11^T, which is nonsingular whenever the graph of positive u is connected.
class MajorizationWorkspace {
 public:
  /// Throws ZeroDissimilarityError for any dhat <= 0, ValidationError on length mismatch,
  /// NumericalError when V + 11^T/n cannot be factored.
  MajorizationWorkspace(const DissimilarityData& data, std::span<const double> delta_hat);

  std::size_t n() const noexcept { return n_; }
  std::span<const double> effective_weights() const noexcept { return u_; }
  const Matrix& laplacian() const noexcept { return v_; }

  /// Solves V Y = rhs in the centered subspace: (V + 11^T/n) Y = rhs, then centers Y.
  Matrix apply_pseudoinverse(const Matrix& rhs) const;

 private:
  std::size_t n_;
  std::vector<double> u_;
  Matrix v_;
  Eigen::LDLT<Matrix> factor_;
};

/// B(X) X for the weights held in ws, with B_ij = -u_ij dhat_ij / d_ij(X) off the
/// diagonal (0 where d_ij = 0) and zero row sums.
Matrix guttman_rhs(const MajorizationWorkspace& ws, std::span<const double> delta_hat,
                   const Configuration& config);

/// One Guttman transform X+ = V^+ B(X) X. Output is centered; stress never increases.
/// Throws DegenerateConfigurationError when all points coincide.
Configuration guttman_update(const MajorizationWorkspace& ws, std::span<const double> delta_hat,
                             const Configuration& config);

}  // namespace elastic
