#pragma once

#include <Eigen/Core>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace elastic {

using Matrix = Eigen::MatrixXd;

/// An unordered pair of points, 0-based, with row > col.
struct Pair {
  std::size_t row;
  std::size_t col;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// Number of unordered pairs among n points, n(n-1)/2.
constexpr std::size_t pair_count(std::size_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

// Pairs are enumerated in lower-triangle column-major order:
// (1,0), (2,0), ..., (n-1,0), (2,1), ..., (n-1,n-2).
constexpr std::size_t pair_index(std::size_t n, std::size_t row, std::size_t col) noexcept {
  return col * n - col * (col + 1) / 2 + (row - col - 1);
}

Pair pair_at(std::size_t n, std::size_t k);

/// Observed dissimilarities over all pairs, their weights, and the ascending order used
/// by ordinal fitting.
///
/// Instances are validated on construction: n >= 3, every dissimilarity strictly positive
/// and finite, every weight finite and non-negative with at least one positive. The order
/// permutation sorts delta ascending, ties kept in pair-index order.
class DissimilarityData {
 public:
  /// Throws ValidationError (or ZeroDissimilarityError for a non-positive entry).
  /// Empty weights mean unit weights.
  DissimilarityData(std::size_t n, std::vector<double> delta, std::vector<double> weights = {},
                    std::vector<std::string> labels = {});

  std::size_t n() const noexcept { return n_; }
  std::size_t size() const noexcept { return delta_.size(); }

  std::span<const double> delta() const noexcept { return delta_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::span<const std::size_t> order() const noexcept { return order_; }

  /// Tie-block boundaries along order(): block b covers order positions
  /// [tie_starts()[b], tie_starts()[b+1]). The last entry is size().
  std::span<const std::size_t> tie_starts() const noexcept { return tie_starts_; }

  /// Point labels; empty when the input carried none.
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  double weight_sum() const noexcept;

  /// Same points and weights with a different dissimilarity vector.
  DissimilarityData with_delta(std::vector<double> delta) const;

  friend bool operator==(const DissimilarityData&, const DissimilarityData&) = default;

 private:
  std::size_t n_;
  std::vector<double> delta_;
  std::vector<double> weights_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> order_;
  std::vector<std::size_t> tie_starts_;
};

/// n points in p dimensions.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(Matrix coords);
  Configuration(std::size_t n, std::size_t p);

  std::size_t n() const noexcept { return static_cast<std::size_t>(coords_.rows()); }
  std::size_t dims() const noexcept { return static_cast<std::size_t>(coords_.cols()); }

  const Matrix& coords() const noexcept { return coords_; }
  Matrix& coords() noexcept { return coords_; }

  /// Subtracts the column means so the centroid sits at the origin.
  void center();

  /// Multiplies every coordinate by factor.
  void scale(double factor) { coords_ *= factor; }

 private:
  Matrix coords_;
};

/// Euclidean distances of every pair, in canonical pair order.
std::vector<double> pair_distances(const Configuration& config);

}  // namespace elastic
