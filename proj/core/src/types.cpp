#include "elastic/types.hpp"

#include "elastic/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace elastic {

Pair pair_at(std::size_t n, std::size_t k) {
  if (k >= pair_count(n)) throw ValidationError("pair index " + std::to_string(k) + " out of range");
  std::size_t col = 0;
  std::size_t column_length = n - 1;
  while (k >= column_length) {
    k -= column_length;
    ++col;
    --column_length;
  }
  return {col + 1 + k, col};
}

DissimilarityData::DissimilarityData(std::size_t n, std::vector<double> delta,
                                     std::vector<double> weights, std::vector<std::string> labels)
    : n_(n), delta_(std::move(delta)), weights_(std::move(weights)), labels_(std::move(labels)) {
  if (n_ < 3) throw ValidationError("need at least 3 points, got " + std::to_string(n_));
  const std::size_t m = pair_count(n_);
  if (delta_.size() != m) {
    throw ValidationError("expected " + std::to_string(m) + " dissimilarities for n = " +
                          std::to_string(n_) + ", got " + std::to_string(delta_.size()));
  }
  if (weights_.empty()) weights_.assign(m, 1.0);
  if (weights_.size() != m) {
    throw ValidationError("expected " + std::to_string(m) + " weights, got " +
                          std::to_string(weights_.size()));
  }
  if (!labels_.empty() && labels_.size() != n_) {
    throw ValidationError("expected " + std::to_string(n_) + " labels, got " +
                          std::to_string(labels_.size()));
  }

  bool any_positive_weight = false;
  for (std::size_t k = 0; k < m; ++k) {
    const Pair p = pair_at(n_, k);
    const std::string where =
        " for pair (" + std::to_string(p.col + 1) + ", " + std::to_string(p.row + 1) + ")";
    if (!std::isfinite(delta_[k])) throw ValidationError("non-finite dissimilarity" + where);
    if (delta_[k] <= 0.0) {
      throw ZeroDissimilarityError(k, "dissimilarity must be strictly positive" + where +
                                          ", got " + std::to_string(delta_[k]));
    }
    if (!std::isfinite(weights_[k]) || weights_[k] < 0.0) {
      throw ValidationError("weight must be finite and non-negative" + where);
    }
    any_positive_weight = any_positive_weight || weights_[k] > 0.0;
  }
  if (!any_positive_weight) throw ValidationError("all weights are zero");

  order_.resize(m);
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(),
                   [this](std::size_t a, std::size_t b) { return delta_[a] < delta_[b]; });
  tie_starts_.push_back(0);
  for (std::size_t pos = 1; pos < m; ++pos) {
    if (delta_[order_[pos]] != delta_[order_[pos - 1]]) tie_starts_.push_back(pos);
  }
  tie_starts_.push_back(m);
}

double DissimilarityData::weight_sum() const noexcept {
  return std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

DissimilarityData DissimilarityData::with_delta(std::vector<double> delta) const {
  return DissimilarityData(n_, std::move(delta), weights_, labels_);
}

Configuration::Configuration(Matrix coords) : coords_(std::move(coords)) {}

Configuration::Configuration(std::size_t n, std::size_t p)
    : coords_(Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(p))) {}

void Configuration::center() {
  if (coords_.rows() == 0) return;
  const Eigen::RowVectorXd means = coords_.colwise().mean();
  coords_.rowwise() -= means;
}

std::vector<double> pair_distances(const Configuration& config) {
  const std::size_t n = config.n();
  const Matrix& x = config.coords();
  std::vector<double> dist;
  dist.reserve(pair_count(n));
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      dist.push_back((x.row(static_cast<Eigen::Index>(i)) - x.row(static_cast<Eigen::Index>(j))).norm());
    }
  }
  return dist;
}

}  // namespace elastic
