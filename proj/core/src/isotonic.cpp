#include "elastic/isotonic.hpp"

#include "elastic/errors.hpp"

#include <algorithm>
#include <cmath>

namespace elastic {
namespace {

struct Block {
  double mean;        // weighted mean, or plain mean when weight == 0
  double weight;
  double plain_mean;  // unweighted mean of the pooled targets
  std::size_t count;
};

void absorb(Block& into, const Block& next) {
  const double total = into.weight + next.weight;
  const auto count = into.count + next.count;
  into.plain_mean = (static_cast<double>(into.count) * into.plain_mean +
                     static_cast<double>(next.count) * next.plain_mean) /
                    static_cast<double>(count);
  if (total > 0.0) {
    into.mean = (into.weight * into.mean + next.weight * next.mean) / total;
  } else {
    into.mean = into.plain_mean;
  }
  into.weight = total;
  into.count = count;
}

}  // namespace

std::vector<double> weighted_pava(std::span<const double> targets, std::span<const double> weights) {
  if (targets.size() != weights.size()) {
    throw ValidationError("monotone regression: " + std::to_string(targets.size()) + " targets but " +
                          std::to_string(weights.size()) + " weights");
  }
  bool any_positive = false;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("monotone regression: negative or non-finite weight");
    any_positive = any_positive || w > 0.0;
  }
  if (!targets.empty() && !any_positive) throw ValidationError("monotone regression: all weights are zero");

  std::vector<Block> stack;
  stack.reserve(targets.size());
  for (std::size_t k = 0; k < targets.size(); ++k) {
    stack.push_back({targets[k], weights[k], targets[k], 1});
    while (stack.size() > 1 && stack[stack.size() - 2].mean > stack.back().mean) {
      const Block top = stack.back();
      stack.pop_back();
      absorb(stack.back(), top);
    }
  }

  std::vector<double> out;
  out.reserve(targets.size());
  for (const Block& b : stack) out.insert(out.end(), b.count, b.mean);
  return out;
}

std::vector<double> update_delta(const DissimilarityData& data, std::span<const double> dist) {
  const std::size_t m = data.size();
  if (dist.size() != m) {
    throw ValidationError("update_delta: expected " + std::to_string(m) + " distances, got " +
                          std::to_string(dist.size()));
  }
  const double largest = *std::max_element(dist.begin(), dist.end());
  if (!(largest > 0.0)) throw DegenerateConfigurationError("update_delta: all distances are zero");
  const double floor = kDistanceFloorFraction * largest;

  std::vector<double> target(m);
  std::vector<double> weight(m);
  const auto w = data.weights();
  for (std::size_t k = 0; k < m; ++k) {
    const double d = std::max(dist[k], floor);
    target[k] = -1.0 / d;
    weight[k] = w[k] * d * d;
  }

  // Visit pairs block by block along the observed order; inside a tie block the pairs
  // are free, so arranging them by ascending target makes that freedom cost nothing.
  const auto order = data.order();
  const auto starts = data.tie_starts();
  std::vector<std::size_t> sequence(order.begin(), order.end());
  for (std::size_t b = 0; b + 1 < starts.size(); ++b) {
    const auto first = sequence.begin() + static_cast<std::ptrdiff_t>(starts[b]);
    const auto last = sequence.begin() + static_cast<std::ptrdiff_t>(starts[b + 1]);
    if (last - first > 1) {
      std::stable_sort(first, last, [&](std::size_t a, std::size_t c) { return target[a] < target[c]; });
    }
  }

  std::vector<double> seq_target(m);
  std::vector<double> seq_weight(m);
  for (std::size_t t = 0; t < m; ++t) {
    seq_target[t] = target[sequence[t]];
    seq_weight[t] = weight[sequence[t]];
  }
  const std::vector<double> gamma = weighted_pava(seq_target, seq_weight);

  std::vector<double> delta_hat(m);
  for (std::size_t t = 0; t < m; ++t) delta_hat[sequence[t]] = -1.0 / gamma[t];
  return delta_hat;
}

std::vector<double> update_delta(const DissimilarityData& data, const Configuration& config) {
  return update_delta(data, pair_distances(config));
}

}  // namespace elastic
