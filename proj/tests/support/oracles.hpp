#pragma once

// Slow reference computations used only by tests. Nothing here calls into the library's
// numerical routines, so agreement with them is evidence and not a tautology.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <random>
#include <utility>
#include <vector>

namespace oracle {

using Dense = std::vector<std::vector<double>>;

/// Term-by-term sum w (delta - d)^2 / delta^2.
inline double elastic_terms(const std::vector<double>& delta, const std::vector<double>& w,
                            const std::vector<double>& d) {
  double s = 0.0;
  for (std::size_t k = 0; k < delta.size(); ++k) s += w[k] * (delta[k] - d[k]) * (delta[k] - d[k]) / (delta[k] * delta[k]);
  return s;
}

/// Distances of a row-major n x p point list, pairs in (1,0),(2,0),...,(n-1,n-2) order.
inline std::vector<double> distances(const Dense& x) {
  std::vector<double> d;
  const std::size_t n = x.size();
  for (std::size_t j = 0; j + 1 < n; ++j) {
    for (std::size_t i = j + 1; i < n; ++i) {
      double s = 0.0;
      for (std::size_t c = 0; c < x[i].size(); ++c) s += (x[i][c] - x[j][c]) * (x[i][c] - x[j][c]);
      d.push_back(std::sqrt(s));
    }
  }
  return d;
}

/// Minimizes sum w (y - out)^2 over non-decreasing out by trying every split of the
/// sequence into consecutive blocks, each block set to its weighted mean. Weights must
/// be positive. Exponential in length; meant for length <= 10.
inline std::vector<double> exhaustive_isotonic(const std::vector<double>& y, const std::vector<double>& w) {
  const std::size_t len = y.size();
  if (len == 0) return {};
  double best_loss = std::numeric_limits<double>::infinity();
  std::vector<double> best;
  const std::size_t patterns = std::size_t{1} << (len - 1);
  for (std::size_t cuts = 0; cuts < patterns; ++cuts) {
    std::vector<double> fit(len);
    std::size_t begin = 0;
    for (std::size_t k = 0; k < len; ++k) {
      const bool block_ends = k + 1 == len || (cuts >> k & 1u);
      if (!block_ends) continue;
      double sw = 0.0, swy = 0.0;
      for (std::size_t t = begin; t <= k; ++t) {
        sw += w[t];
        swy += w[t] * y[t];
      }
      for (std::size_t t = begin; t <= k; ++t) fit[t] = swy / sw;
      begin = k + 1;
    }
    bool feasible = true;
    for (std::size_t k = 1; k < len; ++k) feasible = feasible && fit[k - 1] <= fit[k];
    if (!feasible) continue;
    double loss = 0.0;
    for (std::size_t k = 0; k < len; ++k) loss += w[k] * (y[k] - fit[k]) * (y[k] - fit[k]);
    if (loss < best_loss) {
      best_loss = loss;
      best = fit;
    }
  }
  return best;
}

/// Cyclic Jacobi rotations on a symmetric matrix. Returns eigenvalues (descending) and
/// eigenvectors as columns of the second member.
inline std::pair<std::vector<double>, Dense> jacobi_eigen(Dense a) {
  const std::size_t n = a.size();
  Dense v(n, std::vector<double>(n, 0.0));
  for (std::size_t i = 0; i < n; ++i) v[i][i] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i][j] * a[i][j];
    if (off < 1e-30) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k][p], vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) { return a[x][x] > a[y][y]; });
  std::vector<double> values(n);
  Dense vectors(n, std::vector<double>(n));
  for (std::size_t c = 0; c < n; ++c) {
    values[c] = a[idx[c]][idx[c]];
    for (std::size_t r = 0; r < n; ++r) vectors[r][c] = v[r][idx[c]];
  }
  return {values, vectors};
}

/// Classical scaling through explicit J D^2 J products and Jacobi rotations.
inline Dense classical_scaling(std::size_t n, const std::vector<double>& delta, std::size_t p) {
  Dense sq(n, std::vector<double>(n, 0.0));
  std::size_t k = 0;
  for (std::size_t j = 0; j + 1 < n; ++j)
    for (std::size_t i = j + 1; i < n; ++i, ++k) sq[i][j] = sq[j][i] = delta[k] * delta[k];
  Dense jm(n, std::vector<double>(n, -1.0 / static_cast<double>(n)));
  for (std::size_t i = 0; i < n; ++i) jm[i][i] += 1.0;
  auto mul = [n](const Dense& x, const Dense& y) {
    Dense z(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t j = 0; j < n; ++j) z[i][j] += x[i][l] * y[l][j];
    return z;
  };
  Dense b = mul(mul(jm, sq), jm);
  for (auto& row : b)
    for (double& e : row) e *= -0.5;
  const auto [values, vectors] = jacobi_eigen(b);
  Dense x(n, std::vector<double>(p));
  for (std::size_t c = 0; c < p; ++c) {
    const double s = std::sqrt(std::max(values[c], 0.0));
    for (std::size_t r = 0; r < n; ++r) x[r][c] = vectors[r][c] * s;
  }
  return x;
}

/// argmin over a uniform grid of sum (w/delta^2)(delta - lambda d)^2.
inline double grid_lambda(const std::vector<double>& delta, const std::vector<double>& w,
                          const std::vector<double>& d, double lo, double hi, std::size_t steps) {
  double best = lo, best_loss = std::numeric_limits<double>::infinity();
  for (std::size_t s = 0; s <= steps; ++s) {
    const double lambda = lo + (hi - lo) * static_cast<double>(s) / static_cast<double>(steps);
    double loss = 0.0;
    for (std::size_t k = 0; k < delta.size(); ++k) {
      const double r = delta[k] - lambda * d[k];
      loss += w[k] / (delta[k] * delta[k]) * r * r;
    }
    if (loss < best_loss) {
      best_loss = loss;
      best = lambda;
    }
  }
  return best;
}

/// Central-difference gradient of the elastic stress with respect to every coordinate.
inline Dense stress_gradient(const Dense& x, const std::vector<double>& delta, const std::vector<double>& w,
                             double h = 1e-6) {
  Dense g(x.size(), std::vector<double>(x.front().size()));
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t c = 0; c < x[i].size(); ++c) {
      Dense plus = x, minus = x;
      plus[i][c] += h;
      minus[i][c] -= h;
      g[i][c] = (elastic_terms(delta, w, distances(plus)) - elastic_terms(delta, w, distances(minus))) / (2 * h);
    }
  }
  return g;
}

/// Random points with coordinates uniform in [-1, 1].
inline Dense random_points(std::mt19937_64& rng, std::size_t n, std::size_t p) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Dense x(n, std::vector<double>(p));
  for (auto& row : x)
    for (double& e : row) e = u(rng);
  return x;
}

}  // namespace oracle
