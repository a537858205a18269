#include "elastic/datasets.hpp"
#include "elastic/errors.hpp"
#include "elastic/solver.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "helpers.hpp"

namespace elastic {
namespace {

SolveOptions opts(Level level, std::size_t dims = 2) {
  SolveOptions o;
  o.level = level;
  o.dims = dims;
  return o;
}

void expect_descending(const SolveResult& r) {
  for (std::size_t k = 1; k < r.stress_trace.size(); ++k) {
    ASSERT_LE(r.stress_trace[k], r.stress_trace[k - 1] + 1e-12) << "step " << k;
  }
}

TEST(SolveOptions, Validation) {
  SolveOptions o;
  EXPECT_EQ(o.max_iter, 1000);
  EXPECT_EQ(o.eps, 1e-6);
  EXPECT_NO_THROW(o.validate());
  o.max_iter = 0;
  EXPECT_THROW(o.validate(), ValidationError);
  o = SolveOptions{};
  o.eps = 0.0;
  EXPECT_THROW(o.validate(), ValidationError);
  o.eps = NAN;
  EXPECT_THROW(o.validate(), ValidationError);
  EXPECT_EQ(parse_level_name("ratio"), Level::ratio);
  EXPECT_FALSE(parse_level_name("interval").has_value());
}

TEST(Solve, ExactEuclideanDataConvergesImmediately) {
  std::mt19937_64 rng(79);
  const auto data = testing_support::euclidean_data(rng, 10, 2);
  const SolveResult r = solve(data, opts(Level::ratio));
  EXPECT_TRUE(r.converged);
  EXPECT_LE(r.iterations, 2);
  EXPECT_LT(r.final_stress(), 1e-10);
  EXPECT_LT(r.report.elastic, 1e-10);
  EXPECT_LT(r.report.log_stress, 1e-10);
  EXPECT_LT(r.report.kruskal_normalized, 1e-10);
}

TEST(Solve, EkmanRatio) {
  const SolveResult r = solve(builtin_dataset("ekman"), opts(Level::ratio));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.final_stress(), 2.3268637, 5e-8);
  EXPECT_EQ(r.iterations, 586);
  expect_descending(r);
  const auto ekman = builtin_dataset("ekman");
  EXPECT_TRUE(std::equal(r.delta_hat.begin(), r.delta_hat.end(), ekman.delta().begin()));
}

TEST(Solve, EkmanOrdinal) {
  const SolveResult r = solve(builtin_dataset("ekman"), opts(Level::ordinal));
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.final_stress(), 0.056998, 5e-7);
  EXPECT_NEAR(r.report.log_stress, 0.0581521, 5e-8);
  EXPECT_EQ(r.iterations, 437);
  expect_descending(r);
  EXPECT_EQ(r.report.elastic, r.final_stress());
  EXPECT_NEAR(r.report.ratio_form, r.report.elastic, 1e-12 * r.report.elastic);
}

TEST(Solve, ConvergenceBookkeeping) {
  std::mt19937_64 rng(83);
  const auto data = testing_support::random_data(rng, 12);
  for (Level level : {Level::ratio, Level::ordinal}) {
    SolveOptions o = opts(level);
    const SolveResult r = solve(data, o);
    ASSERT_EQ(r.stress_trace.size(), static_cast<std::size_t>(r.iterations) + 1);
    if (r.converged) {
      const auto& t = r.stress_trace;
      EXPECT_LT(std::abs(t[t.size() - 2] - t.back()), o.eps);
    }
    o.max_iter = 3;
    o.eps = 1e-300;
    const SolveResult capped = solve(data, o);
    EXPECT_FALSE(capped.converged);
    EXPECT_EQ(capped.iterations, 3);
    EXPECT_EQ(capped.stress_trace.size(), 4u);
  }
}

TEST(Solve, RelativeConvergence) {
  const auto ekman = builtin_dataset("ekman");
  SolveOptions o = opts(Level::ratio);
  o.relative = true;
  o.eps = 1e-4;
  const SolveResult r = solve(ekman, o);
  ASSERT_TRUE(r.converged);
  const auto& t = r.stress_trace;
  EXPECT_LT(std::abs(t[t.size() - 2] - t.back()), 1e-4 * t[t.size() - 2]);
  EXPECT_LT(r.iterations, 586);
}

TEST(Solve, OrdinalFitIsMonotoneWithObservedOrder) {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 20; ++trial) {
    const auto data = trial % 2 ? testing_support::tied_data(rng, 8) : testing_support::random_data(rng, 8);
    const SolveResult r = solve(data, opts(Level::ordinal));
    const auto order = data.order();
    const auto starts = data.tie_starts();
    for (std::size_t b = 0; b + 2 < starts.size(); ++b) {
      for (std::size_t t = starts[b]; t < starts[b + 1]; ++t)
        for (std::size_t u = starts[b + 1]; u < starts[b + 2]; ++u)
          ASSERT_LE(r.delta_hat[order[t]], r.delta_hat[order[u]] * (1 + 1e-14));
    }
  }
}

TEST(Solve, DescentAcrossRandomInstances) {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 4 + static_cast<std::size_t>(trial % 10);
    const auto data = trial % 3 == 0 ? testing_support::tied_data(rng, n) : testing_support::random_data(rng, n, trial % 2 == 0);
    for (Level level : {Level::ratio, Level::ordinal}) expect_descending(solve(data, opts(level, 1 + trial % 3)));
  }
}

TEST(Solve, OrdinalDominatesRatioOnBuiltins) {
  const auto ekman = builtin_dataset("ekman");
  EXPECT_LE(solve(ekman, opts(Level::ordinal)).final_stress(), solve(ekman, opts(Level::ratio)).final_stress() + 1e-9);
}

TEST(Solve, Deterministic) {
  const auto ekman = builtin_dataset("ekman");
  const SolveResult a = solve(ekman, opts(Level::ordinal));
  const SolveResult b = solve(ekman, opts(Level::ordinal));
  EXPECT_EQ(a.stress_trace, b.stress_trace);
  EXPECT_EQ(a.config.coords(), b.config.coords());
  EXPECT_EQ(a.delta_hat, b.delta_hat);
}

TEST(Solve, RejectsBadOptions) {
  const auto ekman = builtin_dataset("ekman");
  SolveOptions o;
  o.dims = 14;
  EXPECT_THROW(solve(ekman, o), ValidationError);
  o.dims = 2;
  o.max_iter = -1;
  EXPECT_THROW(solve(ekman, o), ValidationError);
}

TEST(StressReport, RecomputedFromResult) {
  const auto ekman = builtin_dataset("ekman");
  const SolveResult r = solve(ekman, opts(Level::ordinal));
  const StressReport again = stress_report(ekman, r);
  EXPECT_EQ(again.elastic, r.report.elastic);
  EXPECT_EQ(again.log_stress, r.report.log_stress);
  EXPECT_GT(again.kruskal_normalized, 0.0);
  EXPECT_LT(again.kruskal_normalized, 1.0);
}

}  // namespace
}  // namespace elastic
