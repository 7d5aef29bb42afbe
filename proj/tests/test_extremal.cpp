#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvlab/extremal.hpp"
#include "curvlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

using namespace curvlab;

namespace {

Eigen::VectorXd sorted(Eigen::VectorXd v) {
  std::sort(v.data(), v.data() + v.size());
  return v;
}

}  // namespace

TEST_CASE("quartic value on a frozen spectrum") {
  Eigen::VectorXd lambda(4);
  double r = 1.0 / std::sqrt(2.0);
  lambda << r, -r, 0.0, 0.0;
  // st^2 = 1 and the cubes cancel, so f = 4/12 + 0 + 1 = 4/3.
  CHECK(std::abs(f_quartic(2.0, lambda) - 4.0 / 3.0) <= 1e-14);
  CHECK(f_quartic_scale(2.0, lambda) >= 1.0);
}

TEST_CASE("quartic input validation") {
  Eigen::VectorXd bad(3);
  bad << 1.0, 0.0, 0.0;
  CHECK_THROWS_AS(f_quartic(1.0, bad), std::invalid_argument);
  Eigen::VectorXd two(2);
  two << 1.0, -1.0;
  CHECK_THROWS_AS(f_quartic(1.0, two), std::invalid_argument);
  CHECK_THROWS_AS(g_cubic(Eigen::VectorXd()), std::invalid_argument);
}

TEST_CASE("critical branches in three dimensions") {
  auto pts = enumerate_critical(3);
  REQUIRE(pts.size() == 2);

  double plus = 1.0 / std::sqrt(6.0);
  CHECK(pts[0].negatives == 1);
  CHECK(std::abs(pts[0].lambda[0] - plus) <= 1e-15);
  CHECK(std::abs(pts[0].lambda[1] - plus) <= 1e-15);
  CHECK(std::abs(pts[0].lambda[2] + std::sqrt(2.0 / 3.0)) <= 1e-15);
  CHECK(std::abs(pts[0].g + plus) <= 1e-15);
  CHECK(std::abs(pts[0].mu + 1.5 * plus) <= 1e-15);

  CHECK(pts[1].negatives == 2);
  CHECK(std::abs(pts[1].g - plus) <= 1e-15);

  CHECK_THROWS_AS(enumerate_critical(2), std::invalid_argument);
}

TEST_CASE("every branch is stationary") {
  for (int n = 3; n <= 10; ++n)
    for (const auto& p : enumerate_critical(n)) {
      INFO("n=", n, " negatives=", p.negatives);
      CHECK(p.stationarity_residual() <= 1e-14);
    }
}

TEST_CASE("branches close under sign flips") {
  for (int n = 3; n <= 8; ++n) {
    auto pts = enumerate_critical(n);
    for (const auto& p : pts) {
      const auto& mirror = pts[n - p.negatives - 1];
      CHECK(mirror.negatives == n - p.negatives);
      CHECK(mirror.g == -p.g);
      CHECK((sorted(mirror.lambda) - sorted((-p.lambda).eval()))
                .cwiseAbs()
                .maxCoeff() <= 1e-15);
    }
  }
}

TEST_CASE("the extreme branches attain the sharp bound") {
  CHECK(std::abs(sharp_bound(3) - 0.4082482904638630) <= 1e-15);
  CHECK(std::abs(sharp_bound(4) - 0.5773502691896258) <= 1e-15);
  CHECK_THROWS_AS(sharp_bound(2), std::invalid_argument);
  for (int n = 3; n <= 10; ++n) {
    double worst = 0.0;
    for (const auto& p : enumerate_critical(n))
      worst = std::max(worst, std::abs(p.g));
    CHECK(worst == sharp_bound(n));
  }
}

TEST_CASE("the optimizer lands on the closed form extremes") {
  for (int n : {3, 4, 5, 6}) {
    OptimizerPoint lo = optimize_g(n, 2024, OptimizeDirection::minimize, 20);
    OptimizerPoint hi = optimize_g(n, 2024, OptimizeDirection::maximize, 20);
    CHECK(lo.converged);
    CHECK(hi.converged);
    CHECK(std::abs(lo.g + sharp_bound(n)) <= 1e-9);
    CHECK(std::abs(hi.g - sharp_bound(n)) <= 1e-9);
    CHECK(std::abs(lo.lambda.sum()) <= 1e-12);
    CHECK(std::abs(lo.lambda.squaredNorm() - 1.0) <= 1e-12);
  }
}

TEST_CASE("every converged multistart point is an enumerated branch") {
  for (int n : {3, 5, 7}) {
    auto pts = enumerate_critical(n);
    auto runs = optimize_g_multistart(n, 9, OptimizeDirection::minimize, 30);
    REQUIRE(static_cast<int>(runs.size()) == 30);
    for (const auto& r : runs) {
      if (!r.converged) continue;
      double best = 1e300;
      for (const auto& p : pts)
        best = std::min(best, (sorted(r.lambda) - sorted(p.lambda))
                                  .cwiseAbs()
                                  .maxCoeff());
      CHECK(best <= 1e-8);
    }
  }
}

TEST_CASE("the optimizer is deterministic in the seed") {
  OptimizerPoint a = optimize_g(5, 123, OptimizeDirection::maximize, 10);
  OptimizerPoint b = optimize_g(5, 123, OptimizeDirection::maximize, 10);
  CHECK(a.g == b.g);
  CHECK((a.lambda - b.lambda).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the second equality family zeroes the quartic at every scale") {
  for (int n : {3, 5, 8}) {
    for (double a : {1e-3, 1.0, 1e3}) {
      auto [lambda, s] = equality_case_ii(n, a);
      CHECK(std::abs(lambda.sum()) <= 1e-12 * (1.0 + lambda.cwiseAbs().sum()));
      CHECK(std::abs(f_quartic(s, lambda)) <= 1e-12 * f_quartic_scale(s, lambda));
      CHECK(classify_equality(lambda, s) == EqualityCase::cylindrical);
    }
  }
  CHECK_THROWS_AS(equality_case_ii(4, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(equality_case_ii(4, -1.0), std::invalid_argument);
}

TEST_CASE("classification separates the equality cases") {
  CHECK(classify_equality(Eigen::VectorXd::Zero(4), 3.0) == EqualityCase::einstein);
  CHECK(classify_equality(Eigen::VectorXd::Zero(4), 0.0) == EqualityCase::einstein);

  // Permuting the spectrum must not matter.
  auto [lambda, s] = equality_case_ii(5, 0.7);
  std::swap(lambda[0], lambda[4]);
  CHECK(classify_equality(lambda, s) == EqualityCase::cylindrical);

  // Wrong scalar curvature for the family.
  CHECK(classify_equality(lambda, 2.0 * s) == EqualityCase::none);

  // A zero-trace spectrum outside both families.
  Eigen::VectorXd witness(4);
  double r = 1.0 / std::sqrt(2.0);
  witness << r, -r, 0.0, 0.0;
  CHECK(classify_equality(witness, 1.0) == EqualityCase::none);

  Eigen::VectorXd bad(4);
  bad << 1.0, 0.0, 0.0, 0.0;
  CHECK_THROWS_AS(classify_equality(bad, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(classify_equality(Eigen::VectorXd::Zero(4), -1.0),
                  std::invalid_argument);
}
