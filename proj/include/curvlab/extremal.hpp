#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <utility>
#include <vector>

namespace curvlab {

/// f(S, lambda) = S^2 st^2 / (n(n-1)) + 2 S sum lambda_i^3 / (n-2) + st^4
/// with st^2 = sum lambda_i^2, on spectra with sum lambda_i = 0.
/// Nonnegative for every real S; vanishing only in the equality cases.
double f_quartic(double s, const Eigen::VectorXd& lambda);

/// g(lambda) = sum lambda_i^3 on the constraint sphere.
double g_cubic(const Eigen::VectorXd& lambda);

/// Magnitude of the three terms of f before cancellation,
/// 1 + |t1| + |t2| + |t3|; the right yardstick for "f vanishes" checks.
double f_quartic_scale(double s, const Eigen::VectorXd& lambda);

/// Critical point of g on {sum = 0, sum of squares = 1}, branch i = number
/// of negative entries: n-i entries sqrt(i/(n(n-i))) followed by i entries
/// -sqrt((n-i)/(n i)); g = -(n-2i)/sqrt(n(n-i)i), first-order conditions
/// 3 lambda_j^2 - 3/n - 2 mu lambda_j = 0 with mu = -(3/2)(n-2i)/sqrt(n i (n-i)).
struct CriticalPoint {
  int negatives = 0;
  Eigen::VectorXd lambda;
  double g = 0.0;
  double mu = 0.0;
  /// Max residual of the first-order conditions and the two constraints.
  double stationarity_residual() const;
};

/// All n-1 branches, i = 1..n-1. The mirror -lambda of branch i is branch
/// n-i, so the list is closed under sign flips. Throws for n < 3.
std::vector<CriticalPoint> enumerate_critical(int n);

/// Extreme value of g over the constraint set:
/// max |g| = (n-2)/sqrt(n(n-1)), attained at branches 1 and n-1.
double sharp_bound(int n);

enum class OptimizeDirection { minimize, maximize };

struct OptimizerPoint {
  Eigen::VectorXd lambda;
  double g = 0.0;
  double grad_norm = 0.0;
  bool converged = false;
};

/// Projected-gradient extremization of g on the constraint sphere from
/// `starts` random starting points. Deterministic in (n, seed).
std::vector<OptimizerPoint> optimize_g_multistart(int n, std::uint64_t seed,
                                                  OptimizeDirection dir,
                                                  int starts = 50);

/// Best point over the multistart (ties broken by start order).
OptimizerPoint optimize_g(int n, std::uint64_t seed, OptimizeDirection dir,
                          int starts = 50);

/// The second equality family of f: lambda_l = a/sqrt(n(n-1)) for l < n,
/// lambda_n = -sqrt((n-1)/n) a, paired with S = sqrt(n(n-1)) a. Requires
/// a > 0. Returns (lambda, S).
std::pair<Eigen::VectorXd, double> equality_case_ii(int n, double a);

enum class EqualityCase { none, einstein, cylindrical };

/// Detects the equality cases of f >= 0: einstein when lambda vanishes
/// (to tol, absolute), cylindrical when (lambda, S) matches the case-ii
/// family (to tol at the recovered scale a = -lambda_min sqrt(n/(n-1))).
EqualityCase classify_equality(const Eigen::VectorXd& lambda, double s,
                               double tol = 1e-8);

}  // namespace curvlab
