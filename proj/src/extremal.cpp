#include "curvlab/extremal.hpp"

#include "curvlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace curvlab {

namespace {

void check_zero_sum(const Eigen::VectorXd& lambda, const char* who) {
  if (std::abs(lambda.sum()) > 1e-12 * (1.0 + lambda.cwiseAbs().sum()))
    throw std::invalid_argument(std::string(who) + ": spectrum is not traceless");
}

// Retraction onto {sum = 0, |lambda| = 1}.
Eigen::VectorXd retract(Eigen::VectorXd v) {
  v.array() -= v.mean();
  double norm = v.norm();
  if (norm < 1e-300) throw std::runtime_error("optimize_g: degenerate iterate");
  return v / norm;
}

// Gradient of g projected to the tangent space of the constraint set.
Eigen::VectorXd tangent_grad(const Eigen::VectorXd& lambda) {
  Eigen::VectorXd grad = (3.0 * lambda.array().square()).matrix();
  grad.array() -= grad.mean();
  grad -= grad.dot(lambda) * lambda;
  return grad;
}

// Newton polish of the first-order system
//   3 l_j^2 - 2 mu l_j - nu = 0,  sum l = 0,  sum l^2 = 1
// in (l, mu, nu); quadratic near the point the gradient phase found.
Eigen::VectorXd newton_polish(Eigen::VectorXd x) {
  int n = static_cast<int>(x.size());
  double mu = 1.5 * g_cubic(x);
  double nu = 3.0 / n;
  for (int it = 0; it < 30; ++it) {
    Eigen::VectorXd f(n + 2);
    for (int j = 0; j < n; ++j) f[j] = 3.0 * x[j] * x[j] - 2.0 * mu * x[j] - nu;
    f[n] = x.sum();
    f[n + 1] = x.squaredNorm() - 1.0;
    if (f.cwiseAbs().maxCoeff() < 1e-14) break;

    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n + 2, n + 2);
    for (int j = 0; j < n; ++j) {
      jac(j, j) = 6.0 * x[j] - 2.0 * mu;
      jac(j, n) = -2.0 * x[j];
      jac(j, n + 1) = -1.0;
    }
    jac.row(n).head(n).setOnes();
    jac.row(n + 1).head(n) = 2.0 * x.transpose();

    Eigen::VectorXd step = jac.fullPivLu().solve(f);
    if (!step.allFinite()) break;
    x -= step.head(n);
    mu -= step[n];
    nu -= step[n + 1];
    if (step.cwiseAbs().maxCoeff() < 1e-15) break;
  }
  return x;
}

}  // namespace

double f_quartic(double s, const Eigen::VectorXd& lambda) {
  int n = static_cast<int>(lambda.size());
  if (n < 3) throw std::invalid_argument("f_quartic: needs n >= 3");
  check_zero_sum(lambda, "f_quartic");
  double st2 = lambda.squaredNorm();
  double cubes = lambda.array().cube().sum();
  return s * s * st2 / (n * (n - 1.0)) + 2.0 * s * cubes / (n - 2.0) + st2 * st2;
}

double g_cubic(const Eigen::VectorXd& lambda) {
  if (lambda.size() < 1) throw std::invalid_argument("g_cubic: empty spectrum");
  return lambda.array().cube().sum();
}

double f_quartic_scale(double s, const Eigen::VectorXd& lambda) {
  int n = static_cast<int>(lambda.size());
  if (n < 3) throw std::invalid_argument("f_quartic_scale: needs n >= 3");
  double st2 = lambda.squaredNorm();
  double cubes = lambda.array().cube().sum();
  return 1.0 + std::abs(s * s * st2 / (n * (n - 1.0))) +
         std::abs(2.0 * s * cubes / (n - 2.0)) + st2 * st2;
}

double CriticalPoint::stationarity_residual() const {
  int n = static_cast<int>(lambda.size());
  double worst = std::abs(lambda.sum());
  worst = std::max(worst, std::abs(lambda.squaredNorm() - 1.0));
  for (int j = 0; j < n; ++j)
    worst = std::max(worst, std::abs(3.0 * lambda[j] * lambda[j] - 3.0 / n -
                                     2.0 * mu * lambda[j]));
  return worst;
}

std::vector<CriticalPoint> enumerate_critical(int n) {
  if (n < 3) throw std::invalid_argument("enumerate_critical: needs n >= 3");
  std::vector<CriticalPoint> out;
  out.reserve(n - 1);
  for (int i = 1; i <= n - 1; ++i) {
    double plus = std::sqrt(static_cast<double>(i) / (static_cast<double>(n) * (n - i)));
    double minus =
        -std::sqrt(static_cast<double>(n - i) / (static_cast<double>(n) * i));
    CriticalPoint p;
    p.negatives = i;
    p.lambda.resize(n);
    for (int j = 0; j < n - i; ++j) p.lambda[j] = plus;
    for (int j = n - i; j < n; ++j) p.lambda[j] = minus;
    double root = std::sqrt(static_cast<double>(n) * (n - i) * i);
    p.g = -(n - 2.0 * i) / root;
    p.mu = -1.5 * (n - 2.0 * i) / root;
    out.push_back(std::move(p));
  }
  return out;
}

double sharp_bound(int n) {
  if (n < 3) throw std::invalid_argument("sharp_bound: needs n >= 3");
  return (n - 2.0) / std::sqrt(static_cast<double>(n) * (n - 1));
}

std::vector<OptimizerPoint> optimize_g_multistart(int n, std::uint64_t seed,
                                                  OptimizeDirection dir, int starts) {
  if (n < 3) throw std::invalid_argument("optimize_g: needs n >= 3");
  if (starts < 1) throw std::invalid_argument("optimize_g: needs starts >= 1");
  const double sign = dir == OptimizeDirection::maximize ? 1.0 : -1.0;
  const double grad_tol = 1e-10;
  const int max_iter = 2000;

  std::vector<OptimizerPoint> out;
  out.reserve(starts);
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd x =
        retract(random_gaussian(n, 1, derive_seed(seed, s)).col(0));
    double step = 0.2;
    Eigen::VectorXd pg = tangent_grad(x) * sign;
    int it = 0;
    for (; it < max_iter && pg.norm() > grad_tol; ++it) {
      double base = sign * g_cubic(x);
      double pg2 = pg.squaredNorm();
      // Armijo backtracking on the retracted step.
      bool accepted = false;
      while (step > 1e-16) {
        Eigen::VectorXd y = retract(x + step * pg);
        if (sign * g_cubic(y) >= base + 1e-4 * step * pg2) {
          x = std::move(y);
          step = std::min(step * 1.25, 1.0);
          accepted = true;
          break;
        }
        step *= 0.5;
      }
      if (!accepted) break;
      pg = tangent_grad(x) * sign;
    }
    // The gradient phase stalls linearly near flat directions; finish with
    // Newton on the first-order system (kept only if it helps).
    if (pg.norm() > grad_tol) {
      Eigen::VectorXd polished = newton_polish(x);
      if (polished.allFinite() &&
          std::abs(polished.sum()) < 1e-12 &&
          std::abs(polished.squaredNorm() - 1.0) < 1e-12 &&
          tangent_grad(polished).norm() < pg.norm() &&
          sign * g_cubic(polished) >= sign * g_cubic(x) - 1e-8)
        x = polished;
      pg = tangent_grad(x) * sign;
    }
    OptimizerPoint p;
    p.lambda = x;
    p.g = g_cubic(x);
    p.grad_norm = pg.norm();
    p.converged = p.grad_norm <= grad_tol;
    out.push_back(std::move(p));
  }
  return out;
}

OptimizerPoint optimize_g(int n, std::uint64_t seed, OptimizeDirection dir,
                          int starts) {
  auto all = optimize_g_multistart(n, seed, dir, starts);
  const double sign = dir == OptimizeDirection::maximize ? 1.0 : -1.0;
  int best = 0;
  for (int i = 1; i < static_cast<int>(all.size()); ++i)
    if (sign * all[i].g > sign * all[best].g) best = i;
  return all[best];
}

std::pair<Eigen::VectorXd, double> equality_case_ii(int n, double a) {
  if (n < 3) throw std::invalid_argument("equality_case_ii: needs n >= 3");
  if (!(a > 0.0)) throw std::invalid_argument("equality_case_ii: needs a > 0");
  Eigen::VectorXd lambda(n);
  double small = a / std::sqrt(n * (n - 1.0));
  for (int j = 0; j < n - 1; ++j) lambda[j] = small;
  lambda[n - 1] = -std::sqrt((n - 1.0) / n) * a;
  double s = std::sqrt(n * (n - 1.0)) * a;
  return {std::move(lambda), s};
}

EqualityCase classify_equality(const Eigen::VectorXd& lambda, double s, double tol) {
  int n = static_cast<int>(lambda.size());
  if (n < 3) throw std::invalid_argument("classify_equality: needs n >= 3");
  check_zero_sum(lambda, "classify_equality");
  if (s < -tol) throw std::invalid_argument("classify_equality: needs S >= 0");

  if (lambda.cwiseAbs().maxCoeff() <= tol) return EqualityCase::einstein;

  Eigen::VectorXd v = lambda;
  std::sort(v.data(), v.data() + n);
  double a = -v[0] * std::sqrt(n / (n - 1.0));
  if (!(a > 0.0)) return EqualityCase::none;

  auto [expect, s_expect] = equality_case_ii(n, a);
  std::sort(expect.data(), expect.data() + n);
  double scale_tol = tol * (1.0 + a);
  if ((v - expect).cwiseAbs().maxCoeff() > scale_tol) return EqualityCase::none;
  if (std::abs(s - s_expect) > tol * (1.0 + std::abs(s) + s_expect))
    return EqualityCase::none;
  return EqualityCase::cylindrical;
}

}  // namespace curvlab
