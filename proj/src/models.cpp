#include "curvlab/models.hpp"

#include "curvlab/decomposition.hpp"
#include "curvlab/extremal.hpp"

#include <cmath>
#include <stdexcept>

namespace curvlab {

ModelSoliton gaussian(int n) {
  if (n < 2) throw std::invalid_argument("gaussian: needs n >= 2");
  auto frame = build_frame(n);
  return ModelSoliton{"gaussian", CurvOp::zero(frame),
                      Eigen::MatrixXd::Zero(n, n),
                      0.5 * Eigen::MatrixXd::Identity(n, n), 0.0};
}

ModelSoliton round_sphere(int n) {
  if (n < 2) throw std::invalid_argument("round_sphere: needs n >= 2");
  auto frame = build_frame(n);
  double k = 1.0 / (2.0 * (n - 1));
  return ModelSoliton{"round_sphere", k * CurvOp::identity(frame),
                      0.5 * Eigen::MatrixXd::Identity(n, n),
                      Eigen::MatrixXd::Zero(n, n), n / 2.0};
}

ModelSoliton round_cylinder(int n) {
  if (n < 3) throw std::invalid_argument("round_cylinder: needs n >= 3");
  auto frame = build_frame(n);
  double k = 1.0 / (2.0 * (n - 2));
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(frame->dim(), frame->dim());
  const auto& pairs = frame->pairs();
  for (int a = 0; a < frame->dim(); ++a) {
    auto [i, j] = pairs[a];
    if (j < n - 1) m(a, a) = k;  // plane tangent to the sphere factor
  }
  Eigen::MatrixXd ric = 0.5 * Eigen::MatrixXd::Identity(n, n);
  ric(n - 1, n - 1) = 0.0;
  Eigen::MatrixXd hess = Eigen::MatrixXd::Zero(n, n);
  hess(n - 1, n - 1) = 0.5;
  return ModelSoliton{"round_cylinder", CurvOp(frame, std::move(m)), std::move(ric),
                      std::move(hess), (n - 1) / 2.0};
}

double soliton_residual(const ModelSoliton& m) {
  int n = m.ric.rows();
  return (m.ric + m.hess - 0.5 * Eigen::MatrixXd::Identity(n, n))
      .cwiseAbs()
      .maxCoeff();
}

double scaling_check(const CurvOp& r, double tau) {
  if (!(tau > 0.0)) throw std::invalid_argument("scaling_check: needs tau > 0");
  auto ratio = [](const CurvOp& op) {
    Eigen::MatrixXd ric = ricci(op);
    double s = ric.trace();
    if (std::abs(s) <= 1e-12 * (1.0 + op_norm(op)))
      throw std::invalid_argument("scaling_check: scalar curvature vanishes");
    return ric.squaredNorm() / (s * s);
  };
  double r1 = ratio(r);
  double r2 = ratio((1.0 / tau) * r);
  return std::abs(r1 - r2);
}

ModelClass classify_model(const ModelSoliton& m, double tol) {
  if (op_norm(m.op) <= tol) return ModelClass::flat;
  Decomposition d = decompose(m.op);
  switch (classify_equality(d.lambda, d.s, tol)) {
    case EqualityCase::einstein:
      return ModelClass::einstein;
    case EqualityCase::cylindrical:
      return ModelClass::cylindrical;
    case EqualityCase::none:
      break;
  }
  throw std::invalid_argument("classify_model: operator is not a recognized model");
}

}  // namespace curvlab
