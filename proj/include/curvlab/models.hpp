#pragma once

#include "curvlab/curvature.hpp"

#include <Eigen/Dense>

#include <string>

namespace curvlab {

/// A gradient shrinking soliton model normalized to Ric + Hess f = g/2:
/// curvature operator together with its Ricci tensor and potential Hessian
/// in an adapted orthonormal frame.
struct ModelSoliton {
  std::string name;
  CurvOp op;
  Eigen::MatrixXd ric;
  Eigen::MatrixXd hess;
  double scalar = 0.0;
};

/// Flat Gaussian soliton: R = 0, f = |x|^2/4.
ModelSoliton gaussian(int n);

/// Round sphere of radius sqrt(2(n-1)): constant sectional curvature
/// 1/(2(n-1)), Ric = g/2, constant potential.
ModelSoliton round_sphere(int n);

/// Round cylinder S^{n-1} x R with spherical radius sqrt(2(n-2)):
/// spherical sectional curvature 1/(2(n-2)), flat line direction (last
/// coordinate), f = t^2/4 along the line. Requires n >= 3.
ModelSoliton round_cylinder(int n);

/// Max-norm of Ric + Hess - g/2.
double soliton_residual(const ModelSoliton& m);

/// |sigma^2/S^2 (R) - sigma^2/S^2 (R/tau)|; the ratio is scale invariant.
/// Throws for tau <= 0 or S(R) ~ 0.
double scaling_check(const CurvOp& r, double tau);

enum class ModelClass { flat, einstein, cylindrical };

/// Flat / Einstein / cylindrical detection from the spectrum of the
/// traceless Ricci and the scalar curvature.
ModelClass classify_model(const ModelSoliton& m, double tol = 1e-8);

}  // namespace curvlab
