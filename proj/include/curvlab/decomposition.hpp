#pragma once

#include "curvlab/curvature.hpp"

#include <Eigen/Dense>

#include <string>
#include <utility>
#include <vector>

namespace curvlab {

/// Wedge of two symmetric matrices as an operator on Lambda^2:
/// (A ^ B)_{(ij),(kl)} = 1/2 (A_ik B_jl - A_jk B_il + B_ik A_jl - B_jk A_il),
/// normalized so that id ^ id is the identity operator. Throws on shape
/// mismatch or non-symmetric input.
CurvOp wedge(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Orthogonal decomposition R = R_I + R_Ric0 + R_W into the scalar part
/// S/(n(n-1)) id^id, the traceless-Ricci part 2/(n-2) Ric0 ^ id, and the
/// Weyl remainder. Needs n >= 3; for n = 3 the remainder vanishes.
struct Decomposition {
  double s = 0.0;                 // scalar curvature
  double sigma2 = 0.0;            // |Ric|^2
  double sigma_tilde2 = 0.0;      // |Ric0|^2 = sum lambda_i^2
  Eigen::MatrixXd ric;            // Ricci tensor
  Eigen::MatrixXd ric0;           // traceless Ricci
  Eigen::VectorXd lambda;         // eigenvalues of ric0, ascending
  CurvOp r_trace;
  CurvOp r_ric0;
  CurvOp r_weyl;
};

Decomposition decompose(const CurvOp& r);

/// Residuals of the first-order structure identities tying R, # and the
/// decomposition together. All entries are Frobenius norms of operator
/// differences (cubic in R; callers normalize by 1 + |R|^3).
struct BwResiduals {
  double bw1 = 0.0;                // R + R#I = Ric ^ id
  double eq1 = 0.0;                // Q(R_Ric0) against its closed form
  double eq2 = 0.0;                // decomposition of Ric0 ^ Ric0
  double closure_trace_weyl = 0.0; // B(R_I, W) = 0
  double closure_trace_trace = 0.0;// B(R_I, R_I) stays in <I>
  double closure_weyl_weyl = 0.0;  // B(W, W) stays in <W>
  double closure_trace_ric0 = 0.0; // B(R_I, R_Ric0) stays in <Ric0 ^ id>
  double closure_ric0_weyl = 0.0;  // B(R_Ric0, W) stays in <Ric0 ^ id>

  std::vector<std::pair<std::string, double>> entries() const;
  double max() const;
};

BwResiduals bw_residuals(const CurvOp& r);

}  // namespace curvlab
