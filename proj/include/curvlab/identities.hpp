#pragma once

#include "curvlab/curvature.hpp"
#include "curvlab/decomposition.hpp"

#include <Eigen/Dense>

#include <map>
#include <string>

namespace curvlab {

/// Two-sided scalar checks collected by name. The relative residual of an
/// entry is |lhs - rhs| / (1 + max(|lhs|, |rhs|)).
struct IdentityResiduals {
  struct Entry {
    double lhs = 0.0;
    double rhs = 0.0;
    double abs_residual() const;
    double rel_residual() const;
  };
  std::map<std::string, Entry> items;

  double max_rel() const;
};

/// Contractions of Q(R) against the three curvature parts:
///   hu1: <R_I part>      = 2 S sigma^2 / (n(n-1))
///   hu2: <Ric0 part>     = 4 S st^2/(n(n-1)) - 8 tr(Ric0^3)/(n-2)^2
///                          + 4 W(Ric0,Ric0)/(n-2)
///   hu3: <Weyl part>     = 2 tri(R_W) + 2 W(Ric0,Ric0)/(n-2)
/// where each lhs is sum_{ijkl} (part)_{ijkl} Q(R)_{ijkl} and
/// W(Ric0,Ric0) = sum W_{ijkl} (Ric0)_{ik} (Ric0)_{jl}.
IdentityResiduals huisken_residuals(const CurvOp& r);

/// |sum of the three part contractions - 2 tri(R)|, with the left side
/// evaluated as a single full tensor contraction.
double sum_consistency(const CurvOp& r);

/// 2 S tri(R) - sigma^2 |Rm|^2 against its closed form in
/// (S, st^2, tr(Ric0^3), |R_W|^2, tri(R_W), W(Ric0,Ric0)).
IdentityResiduals main_identity_residual(const CurvOp& r);

/// For (locally conformally flat) operators with vanishing Weyl part:
/// returns 2 S tri(R) - sigma^2 |Rm|^2, which is <= 0 when S >= 0.
/// Throws if |R_W| exceeds weyl_tol * (1 + |R|).
double lcf_gap(const CurvOp& r, double weyl_tol = 1e-8);

/// Closed form of the gap above:
/// -4/(n-2) [ S^2 st^2/(n(n-1)) + st^4 + 2 S tr(Ric0^3)/(n-2) ].
double lcf_closed_form(int n, double s, double sigma_tilde2, double lambda_cubed_sum);

/// Hamilton's 3d quantity in the Ricci eigenvalues:
/// P = 1/2 [ (mu+nu-lam)^2 (mu-nu)^2 + (nu+lam-mu)^2 (nu-lam)^2
///         + (lam+mu-nu)^2 (lam-mu)^2 ].
double hamilton_p(double mu, double nu, double lam);

/// In dimension 3 curvature is determined by Ricci:
/// R_ijkl = d_ik r_jl + d_jl r_ik - d_il r_jk - d_jk r_il
///          - S/2 (d_ik d_jl - d_il d_jk).
RiemannTensor reconstruct_3d(const Eigen::MatrixXd& ric);

/// Residual of the two equivalent 3d evolution displays,
/// 4 (S C - sigma^4) + 4 P with C = R_ijkl Ric_jl Ric_ik; identically zero
/// (both displays describe the same reaction term, and S C - sigma^4 = -P).
double dim3_equivalence_residual(const Eigen::MatrixXd& ric);

}  // namespace curvlab
