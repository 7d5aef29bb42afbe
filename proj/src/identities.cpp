#include "curvlab/identities.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace curvlab {

double IdentityResiduals::Entry::abs_residual() const { return std::abs(lhs - rhs); }

double IdentityResiduals::Entry::rel_residual() const {
  return abs_residual() / (1.0 + std::max(std::abs(lhs), std::abs(rhs)));
}

double IdentityResiduals::max_rel() const {
  double m = 0.0;
  for (const auto& [name, e] : items) m = std::max(m, e.rel_residual());
  return m;
}

namespace {

// sum W_ijkl (Ric0)_ik (Ric0)_jl for the Weyl part of the decomposition.
double weyl_ric_coupling(const Decomposition& d) {
  RiemannTensor w = to_riemann(d.r_weyl);
  int n = w.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += w(i, j, k, l) * d.ric0(i, k) * d.ric0(j, l);
  return acc;
}

}  // namespace

IdentityResiduals huisken_residuals(const CurvOp& r) {
  int n = r.ambient_dim();
  Decomposition d = decompose(r);
  RiemannTensor qt = to_riemann(q_operator(r));

  double lhs1 = tensor_dot(to_riemann(d.r_trace), qt);
  double lhs2 = tensor_dot(to_riemann(d.r_ric0), qt);
  double lhs3 = tensor_dot(to_riemann(d.r_weyl), qt);

  double wll = weyl_ric_coupling(d);
  double lam3 = (d.ric0 * d.ric0 * d.ric0).trace();
  double nn1 = n * (n - 1.0);

  double rhs1 = 2.0 * d.s * d.sigma2 / nn1;
  double rhs2 = 4.0 * d.s * d.sigma_tilde2 / nn1 -
                8.0 * lam3 / ((n - 2.0) * (n - 2.0)) + 4.0 * wll / (n - 2.0);
  double rhs3 = 2.0 * tri(d.r_weyl) + 2.0 * wll / (n - 2.0);

  IdentityResiduals out;
  out.items["hu1"] = {lhs1, rhs1};
  out.items["hu2"] = {lhs2, rhs2};
  out.items["hu3"] = {lhs3, rhs3};
  return out;
}

double sum_consistency(const CurvOp& r) {
  CurvOp q = q_operator(r);
  double tensor_route = tensor_dot(to_riemann(r), to_riemann(q));
  double operator_route = 2.0 * tri(r);
  return std::abs(tensor_route - operator_route);
}

IdentityResiduals main_identity_residual(const CurvOp& r) {
  int n = r.ambient_dim();
  Decomposition d = decompose(r);

  double wll = weyl_ric_coupling(d);
  double lam3 = (d.ric0 * d.ric0 * d.ric0).trace();
  double w2 = op_inner(d.r_weyl, d.r_weyl);
  double nn1 = n * (n - 1.0);

  double lhs = 2.0 * d.s * tri(r) - d.sigma2 * tensor_norm2(r);
  double rhs = -4.0 / (n - 2.0) *
                   (d.s * d.s * d.sigma_tilde2 / nn1 +
                    d.sigma_tilde2 * d.sigma_tilde2 + 2.0 * d.s * lam3 / (n - 2.0)) +
               2.0 * d.s * tri(d.r_weyl) + 6.0 * d.s * wll / (n - 2.0) -
               4.0 * d.sigma2 * w2;

  IdentityResiduals out;
  out.items["hu_main"] = {lhs, rhs};
  return out;
}

double lcf_gap(const CurvOp& r, double weyl_tol) {
  Decomposition d = decompose(r);
  if (op_norm(d.r_weyl) > weyl_tol * (1.0 + op_norm(r)))
    throw std::invalid_argument("lcf_gap: operator has a nonzero Weyl part");
  return 2.0 * d.s * tri(r) - d.sigma2 * tensor_norm2(r);
}

double lcf_closed_form(int n, double s, double sigma_tilde2, double lambda_cubed_sum) {
  if (n < 3) throw std::invalid_argument("lcf_closed_form: needs n >= 3");
  return -4.0 / (n - 2.0) *
         (s * s * sigma_tilde2 / (n * (n - 1.0)) + sigma_tilde2 * sigma_tilde2 +
          2.0 * s * lambda_cubed_sum / (n - 2.0));
}

double hamilton_p(double mu, double nu, double lam) {
  double a = (mu + nu - lam) * (mu - nu);
  double b = (nu + lam - mu) * (nu - lam);
  double c = (lam + mu - nu) * (lam - mu);
  return 0.5 * (a * a + b * b + c * c);
}

RiemannTensor reconstruct_3d(const Eigen::MatrixXd& ric) {
  if (ric.rows() != 3 || ric.cols() != 3)
    throw std::invalid_argument("reconstruct_3d: Ricci must be 3x3");
  if ((ric - ric.transpose()).cwiseAbs().maxCoeff() >
      1e-9 * (1.0 + ric.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("reconstruct_3d: Ricci must be symmetric");

  double s = ric.trace();
  auto kd = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  RiemannTensor t(3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l)
          t(i, j, k, l) = kd(i, k) * ric(j, l) + kd(j, l) * ric(i, k) -
                          kd(i, l) * ric(j, k) - kd(j, k) * ric(i, l) -
                          0.5 * s * (kd(i, k) * kd(j, l) - kd(i, l) * kd(j, k));
  return t;
}

double dim3_equivalence_residual(const Eigen::MatrixXd& ric) {
  RiemannTensor t = reconstruct_3d(ric);

  double s = ric.trace();
  double sigma2 = ric.squaredNorm();
  double c = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = 0; l < 3; ++l) c += t(i, j, k, l) * ric(j, l) * ric(i, k);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ric);
  Eigen::Vector3d ev = es.eigenvalues();
  double p = hamilton_p(ev[0], ev[1], ev[2]);

  return std::abs(4.0 * (s * c - sigma2 * sigma2) + 4.0 * p);
}

}  // namespace curvlab
