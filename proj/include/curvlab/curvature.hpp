#pragma once

#include "curvlab/lambda2.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

namespace curvlab {

/// Dense rank-4 array of curvature components R_{ijkl} in an orthonormal
/// frame, stored flat. No symmetry is imposed by the container itself;
/// residual helpers measure how far an array is from being algebraic.
class RiemannTensor {
 public:
  explicit RiemannTensor(int n);

  int dim() const { return n_; }

  double& operator()(int i, int j, int k, int l) { return a_[idx(i, j, k, l)]; }
  double operator()(int i, int j, int k, int l) const { return a_[idx(i, j, k, l)]; }

  /// Max violation of R_ijkl = -R_jikl = -R_ijlk = R_klij.
  double pair_symmetry_residual() const;
  /// Max |R_ijkl + R_iklj + R_iljk| (first Bianchi).
  double bianchi_residual() const;

  /// Sum of squares of all n^4 components.
  double squared_norm() const;
  double max_abs() const;

  RiemannTensor& operator+=(const RiemannTensor& o);
  RiemannTensor& operator-=(const RiemannTensor& o);
  RiemannTensor& operator*=(double s);

 private:
  std::size_t idx(int i, int j, int k, int l) const {
    return ((static_cast<std::size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
  int n_;
  std::vector<double> a_;
};

/// Full contraction sum_{ijkl} S_{ijkl} T_{ijkl}.
double tensor_dot(const RiemannTensor& s, const RiemannTensor& t);

/// Orthogonal projection onto tensors satisfying the first Bianchi
/// identity: T - b(T) with b(T) = (T_ijkl + T_iklj + T_iljk)/3.
/// Requires T to have the pair symmetries (checked to tolerance).
RiemannTensor bianchi_project(const RiemannTensor& t, double tol = 1e-9);

/// Symmetric operator on Lambda^2 R^n in the pair basis of a shared frame.
/// M_{(ij),(kl)} = R_{ijkl} once the operator is algebraic.
class CurvOp {
 public:
  /// Validates shape and symmetry (to tolerance, then symmetrizes exactly).
  CurvOp(std::shared_ptr<const Lambda2Frame> frame, Eigen::MatrixXd m);

  const Lambda2Frame& frame() const { return *frame_; }
  const std::shared_ptr<const Lambda2Frame>& frame_ptr() const { return frame_; }
  const Eigen::MatrixXd& matrix() const { return m_; }
  int ambient_dim() const { return frame_->ambient_dim(); }
  int dim() const { return frame_->dim(); }

  static CurvOp identity(std::shared_ptr<const Lambda2Frame> frame);
  static CurvOp zero(std::shared_ptr<const Lambda2Frame> frame);

 private:
  std::shared_ptr<const Lambda2Frame> frame_;
  Eigen::MatrixXd m_;
};

CurvOp operator+(const CurvOp& a, const CurvOp& b);
CurvOp operator-(const CurvOp& a, const CurvOp& b);
CurvOp operator*(double s, const CurvOp& a);
/// Operator composition (matrix product, then symmetrized — used only
/// through b_product / q_operator where the symmetrization is AB + BA).
Eigen::MatrixXd compose(const CurvOp& a, const CurvOp& b);

/// Frobenius pairing <A, B> = sum_{ab} A_ab B_ab on operators.
double op_inner(const CurvOp& a, const CurvOp& b);
double op_norm(const CurvOp& a);

/// Expands the operator back into R_{ijkl} (ordered pairs give the four
/// sign variants, operator symmetry gives the block swap).
RiemannTensor to_riemann(const CurvOp& r);

/// Reads an algebraic tensor into an operator; throws if the pair
/// symmetries are violated beyond tol (relative to the largest entry).
CurvOp op_from_tensor(const RiemannTensor& t, double tol = 1e-9);

/// Ricci contraction Ric_ik = sum_j R_ijkj of the reconstructed tensor.
Eigen::MatrixXd ricci(const CurvOp& r);
double scalar(const CurvOp& r);

/// Sum_{ijkl} R_{ijkl}^2 of the reconstructed tensor (= 4 <R, R>).
double tensor_norm2(const CurvOp& r);

/// The # product: (A#B)_ab = 1/2 c_{agh} c_{bdt} A_gd B_ht, evaluated
/// slice-wise as 1/2 <C_a, A C_b B>_F.
CurvOp sharp(const CurvOp& a, const CurvOp& b);

/// B(A, B) = AB + BA + 2 A#B.
CurvOp b_product(const CurvOp& a, const CurvOp& b);

/// Q(R) = R^2 + R#R, the reaction operator.
CurvOp q_operator(const CurvOp& r);

/// Trilinear form tri(A, B, C) = tr(B(A, B) C); fully symmetric.
double tri(const CurvOp& a, const CurvOp& b, const CurvOp& c);
/// tri(R) = tri(R, R, R) = 2 <Q(R), R>.
double tri(const CurvOp& r);

/// -2 tri(R) + sum_{ip} Ric_ip (T T^t)_ip with T the n x n^3 flattening
/// of the curvature tensor; nonnegative when R >= 0.
double tachibana_gap(const CurvOp& r);

/// Pushes R forward along an orthogonal change of frame O (tensor rule
/// R'_{ijkl} = O_ia O_jb O_kc O_ld R_abcd). Throws if O is not orthogonal.
CurvOp conjugate(const CurvOp& r, const Eigen::MatrixXd& o);

/// Random algebraic curvature operator: Gaussian pair-symmetric tensor,
/// Bianchi-projected. Deterministic in (n, seed).
CurvOp random_curv(int n, std::uint64_t seed);

/// Random nonnegative curvature operator: positive combination of wedge
/// squares of PSD matrices (PSD and Bianchi-clean by construction).
CurvOp random_nonneg_curv(int n, std::uint64_t seed);

/// Random operator with vanishing Weyl part and positive scalar curvature
/// (trace part plus a traceless-Ricci wedge part).
CurvOp random_lcf_curv(int n, std::uint64_t seed);

}  // namespace curvlab
