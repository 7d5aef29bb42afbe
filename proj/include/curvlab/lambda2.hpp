#pragma once

#include <Eigen/Dense>

#include <memory>
#include <utility>
#include <vector>

namespace curvlab {

/// Inner product -1/2 tr(A B) on antisymmetric matrices; makes the basis
/// Phi_(ij) = E_ij - E_ji orthonormal. Throws on shape mismatch.
double so_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Commutator [A, B] = AB - BA.
Eigen::MatrixXd lie_bracket(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// Orthonormal frame of Lambda^2 R^n identified with so(n).
///
/// Basis elements are indexed by ordered pairs (i, j), i < j, in
/// lexicographic order, and realized as Phi_(ij) = E_ij - E_ji. Structure
/// constants c_{abc} = <[Phi_a, Phi_b], Phi_c> take values in {-1, 0, 1}
/// and are computed from honest matrix commutators; since all arithmetic
/// involved is on small integers they are exact, and so are identities
/// built from them (antisymmetry, Jacobi).
class Lambda2Frame {
 public:
  /// Throws std::invalid_argument unless n >= 2.
  explicit Lambda2Frame(int n);

  int ambient_dim() const { return n_; }
  /// dim Lambda^2 = n(n-1)/2.
  int dim() const { return big_n_; }

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }
  /// Index of basis element (i, j); requires 0 <= i < j < n.
  int pair_index(int i, int j) const;

  /// Dense matrix of basis element alpha.
  Eigen::MatrixXd basis_matrix(int alpha) const;

  /// Structure constant c_{abc}.
  double c(int a, int b, int g) const { return c_slices_[a](b, g); }
  /// Slice C_a with (C_a)_{bg} = c_{abg}; the workhorse of the # product.
  const Eigen::MatrixXd& c_slice(int a) const { return c_slices_[a]; }

  /// Expands coefficients against the basis into an antisymmetric matrix.
  Eigen::MatrixXd from_coefficients(const Eigen::VectorXd& v) const;
  /// Coefficients <A, Phi_alpha> of an antisymmetric matrix.
  Eigen::VectorXd to_coefficients(const Eigen::MatrixXd& a) const;

 private:
  int n_;
  int big_n_;
  std::vector<std::pair<int, int>> pairs_;
  Eigen::MatrixXi pair_index_;
  std::vector<Eigen::MatrixXd> c_slices_;
};

/// Shared, memoized frame for dimension n (frames are immutable and
/// moderately expensive to build, so everybody shares one per n).
std::shared_ptr<const Lambda2Frame> build_frame(int n);

}  // namespace curvlab
