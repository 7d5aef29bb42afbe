#include "curvlab/lambda2.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <string>

namespace curvlab {

double so_inner(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("so_inner: dimension mismatch");
  return -0.5 * (a * b).trace();
}

Eigen::MatrixXd lie_bracket(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("lie_bracket: dimension mismatch");
  return a * b - b * a;
}

Lambda2Frame::Lambda2Frame(int n) : n_(n), big_n_(n * (n - 1) / 2) {
  if (n < 2)
    throw std::invalid_argument("Lambda2Frame: need n >= 2, got " + std::to_string(n));

  pairs_.reserve(big_n_);
  pair_index_ = Eigen::MatrixXi::Constant(n_, n_, -1);
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      pair_index_(i, j) = static_cast<int>(pairs_.size());
      pairs_.emplace_back(i, j);
    }

  std::vector<Eigen::MatrixXd> basis(big_n_);
  for (int a = 0; a < big_n_; ++a) basis[a] = basis_matrix(a);

  c_slices_.assign(big_n_, Eigen::MatrixXd::Zero(big_n_, big_n_));
  for (int a = 0; a < big_n_; ++a)
    for (int b = a + 1; b < big_n_; ++b) {
      Eigen::MatrixXd br = lie_bracket(basis[a], basis[b]);
      for (int g = 0; g < big_n_; ++g) {
        double v = so_inner(br, basis[g]);
        c_slices_[a](b, g) = v;
        c_slices_[b](a, g) = -v;
      }
    }
}

int Lambda2Frame::pair_index(int i, int j) const {
  if (i < 0 || j <= i || j >= n_)
    throw std::invalid_argument("Lambda2Frame::pair_index: need 0 <= i < j < n");
  return pair_index_(i, j);
}

Eigen::MatrixXd Lambda2Frame::basis_matrix(int alpha) const {
  if (alpha < 0 || alpha >= big_n_)
    throw std::invalid_argument("Lambda2Frame::basis_matrix: index out of range");
  auto [i, j] = pairs_[alpha];
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  m(i, j) = 1.0;
  m(j, i) = -1.0;
  return m;
}

Eigen::MatrixXd Lambda2Frame::from_coefficients(const Eigen::VectorXd& v) const {
  if (v.size() != big_n_)
    throw std::invalid_argument("Lambda2Frame::from_coefficients: wrong length");
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n_, n_);
  for (int a = 0; a < big_n_; ++a) {
    auto [i, j] = pairs_[a];
    m(i, j) += v[a];
    m(j, i) -= v[a];
  }
  return m;
}

Eigen::VectorXd Lambda2Frame::to_coefficients(const Eigen::MatrixXd& a) const {
  if (a.rows() != n_ || a.cols() != n_)
    throw std::invalid_argument("Lambda2Frame::to_coefficients: wrong shape");
  Eigen::VectorXd v(big_n_);
  for (int k = 0; k < big_n_; ++k) {
    auto [i, j] = pairs_[k];
    v[k] = a(i, j);
  }
  return v;
}

std::shared_ptr<const Lambda2Frame> build_frame(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const Lambda2Frame>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto frame = std::make_shared<const Lambda2Frame>(n);
  cache.emplace(n, frame);
  return frame;
}

}  // namespace curvlab
