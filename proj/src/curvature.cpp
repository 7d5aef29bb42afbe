#include "curvlab/curvature.hpp"

#include "curvlab/decomposition.hpp"
#include "curvlab/rng.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace curvlab {

RiemannTensor::RiemannTensor(int n) : n_(n) {
  if (n < 2) throw std::invalid_argument("RiemannTensor: need n >= 2");
  a_.assign(static_cast<std::size_t>(n) * n * n * n, 0.0);
}

double RiemannTensor::pair_symmetry_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          double v = (*this)(i, j, k, l);
          worst = std::max(worst, std::abs(v + (*this)(j, i, k, l)));
          worst = std::max(worst, std::abs(v + (*this)(i, j, l, k)));
          worst = std::max(worst, std::abs(v - (*this)(k, l, i, j)));
        }
  return worst;
}

double RiemannTensor::bianchi_residual() const {
  double worst = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l)
          worst = std::max(worst, std::abs((*this)(i, j, k, l) + (*this)(i, k, l, j) +
                                           (*this)(i, l, j, k)));
  return worst;
}

double RiemannTensor::squared_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return s;
}

double RiemannTensor::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

RiemannTensor& RiemannTensor::operator+=(const RiemannTensor& o) {
  if (o.n_ != n_) throw std::invalid_argument("RiemannTensor: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

RiemannTensor& RiemannTensor::operator-=(const RiemannTensor& o) {
  if (o.n_ != n_) throw std::invalid_argument("RiemannTensor: dimension mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

RiemannTensor& RiemannTensor::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

double tensor_dot(const RiemannTensor& s, const RiemannTensor& t) {
  if (s.dim() != t.dim()) throw std::invalid_argument("tensor_dot: dimension mismatch");
  int n = s.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) acc += s(i, j, k, l) * t(i, j, k, l);
  return acc;
}

RiemannTensor bianchi_project(const RiemannTensor& t, double tol) {
  if (t.pair_symmetry_residual() > tol * (1.0 + t.max_abs()))
    throw std::invalid_argument("bianchi_project: input lacks pair symmetries");
  int n = t.dim();
  RiemannTensor out(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
          double b = (t(i, j, k, l) + t(i, k, l, j) + t(i, l, j, k)) / 3.0;
          out(i, j, k, l) = t(i, j, k, l) - b;
        }
  return out;
}

CurvOp::CurvOp(std::shared_ptr<const Lambda2Frame> frame, Eigen::MatrixXd m)
    : frame_(std::move(frame)), m_(std::move(m)) {
  if (!frame_) throw std::invalid_argument("CurvOp: null frame");
  int big_n = frame_->dim();
  if (m_.rows() != big_n || m_.cols() != big_n)
    throw std::invalid_argument("CurvOp: matrix size does not match frame");
  double asym = (m_ - m_.transpose()).cwiseAbs().maxCoeff();
  if (asym > 1e-8 * (1.0 + m_.cwiseAbs().maxCoeff()))
    throw std::invalid_argument("CurvOp: matrix is not symmetric");
  m_ = 0.5 * (m_ + m_.transpose()).eval();
}

CurvOp CurvOp::identity(std::shared_ptr<const Lambda2Frame> frame) {
  int big_n = frame->dim();
  return CurvOp(std::move(frame), Eigen::MatrixXd::Identity(big_n, big_n));
}

CurvOp CurvOp::zero(std::shared_ptr<const Lambda2Frame> frame) {
  int big_n = frame->dim();
  return CurvOp(std::move(frame), Eigen::MatrixXd::Zero(big_n, big_n));
}

namespace {

void check_same_frame(const CurvOp& a, const CurvOp& b, const char* who) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument(std::string(who) + ": frame mismatch");
}

}  // namespace

CurvOp operator+(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "operator+");
  return CurvOp(a.frame_ptr(), a.matrix() + b.matrix());
}

CurvOp operator-(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "operator-");
  return CurvOp(a.frame_ptr(), a.matrix() - b.matrix());
}

CurvOp operator*(double s, const CurvOp& a) {
  return CurvOp(a.frame_ptr(), s * a.matrix());
}

Eigen::MatrixXd compose(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "compose");
  return a.matrix() * b.matrix();
}

double op_inner(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "op_inner");
  return a.matrix().cwiseProduct(b.matrix()).sum();
}

double op_norm(const CurvOp& a) { return a.matrix().norm(); }

RiemannTensor to_riemann(const CurvOp& r) {
  const auto& f = r.frame();
  int big_n = f.dim();
  RiemannTensor t(f.ambient_dim());
  const auto& pairs = f.pairs();
  for (int a = 0; a < big_n; ++a) {
    auto [i, j] = pairs[a];
    for (int b = 0; b < big_n; ++b) {
      auto [k, l] = pairs[b];
      double v = r.matrix()(a, b);
      t(i, j, k, l) = v;
      t(j, i, k, l) = -v;
      t(i, j, l, k) = -v;
      t(j, i, l, k) = v;
    }
  }
  return t;
}

CurvOp op_from_tensor(const RiemannTensor& t, double tol) {
  if (t.pair_symmetry_residual() > tol * (1.0 + t.max_abs()))
    throw std::invalid_argument("op_from_tensor: tensor lacks pair symmetries");
  auto frame = build_frame(t.dim());
  int big_n = frame->dim();
  Eigen::MatrixXd m(big_n, big_n);
  const auto& pairs = frame->pairs();
  for (int a = 0; a < big_n; ++a) {
    auto [i, j] = pairs[a];
    for (int b = 0; b < big_n; ++b) {
      auto [k, l] = pairs[b];
      m(a, b) = t(i, j, k, l);
    }
  }
  return CurvOp(frame, std::move(m));
}

Eigen::MatrixXd ricci(const CurvOp& r) {
  RiemannTensor t = to_riemann(r);
  int n = t.dim();
  Eigen::MatrixXd ric = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      double s = 0.0;
      for (int j = 0; j < n; ++j) s += t(i, j, k, j);
      ric(i, k) = s;
    }
  return 0.5 * (ric + ric.transpose()).eval();
}

double scalar(const CurvOp& r) { return ricci(r).trace(); }

double tensor_norm2(const CurvOp& r) { return to_riemann(r).squared_norm(); }

CurvOp sharp(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "sharp");
  const auto& f = a.frame();
  int big_n = f.dim();
  Eigen::MatrixXd out(big_n, big_n);
  for (int bcol = 0; bcol < big_n; ++bcol) {
    Eigen::MatrixXd k = a.matrix() * f.c_slice(bcol) * b.matrix();
    for (int arow = 0; arow < big_n; ++arow)
      out(arow, bcol) = 0.5 * f.c_slice(arow).cwiseProduct(k).sum();
  }
  return CurvOp(a.frame_ptr(), std::move(out));
}

CurvOp b_product(const CurvOp& a, const CurvOp& b) {
  check_same_frame(a, b, "b_product");
  Eigen::MatrixXd ab = a.matrix() * b.matrix();
  Eigen::MatrixXd sym = ab + ab.transpose();
  return CurvOp(a.frame_ptr(), sym) + 2.0 * sharp(a, b);
}

CurvOp q_operator(const CurvOp& r) {
  Eigen::MatrixXd sq = r.matrix() * r.matrix();
  return CurvOp(r.frame_ptr(), sq) + sharp(r, r);
}

double tri(const CurvOp& a, const CurvOp& b, const CurvOp& c) {
  check_same_frame(a, c, "tri");
  return (b_product(a, b).matrix() * c.matrix()).trace();
}

double tri(const CurvOp& r) { return tri(r, r, r); }

double tachibana_gap(const CurvOp& r) {
  RiemannTensor t = to_riemann(r);
  int n = t.dim();
  // Flatten to n x n^3 and form sum Ric_ip (T T^t)_ip.
  Eigen::MatrixXd flat(n, n * n * n);
  for (int i = 0; i < n; ++i) {
    int col = 0;
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) flat(i, col++) = t(i, j, k, l);
  }
  Eigen::MatrixXd gram = flat * flat.transpose();
  double ric_term = ricci(r).cwiseProduct(gram).sum();
  return -2.0 * tri(r) + ric_term;
}

CurvOp conjugate(const CurvOp& r, const Eigen::MatrixXd& o) {
  int n = r.ambient_dim();
  if (o.rows() != n || o.cols() != n)
    throw std::invalid_argument("conjugate: rotation has wrong shape");
  if ((o.transpose() * o - Eigen::MatrixXd::Identity(n, n)).cwiseAbs().maxCoeff() >
      1e-10 * n)
    throw std::invalid_argument("conjugate: matrix is not orthogonal");

  RiemannTensor t = to_riemann(r);
  // Four successive mode products with O.
  RiemannTensor u(n);
  for (int i = 0; i < n; ++i)
    for (int a = 0; a < n; ++a) {
      double w = o(i, a);
      if (w == 0.0) continue;
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) u(i, j, k, l) += w * t(a, j, k, l);
    }
  RiemannTensor v(n);
  for (int j = 0; j < n; ++j)
    for (int b = 0; b < n; ++b) {
      double w = o(j, b);
      for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k)
          for (int l = 0; l < n; ++l) v(i, j, k, l) += w * u(i, b, k, l);
    }
  RiemannTensor u2(n);
  for (int k = 0; k < n; ++k)
    for (int c = 0; c < n; ++c) {
      double w = o(k, c);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int l = 0; l < n; ++l) u2(i, j, k, l) += w * v(i, j, c, l);
    }
  RiemannTensor v2(n);
  for (int l = 0; l < n; ++l)
    for (int d = 0; d < n; ++d) {
      double w = o(l, d);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          for (int k = 0; k < n; ++k) v2(i, j, k, l) += w * u2(i, j, k, d);
    }
  return op_from_tensor(v2, 1e-8);
}

CurvOp random_curv(int n, std::uint64_t seed) {
  auto frame = build_frame(n);
  Eigen::MatrixXd m = random_symmetric(frame->dim(), seed);
  CurvOp raw(frame, std::move(m));
  RiemannTensor proj = bianchi_project(to_riemann(raw));
  return op_from_tensor(proj);
}

CurvOp random_nonneg_curv(int n, std::uint64_t seed) {
  auto frame = build_frame(n);
  Eigen::MatrixXd acc = Eigen::MatrixXd::Zero(frame->dim(), frame->dim());
  for (int k = 0; k < 3; ++k) {
    Eigen::MatrixXd a = random_psd(n, derive_seed(seed, 2 * k));
    double c = random_uniform(0.0, 1.0, derive_seed(seed, 2 * k + 1));
    acc += c * wedge(a, a).matrix();
  }
  return CurvOp(frame, std::move(acc));
}

CurvOp random_lcf_curv(int n, std::uint64_t seed) {
  if (n < 3) throw std::invalid_argument("random_lcf_curv: needs n >= 3");
  auto frame = build_frame(n);
  double a = random_uniform(0.2, 3.0, derive_seed(seed, 0));
  Eigen::MatrixXd t0 = random_traceless_symmetric(n, derive_seed(seed, 1));
  return a * CurvOp::identity(frame) +
         (2.0 / (n - 2.0)) * wedge(t0, Eigen::MatrixXd::Identity(n, n));
}

}  // namespace curvlab
