#include "curvlab/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <string>

namespace curvlab {

namespace {

Eigen::MatrixXd wedge_matrix(const Lambda2Frame& f, const Eigen::MatrixXd& a,
                             const Eigen::MatrixXd& b) {
  int big_n = f.dim();
  const auto& pairs = f.pairs();
  Eigen::MatrixXd m(big_n, big_n);
  for (int p = 0; p < big_n; ++p) {
    auto [i, j] = pairs[p];
    for (int q = 0; q < big_n; ++q) {
      auto [k, l] = pairs[q];
      m(p, q) = 0.5 * (a(i, k) * b(j, l) - a(j, k) * b(i, l) +
                       b(i, k) * a(j, l) - b(j, k) * a(i, l));
    }
  }
  return m;
}

// One-time anchor for the 1/2 normalization: id^id must be the identity
// operator and |T0 ^ id|^2 = (n-2)/4 sum a_i^2 for traceless diagonal T0.
void wedge_selftest() {
  const int n = 5;
  auto f = build_frame(n);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  Eigen::MatrixXd ww = wedge_matrix(*f, id, id);
  if ((ww - Eigen::MatrixXd::Identity(f->dim(), f->dim())).cwiseAbs().maxCoeff() >
      1e-14)
    throw std::logic_error("wedge: id^id is not the identity operator");

  Eigen::VectorXd a(n);
  a << 1.0, -1.0, 0.5, -0.25, -0.25;
  Eigen::MatrixXd t0 = a.asDiagonal();
  double norm2 = wedge_matrix(*f, t0, id).squaredNorm();
  double expect = (n - 2) / 4.0 * a.squaredNorm();
  if (std::abs(norm2 - expect) > 1e-12)
    throw std::logic_error("wedge: traceless norm anchor violated");
}

void check_sym(const Eigen::MatrixXd& a, const char* who) {
  if (a.rows() != a.cols())
    throw std::invalid_argument(std::string(who) + ": matrix is not square");
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-9 * (1.0 + a.cwiseAbs().maxCoeff()))
    throw std::invalid_argument(std::string(who) + ": matrix is not symmetric");
}

}  // namespace

CurvOp wedge(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  static std::once_flag once;
  std::call_once(once, wedge_selftest);

  check_sym(a, "wedge");
  check_sym(b, "wedge");
  if (a.rows() != b.rows()) throw std::invalid_argument("wedge: dimension mismatch");
  if (a.rows() < 2) throw std::invalid_argument("wedge: need n >= 2");
  auto f = build_frame(static_cast<int>(a.rows()));
  return CurvOp(f, wedge_matrix(*f, a, b));
}

Decomposition decompose(const CurvOp& r) {
  int n = r.ambient_dim();
  if (n < 3) throw std::invalid_argument("decompose: needs n >= 3");
  auto frame = r.frame_ptr();

  Eigen::MatrixXd ric = ricci(r);
  double s = ric.trace();
  double sigma2 = ric.squaredNorm();
  Eigen::MatrixXd ric0 = ric;
  ric0.diagonal().array() -= s / n;
  double sigma_tilde2 = ric0.squaredNorm();

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(ric0);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("decompose: eigensolver failed");

  CurvOp r_trace(frame, s / (n * (n - 1.0)) *
                            Eigen::MatrixXd::Identity(frame->dim(), frame->dim()));
  CurvOp r_ric0 = (2.0 / (n - 2.0)) * wedge(ric0, Eigen::MatrixXd::Identity(n, n));
  CurvOp r_weyl = r - r_trace - r_ric0;

  return Decomposition{s,      sigma2,  sigma_tilde2, ric,   ric0,
                       es.eigenvalues(), r_trace,     r_ric0, r_weyl};
}

std::vector<std::pair<std::string, double>> BwResiduals::entries() const {
  return {{"bw1", bw1},
          {"eq1", eq1},
          {"eq2", eq2},
          {"closure_trace_weyl", closure_trace_weyl},
          {"closure_trace_trace", closure_trace_trace},
          {"closure_weyl_weyl", closure_weyl_weyl},
          {"closure_trace_ric0", closure_trace_ric0},
          {"closure_ric0_weyl", closure_ric0_weyl}};
}

double BwResiduals::max() const {
  double m = 0.0;
  for (const auto& [name, v] : entries()) m = std::max(m, v);
  return m;
}

BwResiduals bw_residuals(const CurvOp& r) {
  int n = r.ambient_dim();
  Decomposition d = decompose(r);
  auto frame = r.frame_ptr();
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(n, n);
  CurvOp i_op = CurvOp::identity(frame);

  BwResiduals out;
  out.bw1 = op_norm(r + sharp(r, i_op) - wedge(d.ric, id));

  Eigen::MatrixXd ric0sq = d.ric0 * d.ric0;
  Eigen::MatrixXd ric0sq0 = ric0sq;
  ric0sq0.diagonal().array() -= ric0sq.trace() / n;

  CurvOp eq1_rhs = (1.0 / (n - 2.0)) * wedge(d.ric0, d.ric0) -
                   (2.0 / ((n - 2.0) * (n - 2.0))) * wedge(ric0sq0, id) +
                   (d.sigma_tilde2 / (n * (n - 2.0))) * i_op;
  out.eq1 = op_norm(q_operator(d.r_ric0) - eq1_rhs);

  Decomposition dw = decompose(wedge(d.ric0, d.ric0));
  CurvOp eq2_trace = (-d.sigma_tilde2 / (n * (n - 1.0))) * i_op;
  CurvOp eq2_ric0 = (-2.0 / (n - 2.0)) * wedge(ric0sq0, id);
  out.eq2 = std::hypot(op_norm(dw.r_trace - eq2_trace), op_norm(dw.r_ric0 - eq2_ric0));

  // Component norms outside the stated subspace, read off the orthogonal
  // decomposition of each product.
  out.closure_trace_weyl = op_norm(b_product(d.r_trace, d.r_weyl));
  Decomposition dtt = decompose(b_product(d.r_trace, d.r_trace));
  out.closure_trace_trace = std::hypot(op_norm(dtt.r_ric0), op_norm(dtt.r_weyl));
  Decomposition dww = decompose(b_product(d.r_weyl, d.r_weyl));
  out.closure_weyl_weyl = std::hypot(op_norm(dww.r_trace), op_norm(dww.r_ric0));
  Decomposition dtr = decompose(b_product(d.r_trace, d.r_ric0));
  out.closure_trace_ric0 = std::hypot(op_norm(dtr.r_trace), op_norm(dtr.r_weyl));
  Decomposition drw = decompose(b_product(d.r_ric0, d.r_weyl));
  out.closure_ric0_weyl = std::hypot(op_norm(drw.r_trace), op_norm(drw.r_weyl));

  return out;
}

}  // namespace curvlab
