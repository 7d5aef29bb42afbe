#include "curvlab/rng.hpp"

#include <random>

namespace curvlab {

Eigen::MatrixXd random_gaussian(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = dist(gen);
  return m;
}

Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed) {
  Eigen::MatrixXd g = random_gaussian(n, n, seed);
  return 0.5 * (g + g.transpose());
}

Eigen::MatrixXd random_traceless_symmetric(int n, std::uint64_t seed) {
  Eigen::MatrixXd s = random_symmetric(n, seed);
  s.diagonal().array() -= s.trace() / n;
  return s;
}

Eigen::MatrixXd random_psd(int n, std::uint64_t seed) {
  Eigen::MatrixXd g = random_gaussian(n, n, seed);
  return g * g.transpose();
}

Eigen::MatrixXd random_rotation(int n, std::uint64_t seed) {
  Eigen::MatrixXd g = random_gaussian(n, n, seed);
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  Eigen::MatrixXd q = qr.householderQ();
  Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < n; ++i)
    if (r(i, i) < 0) q.col(i) *= -1.0;
  if (q.determinant() < 0) q.col(0) *= -1.0;
  return q;
}

double random_uniform(double lo, double hi, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(gen);
}

}  // namespace curvlab
