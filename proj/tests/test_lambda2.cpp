#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "curvlab/lambda2.hpp"
#include "curvlab/rng.hpp"

#include <stdexcept>

using namespace curvlab;

namespace {

Eigen::MatrixXd skew(int n, std::uint64_t seed) {
  Eigen::MatrixXd g = random_gaussian(n, n, seed);
  return g - g.transpose();
}

}  // namespace

TEST_CASE("pair ordering is lexicographic") {
  auto f = build_frame(4);
  REQUIRE(f->dim() == 6);
  CHECK(f->pairs()[0] == std::pair<int, int>{0, 1});
  CHECK(f->pairs()[2] == std::pair<int, int>{0, 3});
  CHECK(f->pairs()[5] == std::pair<int, int>{2, 3});
  CHECK(f->pair_index(1, 3) == 4);
  CHECK_THROWS_AS(f->pair_index(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(f->pair_index(0, 4), std::invalid_argument);
}

TEST_CASE("basis is orthonormal under -tr/2") {
  for (int n : {3, 5, 7}) {
    auto f = build_frame(n);
    for (int a = 0; a < f->dim(); ++a)
      for (int b = 0; b < f->dim(); ++b) {
        double expect = a == b ? 1.0 : 0.0;
        CHECK(so_inner(f->basis_matrix(a), f->basis_matrix(b)) == expect);
      }
  }
}

TEST_CASE("so(3) structure constants") {
  auto f = build_frame(3);
  int a = f->pair_index(0, 1), b = f->pair_index(0, 2), g = f->pair_index(1, 2);
  CHECK(f->c(a, b, g) == -1.0);
  CHECK(f->c(b, a, g) == 1.0);
  CHECK(f->c(a, g, b) == 1.0);
  CHECK(f->c(a, a, g) == 0.0);
}

TEST_CASE("structure constants are -1, 0 or 1 and disjoint pairs commute") {
  auto f = build_frame(5);
  int nn = f->dim();
  for (int a = 0; a < nn; ++a)
    for (int b = 0; b < nn; ++b)
      for (int g = 0; g < nn; ++g) {
        double v = f->c(a, b, g);
        CHECK((v == 0.0 || v == 1.0 || v == -1.0));
      }
  // [Phi_(01), Phi_(23)] = 0: no shared index.
  int a = f->pair_index(0, 1), b = f->pair_index(2, 3);
  for (int g = 0; g < nn; ++g) CHECK(f->c(a, b, g) == 0.0);
}

TEST_CASE("antisymmetry is exact") {
  for (int n : {3, 4, 5, 6}) {
    auto f = build_frame(n);
    int nn = f->dim();
    double worst = 0.0;
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        for (int g = 0; g < nn; ++g)
          worst = std::max(worst, std::abs(f->c(a, b, g) + f->c(b, a, g)));
    CHECK(worst == 0.0);
  }
}

TEST_CASE("jacobi identity is exact") {
  for (int n : {3, 4, 5}) {
    auto f = build_frame(n);
    int nn = f->dim();
    double worst = 0.0;
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b)
        for (int g = 0; g < nn; ++g)
          for (int eta = 0; eta < nn; ++eta) {
            double s = 0.0;
            for (int d = 0; d < nn; ++d)
              s += f->c(a, b, d) * f->c(d, g, eta) +
                   f->c(b, g, d) * f->c(d, a, eta) +
                   f->c(g, a, d) * f->c(d, b, eta);
            worst = std::max(worst, std::abs(s));
          }
    CHECK(worst == 0.0);
  }
}

TEST_CASE("structure constants expand the matrix commutator") {
  for (int n : {3, 4, 6}) {
    auto f = build_frame(n);
    int nn = f->dim();
    for (int a = 0; a < nn; ++a)
      for (int b = 0; b < nn; ++b) {
        Eigen::MatrixXd lhs = lie_bracket(f->basis_matrix(a), f->basis_matrix(b));
        Eigen::MatrixXd rhs =
            f->from_coefficients(f->c_slice(a).row(b).transpose());
        CHECK((lhs - rhs).cwiseAbs().maxCoeff() == 0.0);
      }
  }
}

TEST_CASE("ad is self-adjoint up to sign on random triples") {
  for (int t = 0; t < 50; ++t) {
    std::uint64_t s = derive_seed(99, t);
    Eigen::MatrixXd a = skew(6, derive_seed(s, 0));
    Eigen::MatrixXd b = skew(6, derive_seed(s, 1));
    Eigen::MatrixXd c = skew(6, derive_seed(s, 2));
    double lhs = so_inner(lie_bracket(a, b), c);
    double rhs = -so_inner(lie_bracket(c, b), a);
    CHECK(std::abs(lhs - rhs) <=
          1e-12 * (1.0 + std::max(std::abs(lhs), std::abs(rhs))));
  }
}

TEST_CASE("coefficient round trip is exact on antisymmetric matrices") {
  auto f = build_frame(6);
  Eigen::MatrixXd a = skew(6, 1234);
  Eigen::MatrixXd back = f->from_coefficients(f->to_coefficients(a));
  CHECK((a - back).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("frames are shared per dimension") {
  CHECK(build_frame(6).get() == build_frame(6).get());
  CHECK(build_frame(5).get() != build_frame(6).get());
}

TEST_CASE("invalid inputs are rejected") {
  CHECK_THROWS_AS(build_frame(1), std::invalid_argument);
  CHECK_THROWS_AS(Lambda2Frame(0), std::invalid_argument);
  Eigen::MatrixXd a = skew(4, 5), b = skew(5, 6);
  CHECK_THROWS_AS(so_inner(a, b), std::invalid_argument);
  CHECK_THROWS_AS(lie_bracket(a, b), std::invalid_argument);
  auto f = build_frame(4);
  CHECK_THROWS_AS(f->basis_matrix(6), std::invalid_argument);
  CHECK_THROWS_AS(f->from_coefficients(Eigen::VectorXd::Zero(5)),
                  std::invalid_argument);
}
