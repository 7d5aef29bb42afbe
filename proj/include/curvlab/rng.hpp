#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace curvlab {

/// Derives an independent seed for stream `counter` of a run seeded with
/// `base` (splitmix64 finalizer). Used so that trial k always sees the same
/// stream no matter which thread runs it or in which order.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t counter) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ull * (counter + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

/// FNV-1a hash of a string, for folding check names into seed derivation.
constexpr std::uint64_t fnv1a(const char* s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (; *s; ++s) h = (h ^ static_cast<unsigned char>(*s)) * 0x100000001b3ull;
  return h;
}

/// Matrix with i.i.d. standard normal entries.
Eigen::MatrixXd random_gaussian(int rows, int cols, std::uint64_t seed);

/// Symmetric matrix (G + G^T)/2 with Gaussian G.
Eigen::MatrixXd random_symmetric(int n, std::uint64_t seed);

/// Symmetric traceless matrix.
Eigen::MatrixXd random_traceless_symmetric(int n, std::uint64_t seed);

/// Random symmetric positive semidefinite matrix G G^T.
Eigen::MatrixXd random_psd(int n, std::uint64_t seed);

/// Haar-ish random rotation from the QR factorization of a Gaussian matrix
/// (sign-fixed so the diagonal of R is positive, determinant forced to +1).
Eigen::MatrixXd random_rotation(int n, std::uint64_t seed);

/// Uniform double in [lo, hi).
double random_uniform(double lo, double hi, std::uint64_t seed);

}  // namespace curvlab
