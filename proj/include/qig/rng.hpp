#pragma once

#include <cstdint>

#include "qig/linalg.hpp"

namespace qig {

/// Deterministic splittable PRNG (splitmix64 core). Results depend only on
/// the seed, never on the platform's library, so reports reproduce exactly.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal (Box-Muller, two uniforms per pair, second one cached).
  double gauss();

  Complex gauss_complex();

  /// Independent child stream; stream_id picks the branch.
  Rng split(std::uint64_t stream_id) const;

private:
  std::uint64_t state_;
  bool has_cached_ = false;
  double cached_ = 0.0;
};

CMat random_complex_gaussian(Rng& rng, int rows, int cols);
CMat random_hermitian(Rng& rng, int n);

/// A A* + delta I with delta = 0.05 tr(A A*)/n; keeps the condition number
/// below ~20 n so tensor residual thresholds stay meaningful.
CMat random_positive(Rng& rng, int n);

/// Same, rescaled to trace n.
CMat random_positive_unit_trace(Rng& rng, int n);

/// Haar-ish unitary via QR of a complex Gaussian with phase-fixed R diagonal.
CMat random_unitary(Rng& rng, int n);

/// Isometry with cols <= rows, columns orthonormal.
CMat random_isometry(Rng& rng, int rows, int cols);

}  // namespace qig
