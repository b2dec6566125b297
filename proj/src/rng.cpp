#include "qig/rng.hpp"

#include <cmath>

namespace qig {

namespace {
constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}
}  // namespace

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gauss() {
  if (has_cached_) {
    has_cached_ = false;
    return cached_;
  }
  // Box-Muller; reject u1 == 0 to keep log finite.
  double u1 = 0.0;
  do {
    u1 = uniform();
  } while (u1 <= 0.0);
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * M_PI * u2;
  cached_ = r * std::sin(theta);
  has_cached_ = true;
  return r * std::cos(theta);
}

Complex Rng::gauss_complex() {
  const double re = gauss();
  const double im = gauss();
  return Complex(re, im) / std::sqrt(2.0);
}

Rng Rng::split(std::uint64_t stream_id) const {
  return Rng(mix(state_ ^ (kGolden * (stream_id + 1))));
}

CMat random_complex_gaussian(Rng& rng, int rows, int cols) {
  CMat a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      a(i, j) = rng.gauss_complex();
    }
  }
  return a;
}

CMat random_hermitian(Rng& rng, int n) {
  const CMat g = random_complex_gaussian(rng, n, n);
  return hermitian_part(g);
}

CMat random_positive(Rng& rng, int n) {
  const CMat a = random_complex_gaussian(rng, n, n);
  const CMat p = a * a.adjoint();
  const double delta = 0.05 * p.real().trace() / n;
  return p + delta * CMat::Identity(n, n);
}

CMat random_positive_unit_trace(Rng& rng, int n) {
  CMat p = random_positive(rng, n);
  return p * (static_cast<double>(n) / p.real().trace());
}

CMat random_unitary(Rng& rng, int n) { return random_isometry(rng, n, n); }

CMat random_isometry(Rng& rng, int rows, int cols) {
  if (cols > rows) {
    throw DomainError("random_isometry: cols must not exceed rows");
  }
  const CMat g = random_complex_gaussian(rng, rows, cols);
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ() * CMat::Identity(rows, cols);
  const CMat r = qr.matrixQR().topLeftCorner(cols, cols).triangularView<Eigen::Upper>();
  // Fix the gauge so the distribution (and the result) is unambiguous.
  for (int j = 0; j < cols; ++j) {
    const Complex d = r(j, j);
    if (std::abs(d) > 0) {
      q.col(j) *= d / std::abs(d);
    }
  }
  return q;
}

}  // namespace qig
