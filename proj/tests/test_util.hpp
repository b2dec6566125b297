#pragma once

#include <cmath>
#include <algorithm>

#include "qig/linalg.hpp"
#include "qig/rng.hpp"

namespace qig::testutil {

inline double rel_err(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

inline double mat_err(const CMat& got, const CMat& want) {
  const double scale = std::max(1.0, want.cwiseAbs().maxCoeff());
  return (got - want).cwiseAbs().maxCoeff() / scale;
}

/// Central difference of a matrix-valued curve, Richardson-extrapolated.
template <typename F>
CMat matrix_fd(F&& f, double h) {
  const CMat d1 = (f(h) - f(-h)) / (2.0 * h);
  const CMat d2 = (f(h / 2) - f(-h / 2)) / h;
  return (4.0 * d2 - d1) / 3.0;
}

}  // namespace qig::testutil
