#pragma once

#include <span>

#include "qig/func1d.hpp"
#include "qig/scalar_kernel.hpp"
#include "qig/spectral.hpp"

namespace qig {

/// Confluent divided difference of a scalar function over up to four nodes.
/// Nodes within conf_gap * scale of each other collapse to the derivative
/// form f^(m-1)(mean)/(m-1)!. scale <= 0 means "use the node magnitudes".
double dd_1d(const Func1D& f, std::span<const double> nodes, double scale = 0.0);

inline double dd1_1d(const Func1D& f, double x, double y, double scale = 0.0) {
  const double nodes[] = {x, y};
  return dd_1d(f, nodes, scale);
}
inline double dd2_1d(const Func1D& f, double x, double y, double z,
                     double scale = 0.0) {
  const double nodes[] = {x, y, z};
  return dd_1d(f, nodes, scale);
}

/// T(x,y|z) = (c(x,z) - c(y,z))/(x-y); confluent limit is d/dx c(x,z).
/// Symmetric in (x, y) by construction.
double dd1(const ScalarKernel& c, double x, double y, double z,
           double scale = 0.0);

/// Mirrored form T(z|x,y) = (c(z,x) - c(z,y))/(x-y), differencing the second
/// slot; confluent limit d/dy c(z, y).
double dd1_right(const ScalarKernel& c, double z, double x, double y,
                 double scale = 0.0);

/// T(x,y,z|w): second divided difference in the first slot, symmetric in
/// (x,y,z). Full confluence gives (1/2) d^2/dx^2 c(x,w).
double dd2(const ScalarKernel& c, double x, double y, double z, double w,
           double scale = 0.0);

/// T(x,y|z,w) = (T(x,y|z) - T(x,y|w))/(z-w): one divided difference in each
/// slot; symmetric within each pair; full confluence gives d^2 c/dx dy.
double dd_mixed(const ScalarKernel& c, double x, double y, double z, double w,
                double scale = 0.0);

}  // namespace qig
