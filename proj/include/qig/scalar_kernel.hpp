#pragma once

#include <functional>
#include <string>

#include "qig/func1d.hpp"
#include "qig/linalg.hpp"

namespace qig {

/// Two-variable kernel c(x, y) together with the partial derivatives the
/// confluent divided-difference formulas consume. Shipped kernels provide
/// closed forms; anything built from a bare value falls back to high-order
/// central differences with step h_fd scaled to the argument.
struct ScalarKernel {
  using F2 = std::function<double(double, double)>;

  F2 value, dx, dy, dxx, dxy, dyy, dxxx, dyyy;
  std::string id;

  /// Wraps a plain value function, deriving every partial by finite
  /// differences (first order uses h = eps^{1/3} * scale).
  static ScalarKernel from_value(F2 v, std::string id, double scale_hint = 1.0);

  /// c(y, x): swaps the roles of the two arguments, reusing the bundle.
  ScalarKernel transpose() const;

  /// Divided-difference kernel T_f(x, y) = (f(x)-f(y))/(x-y) of a scalar
  /// function, with partials expressed through higher divided differences.
  static ScalarKernel divided_difference(const Func1D& f);

  /// a(x,y)/b(x,y); derivatives analytic to second order, third order by
  /// finite differences (only exercised by diagnostics).
  static ScalarKernel quotient(const ScalarKernel& a, const ScalarKernel& b);

  ScalarKernel scaled(double w) const;
  static ScalarKernel linear_combination(double wa, const ScalarKernel& a,
                                         double wb, const ScalarKernel& b);
};

/// 4th-order central first derivative, h = cbrt(machine eps) * scale.
double fd_derivative(const std::function<double(double)>& f, double x,
                     double scale = 1.0);
double fd_derivative2(const std::function<double(double)>& f, double x,
                      double scale = 1.0);
double fd_derivative3(const std::function<double(double)>& f, double x,
                      double scale = 1.0);

}  // namespace qig
