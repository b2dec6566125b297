#pragma once

#include <functional>
#include <string>

#include "qig/linalg.hpp"

namespace qig {

/// Scalar function with derivatives up to third order, enough for confluent
/// divided differences over at most four coincident nodes.
struct Func1D {
  using F = std::function<double(double)>;
  F f, d1, d2, d3;
  std::string id;

  double operator()(double x) const { return f(x); }
  /// k-th derivative, k in 0..3.
  double deriv(int k, double x) const;
};

Func1D func_identity();
Func1D func_log();
Func1D func_exp();
Func1D func_sqrt();
Func1D func_power(double p);  // x^p on (0, inf)

/// Embedding u_alpha: x -> 2/(1-alpha) x^{(1-alpha)/2} (alpha != 1), log x at
/// alpha = 1. Defined for every real alpha.
Func1D alpha_function(double alpha);

/// Inverse of the embedding, defined on its range (sign depends on alpha).
Func1D alpha_function_inverse(double alpha);

}  // namespace qig
