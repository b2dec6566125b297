#pragma once

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "qig/scalar_kernel.hpp"

namespace qig {

/// One-variable remainder kernel k(u) with derivatives to third order.
/// Every generator g decomposes as g(u) = a(u-1) + (u-1)^2 k(u); working with
/// k removes the double zero of g at u = 1 from all downstream kernels.
struct KBundle {
  std::function<double(double)> k0, k1, k2, k3;
  std::string id;
};

KBundle transpose_bundle(const KBundle& kb);
KBundle mix_bundle(double p, const KBundle& kb);
KBundle add_bundle(double wa, const KBundle& a, double wb, const KBundle& b);

/// Generator of a relative g-entropy: operator convex on (0, inf) with
/// g(1) = 0 and g''(1) = 1. The normalized linear part a = g'(1) is free and
/// does not affect the induced geometry.
class GFunction {
public:
  double g(double u) const;
  double g1(double u) const;
  double g2(double u) const;
  double g3(double u) const;

  double k(double u) const { return kb_.k0(u); }
  double k1(double u) const { return kb_.k1(u); }
  double k2(double u) const { return kb_.k2(u); }
  double k3(double u) const { return kb_.k3(u); }
  const KBundle& k_bundle() const { return kb_; }

  double a() const { return a_; }
  /// Skew parameter 2 g'''(1) + 3 = 12 k'(1) + 3, in [-3, 3] for this class.
  double alpha() const { return 12.0 * kb_.k1(1.0) + 3.0; }

  /// u g(1/u) (swaps the roles of the two density arguments).
  GFunction transpose() const;
  /// p g + (1-p) transpose(g).
  GFunction mix(double p) const;

  /// c(x, y) = k(x/y) / y, the kernel of the quadratic remainder term.
  ScalarKernel kernel() const;
  /// c(y, x).
  ScalarKernel kernel_hat() const;
  /// cbar = c + c^T; 1/(y F(x/y)) for the induced monotone metric.
  ScalarKernel kernel_sym() const;
  /// c_r = c^T - c; antisymmetric part, vanishes iff g is symmetric.
  ScalarKernel kernel_skew() const;

  /// 1/(k + khat): the operator monotone function of the induced metric
  /// (equals 1/(2 k_h) for the symmetrized generator h = (g + ghat)/2).
  double induced_F(double x) const;

  const std::string& id() const { return id_; }
  const nlohmann::json& spec() const { return spec_; }
  /// Factor applied to a measure-family weight set to reach total mass 1/2.
  double rescale_factor() const { return rescale_; }

  static GFunction alpha_family(double alpha);
  static GFunction extreme(double s);  // s in [0, inf], inf allowed
  static GFunction measure(double a, double atom_inf, double atom_zero,
                           const std::vector<double>& nodes,
                           const std::vector<double>& weights);
  static GFunction from_k(KBundle kb, double a, std::string id,
                          nlohmann::json spec = {});
  static GFunction from_json(const nlohmann::json& j);
  /// Accepts "alpha:0.5", "extreme:2", "mixture:0.3:alpha:2" or inline JSON.
  static GFunction parse(const std::string& text);

private:
  GFunction(KBundle kb, double a, std::string id, nlohmann::json spec,
            double rescale = 1.0);

  KBundle kb_;
  double a_ = 0.0;
  std::string id_;
  nlohmann::json spec_;
  double rescale_ = 1.0;
};

/// Operator monotone function normalized to F(1) = 1 with the symmetry
/// F(x) = x F(1/x); determines a monotone metric.
struct MonotoneF {
  std::function<double(double)> f;
  std::string id;

  double operator()(double x) const { return f(x); }
};

/// Symmetric generator h with (u-1)^2/(2 h(u)) = F; requires F symmetric and
/// normalized (checked on a grid).
GFunction h_from_F(const MonotoneF& F);

/// F = 1/(2 k_h); requires h symmetric (transpose-invariant, checked).
MonotoneF F_from_h(const GFunction& h);

/// Closed form of the Wigner-Yanase-Dyson monotone function for |alpha|<=3.
double wyd_F(double alpha, double x);

}  // namespace qig
