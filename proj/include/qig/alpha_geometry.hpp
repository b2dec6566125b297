#pragma once

#include "qig/monotone_metric.hpp"
#include "qig/operator_calculus.hpp"
#include "qig/spectral.hpp"

namespace qig {

/// f_alpha(rho) with f_alpha(x) = 2/(1-alpha) x^{(1-alpha)/2} (log at
/// alpha = 1). Strictly increasing, so a global chart on the positive cone.
CMat alpha_embed(double alpha, const PositivePoint& rho);

/// Derivative of the embedding: L_alpha(X) = d/dt f_alpha(rho + tX)|_0.
CMat l_alpha_apply(double alpha, const PositivePoint& rho, const CMat& x);

/// Inverse of L_alpha at rho (division by the divided-difference kernel of
/// f_alpha in rho's eigenbasis).
CMat l_alpha_inverse(double alpha, const PositivePoint& rho, const CMat& y);

/// K_alpha = L_alpha^{-1} J_rho L_alpha^{-1}, so that
/// Tr L_alpha(X1) K_alpha(L_alpha(X2)) = lambda(X1, X2).
CMat k_alpha_apply(double alpha, const MonotoneMetric& m,
                   const PositivePoint& rho, const CMat& y);

/// Connection that is flat in the alpha chart: for constant fields,
/// nabla^alpha_X Y = L_alpha^{-1}(d^2/ds dt f_alpha(rho + sX + tY)|_0).
CMat nabla_alpha(double alpha, const PositivePoint& rho, const CMat& x,
                 const CMat& y);

/// Dual of nabla^alpha with respect to the metric m, from the defining
/// relation L_alpha^{-1} J(nabla*_X Y) = d/dt (L_alpha^{-1} J)_{rho+tX}(Y)|_0.
CMat nabla_alpha_dual(double alpha, const MonotoneMetric& m,
                      const PositivePoint& rho, const CMat& x, const CMat& y);

/// Torsion of the dual connection on constant fields:
/// nabla*_X Y - nabla*_Y X. Vanishes iff J_rho = L_alpha L_{-alpha} scaled,
/// i.e. iff m is the WYD metric of the same alpha.
CMat dual_torsion(double alpha, const MonotoneMetric& m,
                  const PositivePoint& rho, const CMat& x, const CMat& y);

/// Geodesic of the flat alpha chart: f_alpha^{-1}((1-t) f_alpha(rho0)
/// + t f_alpha(rho1)). Positive definite for t in [0, 1].
PositivePoint alpha_geodesic(double alpha, const PositivePoint& rho0,
                             const PositivePoint& rho1, double t);

/// Directional derivative of the metric along the manifold:
/// X lambda(Y, Z) = Tr Y d/dt J_{rho+tX}(Z)|_0 for constant fields Y, Z.
double metric_directional(const MonotoneMetric& m, const PositivePoint& rho,
                          const CMat& x, const CMat& y, const CMat& z);

}  // namespace qig
