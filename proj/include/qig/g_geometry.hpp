#pragma once

#include <string>
#include <vector>

#include "qig/g_function.hpp"
#include "qig/monotone_metric.hpp"
#include "qig/spectral.hpp"

namespace qig {

/// Relative g-entropy H_g(rho, sigma) = a Tr(sigma - rho)
/// + Tr Delta c(L_sigma, R_rho)(Delta) with Delta = sigma - rho and
/// c(x, y) = k(x/y)/y.
double entropy(const GFunction& g, const PositivePoint& rho,
               const PositivePoint& sigma);

/// Metric as the negative mixed Hessian of the entropy, evaluated through the
/// analytic kernel route: Re Tr X c(Y) + Re Tr Y c(X) at coincident points.
double metric_from_g(const GFunction& g, const PositivePoint& rho,
                     const CMat& x, const CMat& y);

/// Scalar residual of the conjugate-symmetry ODE
///   -alpha gbar(u) = 2u gr'(u) - gr(u) + 2au + 2a,
/// gbar = g + ghat, gr = ghat - g. Zero for all u iff conjugate symmetric.
double conjugate_ode_residual(const GFunction& g, double u);

/// Equivalent form (1+alpha)/2 gbar(u) - (g'(1/u) + u g'(u) - au - a);
/// identically -1/2 of conjugate_ode_residual.
double conjugate_ode_residual2(const GFunction& g, double u);

/// Residual of the flatness ODE
/// (alpha^2-1) gbar + gbar'(u-1) - 2 gbar'' u(1+u) + alpha(gr'+2a)(u-1) + 8.
double flat_ode_residual(const GFunction& g, double u);

/// Skewness components over the metric-orthonormal tangent frame plus the
/// raised tensor D(b_i, b_j) with lambda(D(X,Y), Z) = Dt(X,Y,Z).
struct SkewnessTensor {
  int size = 0;
  std::vector<double> ttilde;            // size^3, totally symmetric
  std::vector<std::vector<CMat>> raised;  // raised[i][j] = D(b_i, b_j)
  double at(int i, int j, int k) const {
    return ttilde[(static_cast<size_t>(i) * size + j) * size + k];
  }
  double max_abs() const;
};

/// 4-index curvature over the metric-orthonormal tangent frame.
struct CurvatureTensor {
  int size = 0;
  std::vector<double> r;  // size^4
  std::string tag;
  double at(int i, int j, int k, int l) const {
    return r[((static_cast<size_t>(i) * size + j) * size + k) * size + l];
  }
  double max_abs() const;
};

/// Connection coefficients nabla_{b_i} b_j over the orthonormal frame.
struct ConnectionCoefficients {
  std::vector<CMat> frame;
  std::vector<std::vector<CMat>> gamma;
  std::string tag;
  /// max over (i,j) of |gamma[i][j] - gamma[j][i]| (torsion-free residual).
  double torsion_defect() const;
};

enum class CurvatureRoute {
  kTensor,  // curvature of the metric connection plus skewness corrections
  kDirect   // connection of the mixed generator differentiated directly
};

/// Everything derived from one (g, rho) pair: divided-difference tables of
/// the kernels c and chat in rho's eigenbasis, the induced metric, and the
/// orthonormal tangent frame.
class GeometryContext {
public:
  GeometryContext(const GFunction& g, const PositivePoint& rho);

  const GFunction& g() const { return g_; }
  const PositivePoint& rho() const { return rho_; }
  const MonotoneMetric& metric() const { return metric_; }
  const std::vector<CMat>& frame() const { return frame_; }
  int dim() const { return n_; }

  double lambda(const CMat& x, const CMat& y) const;

  /// Q(X,Y,Z) = sum R(lam_i, lam_j | lam_k) x_ki y_ij z_jk with R the left
  /// divided difference of the skew kernel chat - c. Complex in general;
  /// only symmetrized combinations are real.
  Complex q_tensor(const CMat& x, const CMat& y, const CMat& z) const;

  /// Skewness Dt(X,Y,Z) = 2Re{Q(X,Y,Z) + Q(Y,X,Z) + Q(X,Z,Y)}.
  double skew(const CMat& x, const CMat& y, const CMat& z) const;

  /// D(X,Y) with lambda(D(X,Y), Z) = Dt(X,Y,Z) for all Z.
  CMat d_raised(const CMat& x, const CMat& y) const;

  /// Metric (self-dual, torsion-free) connection via the S coefficients.
  CMat nabla_bar(const CMat& x, const CMat& y) const;

  /// nabla^{(g)} from the entropy Hessian route (independent of nabla_bar
  /// + d_raised/2, which must agree with it).
  CMat nabla_g(const CMat& x, const CMat& y) const;

  /// nabla^{(p)} = nabla_bar + (2p-1)/2 D.
  CMat nabla_p(double p, const CMat& x, const CMat& y) const;

  /// X lambda(Y, Z) for constant fields.
  double x_lambda(const CMat& x, const CMat& y, const CMat& z) const;

  /// X lambda(nabla_bar_Y Z, W): derivative of the full composite along X.
  double x_lambda_nabla_bar(const CMat& x, const CMat& y, const CMat& z,
                            const CMat& w) const;

  /// X lambda(nabla^{(g)}_Y Z, W) for this context's g.
  double x_lambda_nabla_g(const CMat& x, const CMat& y, const CMat& z,
                          const CMat& w) const;

  /// X Dt(Y,Z,W): derivative of the skewness along X.
  double x_skew(const CMat& x, const CMat& y, const CMat& z,
                const CMat& w) const;

  /// Covariant derivative F = (nabla_bar Dt)(X; Y,Z,W).
  double skew_covariant(const CMat& x, const CMat& y, const CMat& z,
                        const CMat& w) const;

  /// Curvature of the metric connection:
  /// Rbar = X lambda(nabla_bar_Y Z, W) - Y lambda(nabla_bar_X Z, W)
  ///        + lambda(nabla_bar_X Z, nabla_bar_Y W)
  ///        - lambda(nabla_bar_Y Z, nabla_bar_X W).
  double curvature_bar(const CMat& x, const CMat& y, const CMat& z,
                       const CMat& w) const;

  /// Single component of R^p assembled from Rbar, the antisymmetrized
  /// covariant skewness derivative, and the frame-expanded D-D products.
  double curvature_p_component(double p, const CMat& x, const CMat& y,
                               const CMat& z, const CMat& w) const;

  /// Six-term residual whose vanishing (for all arguments) is equivalent to
  /// conjugate symmetry:
  /// X Dt(Y,Z,W) - Y Dt(X,Z,W) + Dt(X, nabla_bar_Y Z, W)
  /// + Dt(X, Z, nabla_bar_Y W) - Dt(Y, nabla_bar_X Z, W)
  /// - Dt(Y, Z, nabla_bar_X W).
  double conjugate_residual(const CMat& x, const CMat& y, const CMat& z,
                            const CMat& w) const;

private:
  friend CurvatureTensor curvature_p(const GFunction&, double,
                                     const PositivePoint&, CurvatureRoute);
  friend SkewnessTensor skewness(const GFunction&, const PositivePoint&);

  Complex p_sum(double wc, double wh, const CMat& a, const CMat& b,
                const CMat& c) const;
  Complex xp_sum(double wc, double wh, const CMat& x, const CMat& a,
                 const CMat& b, const CMat& c) const;
  CMat to_eig(const CMat& x) const { return rho_.spec().to_eigenbasis(x); }
  CMat from_eig(const CMat& x) const { return rho_.spec().from_eigenbasis(x); }
  CMat nabla_bar_eig(const CMat& xe, const CMat& ye) const;
  CMat nabla_g_eig(const CMat& xe, const CMat& ye) const;
  CMat d_raised_eig(const CMat& xe, const CMat& ye) const;
  double lambda_eig(const CMat& xe, const CMat& ye) const;
  double skew_eig(const CMat& xe, const CMat& ye, const CMat& ze) const;
  double x_skew_eig(const CMat& xe, const CMat& ye, const CMat& ze,
                    const CMat& we) const;
  double xlnb_eig(const CMat& xe, const CMat& ye, const CMat& ze,
                  const CMat& we) const;
  double xlng_eig(const CMat& xe, const CMat& ye, const CMat& ze,
                  const CMat& we) const;

  GFunction g_;
  PositivePoint rho_;
  MonotoneMetric metric_;
  int n_;
  RVec lam_;
  std::vector<double> t1c_, t1h_;  // n^3 left divided differences
  std::vector<double> t2c_, t2h_;  // n^4 second left divided differences
  std::vector<double> tmc_, tmh_;  // n^4 mixed divided differences
  std::vector<double> cbar_;       // n^2 kernel values
  std::vector<double> stab_;       // n^3 metric-connection coefficients
  std::vector<CMat> frame_;        // lambda-orthonormal tangent frame

  size_t id3(int i, int j, int k) const {
    return (static_cast<size_t>(i) * n_ + j) * n_ + k;
  }
  size_t id4(int i, int j, int k, int l) const {
    return ((static_cast<size_t>(i) * n_ + j) * n_ + k) * n_ + l;
  }
};

SkewnessTensor skewness(const GFunction& g, const PositivePoint& rho);

CurvatureTensor curvature_p(const GFunction& g, double p,
                            const PositivePoint& rho, CurvatureRoute route);

/// kind: "g" | "metric" | "p" (uses p) | "alpha" (uses the g's own alpha).
ConnectionCoefficients connection_coefficients(const GFunction& g,
                                               const PositivePoint& rho,
                                               const std::string& kind,
                                               double p = 0.5);

}  // namespace qig
