#include "qig/alpha_geometry.hpp"

namespace qig {

namespace {

ScalarKernel embed_dd(double alpha) {
  return ScalarKernel::divided_difference(alpha_function(alpha));
}

}  // namespace

CMat alpha_embed(double alpha, const PositivePoint& rho) {
  return matrix_function(alpha_function(alpha), rho.spec());
}

CMat l_alpha_apply(double alpha, const PositivePoint& rho, const CMat& x) {
  return frechet1(alpha_function(alpha), rho.spec(), x);
}

CMat l_alpha_inverse(double alpha, const PositivePoint& rho, const CMat& y) {
  const ScalarKernel t = embed_dd(alpha);
  const SpectralDecomposition& s = rho.spec();
  const RVec& lam = s.eigenvalues;
  CMat yc = s.to_eigenbasis(y);
  for (Eigen::Index i = 0; i < yc.rows(); ++i)
    for (Eigen::Index j = 0; j < yc.cols(); ++j)
      yc(i, j) /= t.value(lam[i], lam[j]);
  return s.from_eigenbasis(yc);
}

CMat k_alpha_apply(double alpha, const MonotoneMetric& m,
                   const PositivePoint& rho, const CMat& y) {
  return l_alpha_inverse(alpha, rho,
                         j_apply(m, rho, l_alpha_inverse(alpha, rho, y)));
}

CMat nabla_alpha(double alpha, const PositivePoint& rho, const CMat& x,
                 const CMat& y) {
  return l_alpha_inverse(alpha, rho,
                         frechet2(alpha_function(alpha), rho.spec(), x, y));
}

CMat nabla_alpha_dual(double alpha, const MonotoneMetric& m,
                      const PositivePoint& rho, const CMat& x, const CMat& y) {
  // composite kernel of L_alpha^{-1} J: cbar / T_f, all in rho's eigenbasis
  const ScalarKernel t = embed_dd(alpha);
  const ScalarKernel lj = ScalarKernel::quotient(m.kernel(), t);
  CMat d = kernel_d_total(lj, rho.spec(), x, y);
  // (L_alpha^{-1} J)^{-1} = J^{-1} L_alpha has kernel T_f / cbar
  return apply_kernel(ScalarKernel::quotient(t, m.kernel()), rho.spec(), d);
}

CMat dual_torsion(double alpha, const MonotoneMetric& m,
                  const PositivePoint& rho, const CMat& x, const CMat& y) {
  const ScalarKernel t = embed_dd(alpha);
  const ScalarKernel lj = ScalarKernel::quotient(m.kernel(), t);
  CMat d = kernel_d_total(lj, rho.spec(), x, y) -
           kernel_d_total(lj, rho.spec(), y, x);
  return apply_kernel(ScalarKernel::quotient(t, m.kernel()), rho.spec(), d);
}

PositivePoint alpha_geodesic(double alpha, const PositivePoint& rho0,
                             const PositivePoint& rho1, double t) {
  CMat mid =
      (1.0 - t) * alpha_embed(alpha, rho0) + t * alpha_embed(alpha, rho1);
  SpectralDecomposition s = spectral_decompose(mid);
  return PositivePoint(matrix_function(alpha_function_inverse(alpha), s));
}

double metric_directional(const MonotoneMetric& m, const PositivePoint& rho,
                          const CMat& x, const CMat& y, const CMat& z) {
  CMat d = kernel_d_total(m.kernel(), rho.spec(), x, z);
  double scale =
      mat_scale(y) * mat_scale(d) * static_cast<double>(rho.dim()) + 1.0;
  return real_checked((y * d).trace(), scale);
}

}  // namespace qig
