#include "qig/g_geometry.hpp"

#include <cmath>

#include "qig/alpha_geometry.hpp"
#include "qig/divided_differences.hpp"
#include "qig/operator_calculus.hpp"
#include "qig/parallel.hpp"

namespace qig {

double entropy(const GFunction& g, const PositivePoint& rho,
               const PositivePoint& sigma) {
  if (rho.dim() != sigma.dim())
    throw DomainError("entropy: dimension mismatch");
  CMat delta = sigma.m() - rho.m();
  CMat kd = apply_kernel(g.kernel(), sigma.spec(), rho.spec(), delta);
  double scale =
      mat_scale(delta) * mat_scale(kd) * static_cast<double>(rho.dim()) + 1.0;
  double quad = real_checked((delta * kd).trace(), scale);
  double lin = g.a() * real_checked(delta.trace(), mat_scale(delta) + 1.0);
  return lin + quad;
}

double metric_from_g(const GFunction& g, const PositivePoint& rho,
                     const CMat& x, const CMat& y) {
  const ScalarKernel c = g.kernel();
  CMat cy = apply_kernel(c, rho.spec(), y);
  CMat cx = apply_kernel(c, rho.spec(), x);
  double scale =
      mat_scale(x) * mat_scale(cy) * static_cast<double>(rho.dim()) + 1.0;
  // each trace alone is complex; only the symmetrized sum is real
  return real_checked((x * cy).trace() + (y * cx).trace(), scale);
}

double conjugate_ode_residual(const GFunction& g, double u) {
  GFunction gh = g.transpose();
  double gbar = g.g(u) + gh.g(u);
  double gr = gh.g(u) - g.g(u);
  double grp = gh.g1(u) - g.g1(u);
  double a = g.a();
  return -g.alpha() * gbar - (2.0 * u * grp - gr + 2.0 * a * u + 2.0 * a);
}

double conjugate_ode_residual2(const GFunction& g, double u) {
  GFunction gh = g.transpose();
  double gbar = g.g(u) + gh.g(u);
  double a = g.a();
  return 0.5 * (1.0 + g.alpha()) * gbar -
         (g.g1(1.0 / u) + u * g.g1(u) - a * u - a);
}

double flat_ode_residual(const GFunction& g, double u) {
  GFunction gh = g.transpose();
  double gbar = g.g(u) + gh.g(u);
  double gbar1 = g.g1(u) + gh.g1(u);
  double gbar2 = g.g2(u) + gh.g2(u);
  double grp = gh.g1(u) - g.g1(u);
  double a = g.a();
  double alpha = g.alpha();
  return (alpha * alpha - 1.0) * gbar + gbar1 * (u - 1.0) -
         2.0 * gbar2 * u * (1.0 + u) + alpha * (grp + 2.0 * a) * (u - 1.0) +
         8.0;
}

double SkewnessTensor::max_abs() const {
  double m = 0.0;
  for (double v : ttilde) m = std::max(m, std::abs(v));
  return m;
}

double CurvatureTensor::max_abs() const {
  double m = 0.0;
  for (double v : r) m = std::max(m, std::abs(v));
  return m;
}

double ConnectionCoefficients::torsion_defect() const {
  double m = 0.0;
  for (size_t i = 0; i < gamma.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      m = std::max(m, mat_scale(gamma[i][j] - gamma[j][i]));
  return m;
}

GeometryContext::GeometryContext(const GFunction& g, const PositivePoint& rho)
    : g_(g),
      rho_(rho),
      metric_(MonotoneMetric::from_g(g)),
      n_(rho.dim()),
      lam_(rho.spec().eigenvalues) {
  const ScalarKernel c = g_.kernel();
  const ScalarKernel ch = g_.kernel_hat();
  const double scale = rho_.spec().eigenvalue_scale();

  t1c_.resize(static_cast<size_t>(n_) * n_ * n_);
  t1h_.resize(t1c_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        t1c_[id3(i, j, k)] = dd1(c, lam_[i], lam_[j], lam_[k], scale);
        t1h_[id3(i, j, k)] = dd1(ch, lam_[i], lam_[j], lam_[k], scale);
      }

  t2c_.resize(static_cast<size_t>(n_) * n_ * n_ * n_);
  t2h_.resize(t2c_.size());
  tmc_.resize(t2c_.size());
  tmh_.resize(t2c_.size());
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          t2c_[id4(i, j, k, l)] =
              dd2(c, lam_[i], lam_[j], lam_[k], lam_[l], scale);
          t2h_[id4(i, j, k, l)] =
              dd2(ch, lam_[i], lam_[j], lam_[k], lam_[l], scale);
          tmc_[id4(i, j, k, l)] =
              dd_mixed(c, lam_[i], lam_[j], lam_[k], lam_[l], scale);
          tmh_[id4(i, j, k, l)] =
              dd_mixed(ch, lam_[i], lam_[j], lam_[k], lam_[l], scale);
        }

  cbar_.resize(static_cast<size_t>(n_) * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      cbar_[static_cast<size_t>(i) * n_ + j] =
          c.value(lam_[i], lam_[j]) + ch.value(lam_[i], lam_[j]);

  // S(x,y|z) = [Tbar(x,z|y) + Tbar(y,z|x) - Tbar(x,y|z)] / (2 cbar(x,y))
  stab_.resize(t1c_.size());
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b)
      for (int i = 0; i < n_; ++i) {
        double txz_y = t1c_[id3(a, i, b)] + t1h_[id3(a, i, b)];
        double tyz_x = t1c_[id3(b, i, a)] + t1h_[id3(b, i, a)];
        double txy_z = t1c_[id3(a, b, i)] + t1h_[id3(a, b, i)];
        stab_[id3(a, b, i)] = (txz_y + tyz_x - txy_z) /
                              (2.0 * cbar_[static_cast<size_t>(a) * n_ + b]);
      }

  TangentBasis basis(rho_);
  frame_ = basis.orthonormal_frame(metric_);
}

Complex GeometryContext::p_sum(double wc, double wh, const CMat& a,
                               const CMat& b, const CMat& c) const {
  Complex acc = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        double t = wc * t1c_[id3(i, j, k)] + wh * t1h_[id3(i, j, k)];
        acc += t * a(k, i) * b(i, j) * c(j, k);
      }
  return acc;
}

Complex GeometryContext::xp_sum(double wc, double wh, const CMat& x,
                                const CMat& a, const CMat& b,
                                const CMat& c) const {
  Complex acc = 0.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k)
        for (int l = 0; l < n_; ++l) {
          double t2 = wc * t2c_[id4(i, j, k, l)] + wh * t2h_[id4(i, j, k, l)];
          acc += t2 * (x(i, j) * b(j, k) + b(i, j) * x(j, k)) * c(k, l) *
                 a(l, i);
          double tm = wc * tmc_[id4(i, j, k, l)] + wh * tmh_[id4(i, j, k, l)];
          acc += tm * b(i, j) * c(j, l) * x(l, k) * a(k, i);
        }
  return acc;
}

double GeometryContext::lambda_eig(const CMat& xe, const CMat& ye) const {
  Complex acc = 0.0;
  double mag = 1.0;
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Complex term =
          cbar_[static_cast<size_t>(i) * n_ + j] * std::conj(xe(i, j)) *
          ye(i, j);
      acc += term;
      mag += std::abs(term);
    }
  return real_checked(acc, mag);
}

double GeometryContext::lambda(const CMat& x, const CMat& y) const {
  return lambda_eig(to_eig(x), to_eig(y));
}

Complex GeometryContext::q_tensor(const CMat& x, const CMat& y,
                                  const CMat& z) const {
  return p_sum(-1.0, 1.0, to_eig(x), to_eig(y), to_eig(z));
}

double GeometryContext::skew_eig(const CMat& xe, const CMat& ye,
                                 const CMat& ze) const {
  Complex q = p_sum(-1.0, 1.0, xe, ye, ze) + p_sum(-1.0, 1.0, ye, xe, ze) +
              p_sum(-1.0, 1.0, xe, ze, ye);
  return 2.0 * q.real();
}

double GeometryContext::skew(const CMat& x, const CMat& y,
                             const CMat& z) const {
  return skew_eig(to_eig(x), to_eig(y), to_eig(z));
}

CMat GeometryContext::d_raised_eig(const CMat& xe, const CMat& ye) const {
  // Dt(X,Y,Z) = Tr[(S + S*) Z] for all Hermitian Z, so J(D) = S + S*.
  CMat s = CMat::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        double r = t1h_[id3(i, j, k)] - t1c_[id3(i, j, k)];
        s(k, j) += r * (xe(k, i) * ye(i, j) + ye(k, i) * xe(i, j));
        s(j, i) += r * xe(k, i) * ye(j, k);
      }
  CMat jd = s + s.adjoint();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      jd(i, j) /= cbar_[static_cast<size_t>(i) * n_ + j];
  return jd;
}

CMat GeometryContext::d_raised(const CMat& x, const CMat& y) const {
  return from_eig(d_raised_eig(to_eig(x), to_eig(y)));
}

CMat GeometryContext::nabla_bar_eig(const CMat& xe, const CMat& ye) const {
  CMat out = CMat::Zero(n_, n_);
  for (int a = 0; a < n_; ++a)
    for (int b = 0; b < n_; ++b) {
      Complex acc = 0.0;
      for (int i = 0; i < n_; ++i)
        acc += stab_[id3(a, b, i)] * (xe(a, i) * ye(i, b) + ye(a, i) * xe(i, b));
      out(a, b) = acc;
    }
  return out;
}

CMat GeometryContext::nabla_bar(const CMat& x, const CMat& y) const {
  return from_eig(nabla_bar_eig(to_eig(x), to_eig(y)));
}

CMat GeometryContext::nabla_g_eig(const CMat& xe, const CMat& ye) const {
  // lambda(nabla_X Y, Z) = 2Re sum { T_chat(i,j|k)(x_ki y_ij + y_ki x_ij) z_jk
  //                                 - T_c(i,j|k) x_ki y_jk z_ij }
  CMat s = CMat::Zero(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      for (int k = 0; k < n_; ++k) {
        s(k, j) +=
            t1h_[id3(i, j, k)] * (xe(k, i) * ye(i, j) + ye(k, i) * xe(i, j));
        s(j, i) -= t1c_[id3(i, j, k)] * xe(k, i) * ye(j, k);
      }
  CMat jn = s + s.adjoint();
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      jn(i, j) /= cbar_[static_cast<size_t>(i) * n_ + j];
  return jn;
}

CMat GeometryContext::nabla_g(const CMat& x, const CMat& y) const {
  return from_eig(nabla_g_eig(to_eig(x), to_eig(y)));
}

CMat GeometryContext::nabla_p(double p, const CMat& x, const CMat& y) const {
  CMat xe = to_eig(x), ye = to_eig(y);
  return from_eig(nabla_bar_eig(xe, ye) +
                  0.5 * (2.0 * p - 1.0) * d_raised_eig(xe, ye));
}

double GeometryContext::x_lambda(const CMat& x, const CMat& y,
                                 const CMat& z) const {
  CMat xe = to_eig(x), ye = to_eig(y), ze = to_eig(z);
  Complex acc = p_sum(1.0, 1.0, ye, xe, ze) + p_sum(1.0, 1.0, ze, xe, ye);
  double mag = mat_scale(xe) * mat_scale(ye) * mat_scale(ze) + 1.0;
  return real_checked(acc, mag);
}

double GeometryContext::xlnb_eig(const CMat& xe, const CMat& ye,
                                 const CMat& ze, const CMat& we) const {
  Complex acc = xp_sum(1.0, 1.0, xe, ye, ze, we) +
                xp_sum(1.0, 1.0, xe, ze, ye, we) -
                xp_sum(1.0, 1.0, xe, ye, we, ze);
  return acc.real();
}

double GeometryContext::x_lambda_nabla_bar(const CMat& x, const CMat& y,
                                           const CMat& z,
                                           const CMat& w) const {
  return xlnb_eig(to_eig(x), to_eig(y), to_eig(z), to_eig(w));
}

double GeometryContext::xlng_eig(const CMat& xe, const CMat& ye,
                                 const CMat& ze, const CMat& we) const {
  Complex acc = xp_sum(0.0, 1.0, xe, ye, ze, we) +
                xp_sum(0.0, 1.0, xe, ze, ye, we) -
                xp_sum(1.0, 0.0, xe, ye, we, ze);
  return 2.0 * acc.real();
}

double GeometryContext::x_lambda_nabla_g(const CMat& x, const CMat& y,
                                         const CMat& z, const CMat& w) const {
  return xlng_eig(to_eig(x), to_eig(y), to_eig(z), to_eig(w));
}

double GeometryContext::x_skew_eig(const CMat& xe, const CMat& ye,
                                   const CMat& ze, const CMat& we) const {
  Complex acc = xp_sum(-1.0, 1.0, xe, ye, ze, we) +
                xp_sum(-1.0, 1.0, xe, ze, ye, we) +
                xp_sum(-1.0, 1.0, xe, ye, we, ze);
  return 2.0 * acc.real();
}

double GeometryContext::x_skew(const CMat& x, const CMat& y, const CMat& z,
                               const CMat& w) const {
  return x_skew_eig(to_eig(x), to_eig(y), to_eig(z), to_eig(w));
}

double GeometryContext::skew_covariant(const CMat& x, const CMat& y,
                                       const CMat& z, const CMat& w) const {
  CMat xe = to_eig(x), ye = to_eig(y), ze = to_eig(z), we = to_eig(w);
  return x_skew_eig(xe, ye, ze, we) -
         skew_eig(nabla_bar_eig(xe, ye), ze, we) -
         skew_eig(ye, nabla_bar_eig(xe, ze), we) -
         skew_eig(ye, ze, nabla_bar_eig(xe, we));
}

double GeometryContext::curvature_bar(const CMat& x, const CMat& y,
                                      const CMat& z, const CMat& w) const {
  CMat xe = to_eig(x), ye = to_eig(y), ze = to_eig(z), we = to_eig(w);
  return xlnb_eig(xe, ye, ze, we) - xlnb_eig(ye, xe, ze, we) +
         lambda_eig(nabla_bar_eig(xe, ze), nabla_bar_eig(ye, we)) -
         lambda_eig(nabla_bar_eig(ye, ze), nabla_bar_eig(xe, we));
}

double GeometryContext::curvature_p_component(double p, const CMat& x,
                                              const CMat& y, const CMat& z,
                                              const CMat& w) const {
  CMat xe = to_eig(x), ye = to_eig(y), ze = to_eig(z), we = to_eig(w);
  double rbar = xlnb_eig(xe, ye, ze, we) - xlnb_eig(ye, xe, ze, we) +
                lambda_eig(nabla_bar_eig(xe, ze), nabla_bar_eig(ye, we)) -
                lambda_eig(nabla_bar_eig(ye, ze), nabla_bar_eig(xe, we));
  double f_xy = skew_covariant(x, y, z, w);
  double f_yx = skew_covariant(y, x, z, w);
  double second = 0.0;
  for (const CMat& b : frame_) {
    CMat be = to_eig(b);
    second += skew_eig(xe, we, be) * skew_eig(ye, ze, be) -
              skew_eig(xe, ze, be) * skew_eig(ye, we, be);
  }
  double q = 1.0 - 2.0 * p;
  return rbar + 0.5 * q * (f_yx - f_xy) + 0.25 * q * q * second;
}

double GeometryContext::conjugate_residual(const CMat& x, const CMat& y,
                                           const CMat& z, const CMat& w) const {
  CMat xe = to_eig(x), ye = to_eig(y), ze = to_eig(z), we = to_eig(w);
  return x_skew_eig(xe, ye, ze, we) - x_skew_eig(ye, xe, ze, we) +
         skew_eig(xe, nabla_bar_eig(ye, ze), we) +
         skew_eig(xe, ze, nabla_bar_eig(ye, we)) -
         skew_eig(ye, nabla_bar_eig(xe, ze), we) -
         skew_eig(ye, ze, nabla_bar_eig(xe, we));
}

SkewnessTensor skewness(const GFunction& g, const PositivePoint& rho) {
  GeometryContext ctx(g, rho);
  const auto& frame = ctx.frame();
  int nb = static_cast<int>(frame.size());
  std::vector<CMat> fe(nb);
  for (int m = 0; m < nb; ++m) fe[m] = ctx.to_eig(frame[m]);

  SkewnessTensor out;
  out.size = nb;
  out.ttilde.assign(static_cast<size_t>(nb) * nb * nb, 0.0);
  out.raised.assign(nb, std::vector<CMat>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      out.raised[i][j] = ctx.from_eig(ctx.d_raised_eig(fe[i], fe[j]));
      for (int k = 0; k < nb; ++k)
        out.ttilde[(static_cast<size_t>(i) * nb + j) * nb + k] =
            ctx.skew_eig(fe[i], fe[j], fe[k]);
    }
  return out;
}

CurvatureTensor curvature_p(const GFunction& g, double p,
                            const PositivePoint& rho, CurvatureRoute route) {
  GeometryContext ctx(g, rho);
  const auto& frame = ctx.frame();
  const int nb = static_cast<int>(frame.size());
  std::vector<CMat> fe(nb);
  for (int m = 0; m < nb; ++m) fe[m] = ctx.to_eig(frame[m]);

  CurvatureTensor out;
  out.size = nb;
  out.r.assign(static_cast<size_t>(nb) * nb * nb * nb, 0.0);
  auto slot = [nb](int i, int j, int k, int l) {
    return ((static_cast<size_t>(i) * nb + j) * nb + k) * nb + l;
  };

  if (route == CurvatureRoute::kTensor) {
    out.tag = "tensor:p=" + std::to_string(p);
    // pairwise metric connection and skewness tables
    std::vector<std::vector<CMat>> nb_pair(nb, std::vector<CMat>(nb));
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        nb_pair[i][j] = ctx.nabla_bar_eig(fe[i], fe[j]);
    std::vector<double> st(static_cast<size_t>(nb) * nb * nb);
    for (int i = 0; i < nb; ++i)
      for (int j = 0; j < nb; ++j)
        for (int m = 0; m < nb; ++m)
          st[(static_cast<size_t>(i) * nb + j) * nb + m] =
              ctx.skew_eig(fe[i], fe[j], fe[m]);
    auto st_at = [&](int i, int j, int m) {
      return st[(static_cast<size_t>(i) * nb + j) * nb + m];
    };
    auto f_at = [&](int i, int j, int k, int l) {
      return ctx.x_skew_eig(fe[i], fe[j], fe[k], fe[l]) -
             ctx.skew_eig(nb_pair[i][j], fe[k], fe[l]) -
             ctx.skew_eig(fe[j], nb_pair[i][k], fe[l]) -
             ctx.skew_eig(fe[j], fe[k], nb_pair[i][l]);
    };
    const double q = 1.0 - 2.0 * p;
    parallel_for(0, nb * nb, [&](int ij) {
      int i = ij / nb, j = ij % nb;
      for (int k = 0; k < nb; ++k)
        for (int l = 0; l < nb; ++l) {
          double rbar = ctx.xlnb_eig(fe[i], fe[j], fe[k], fe[l]) -
                        ctx.xlnb_eig(fe[j], fe[i], fe[k], fe[l]) +
                        ctx.lambda_eig(nb_pair[i][k], nb_pair[j][l]) -
                        ctx.lambda_eig(nb_pair[j][k], nb_pair[i][l]);
          double second = 0.0;
          for (int m = 0; m < nb; ++m)
            second += st_at(i, l, m) * st_at(j, k, m) -
                      st_at(i, k, m) * st_at(j, l, m);
          out.r[slot(i, j, k, l)] =
              rbar + 0.5 * q * (f_at(j, i, k, l) - f_at(i, j, k, l)) +
              0.25 * q * q * second;
        }
    });
    return out;
  }

  out.tag = "direct:p=" + std::to_string(p);
  GeometryContext up(g.mix(p), rho);
  GeometryContext dn(g.mix(1.0 - p), rho);
  std::vector<std::vector<CMat>> v(nb, std::vector<CMat>(nb)),
      w(nb, std::vector<CMat>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      v[i][j] = up.nabla_g_eig(fe[i], fe[j]);
      w[i][j] = dn.nabla_g_eig(fe[i], fe[j]);
    }
  parallel_for(0, nb * nb, [&](int ij) {
    int i = ij / nb, j = ij % nb;
    for (int k = 0; k < nb; ++k)
      for (int l = 0; l < nb; ++l)
        out.r[slot(i, j, k, l)] = up.xlng_eig(fe[i], fe[j], fe[k], fe[l]) -
                                  up.xlng_eig(fe[j], fe[i], fe[k], fe[l]) +
                                  ctx.lambda_eig(v[i][k], w[j][l]) -
                                  ctx.lambda_eig(v[j][k], w[i][l]);
  });
  return out;
}

ConnectionCoefficients connection_coefficients(const GFunction& g,
                                               const PositivePoint& rho,
                                               const std::string& kind,
                                               double p) {
  GeometryContext ctx(g, rho);
  ConnectionCoefficients out;
  out.frame = ctx.frame();
  int nb = static_cast<int>(out.frame.size());
  out.gamma.assign(nb, std::vector<CMat>(nb));
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) {
      const CMat& x = out.frame[i];
      const CMat& y = out.frame[j];
      if (kind == "g") {
        out.gamma[i][j] = ctx.nabla_g(x, y);
      } else if (kind == "metric") {
        out.gamma[i][j] = ctx.nabla_bar(x, y);
      } else if (kind == "p") {
        out.gamma[i][j] = ctx.nabla_p(p, x, y);
      } else if (kind == "alpha") {
        out.gamma[i][j] = nabla_alpha(g.alpha(), rho, x, y);
      } else {
        throw DomainError("connection_coefficients: unknown kind " + kind);
      }
    }
  out.tag = kind == "p" ? "p:" + std::to_string(p) : kind;
  return out;
}

}  // namespace qig
