#include <cmath>
#include <doctest.h>

#include "qig/alpha_geometry.hpp"
#include "qig/g_geometry.hpp"
#include "qig/operator_calculus.hpp"
#include "qig/rng.hpp"

#include "test_util.hpp"

using namespace qig;
using qig::testutil::mat_err;
using qig::testutil::rel_err;

namespace {

PositivePoint diag_point(std::initializer_list<double> d) {
  CMat m = CMat::Zero(static_cast<int>(d.size()), static_cast<int>(d.size()));
  int i = 0;
  for (double v : d) m(i, i) = v, ++i;
  return PositivePoint(m);
}

CMat offdiag2() {
  CMat m = CMat::Zero(2, 2);
  m(0, 1) = 1.0;
  m(1, 0) = 1.0;
  return m;
}

CMat e11() {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = 1.0;
  return m;
}

// overlap-sum route: H = sum_ij g(mu_i / lam_j) lam_j |<phi_i|psi_j>|^2
double entropy_overlap(const GFunction& g, const PositivePoint& rho,
                       const PositivePoint& sigma) {
  const auto& sr = rho.spec();
  const auto& ss = sigma.spec();
  int n = rho.dim();
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Complex ov =
          (ss.eigenvectors.col(i).adjoint() * sr.eigenvectors.col(j))(0, 0);
      acc += g.g(ss.eigenvalues[i] / sr.eigenvalues[j]) * sr.eigenvalues[j] *
             std::norm(ov);
    }
  return acc;
}

// test-local left-slot difference quotient, valid off near-coincident nodes
double quot(const ScalarKernel& k, double x, double y, double z) {
  if (std::abs(x - y) > 1e-7 * (std::abs(x) + std::abs(y)))
    return (k.value(x, z) - k.value(y, z)) / (x - y);
  return k.dx(0.5 * (x + y), z);
}

}  // namespace

TEST_SUITE_BEGIN("g_geometry");

TEST_CASE("relative g-entropy agrees with the overlap-sum route") {
  Rng rng(401);
  std::vector<GFunction> gens = {GFunction::alpha_family(0.8),
                                 GFunction::extreme(2.0),
                                 GFunction::alpha_family(1.5).mix(0.3)};
  for (int n : {2, 3, 4})
    for (int rep = 0; rep < 3; ++rep) {
      PositivePoint rho(random_positive(rng, n));
      PositivePoint sigma(random_positive(rng, n));
      for (const auto& g : gens) {
        double via_kernel = entropy(g, rho, sigma);
        double via_overlap = entropy_overlap(g, rho, sigma);
        CHECK(rel_err(via_kernel, via_overlap) < 1e-9);
      }
    }
}

TEST_CASE("relative g-entropy special values") {
  GFunction g1 = GFunction::alpha_family(1.0);    // u log u
  GFunction gm1 = GFunction::alpha_family(-1.0);  // -log u

  SUBCASE("vanishes at equal arguments") {
    Rng rng(402);
    PositivePoint rho(random_positive(rng, 3));
    CHECK(std::abs(entropy(g1, rho, rho)) < 1e-12);
    CHECK(std::abs(entropy(GFunction::extreme(2.0), rho, rho)) < 1e-12);
  }

  SUBCASE("commuting case reduces to the classical f-divergence") {
    PositivePoint rho = diag_point({0.3, 0.7});
    PositivePoint sigma = diag_point({0.6, 0.4});
    double kl_sr = 0.6 * std::log(0.6 / 0.3) + 0.4 * std::log(0.4 / 0.7);
    double kl_rs = 0.3 * std::log(0.3 / 0.6) + 0.7 * std::log(0.7 / 0.4);
    CHECK(entropy(g1, rho, sigma) == doctest::Approx(kl_sr).epsilon(1e-12));
    CHECK(entropy(gm1, rho, sigma) == doctest::Approx(kl_rs).epsilon(1e-12));
    GFunction gs = GFunction::extreme(1.3);
    double classical = 0.3 * gs.g(0.6 / 0.3) + 0.7 * gs.g(0.4 / 0.7);
    CHECK(entropy(gs, rho, sigma) ==
          doctest::Approx(classical).epsilon(1e-12));
  }

  SUBCASE("positively homogeneous of degree one") {
    Rng rng(403);
    PositivePoint rho(random_positive(rng, 3));
    PositivePoint sigma(random_positive(rng, 3));
    double h = entropy(g1, rho, sigma);
    PositivePoint rho2(2.0 * rho.m());
    PositivePoint sigma2(2.0 * sigma.m());
    CHECK(entropy(g1, rho2, sigma2) == doctest::Approx(2.0 * h).epsilon(1e-12));
  }

  SUBCASE("dimension mismatch is rejected") {
    Rng rng(404);
    PositivePoint rho(random_positive(rng, 2));
    PositivePoint sigma(random_positive(rng, 3));
    CHECK_THROWS_AS(entropy(g1, rho, sigma), DomainError);
  }
}

TEST_CASE("entropy Hessian at coincidence recovers the metric") {
  Rng rng(405);
  for (const auto& g :
       {GFunction::alpha_family(0.8), GFunction::extreme(2.0)}) {
    PositivePoint rho(random_positive(rng, 3));
    CMat x = random_hermitian(rng, 3);
    GeometryContext ctx(g, rho);
    double lam = ctx.lambda(x, x);
    double t = 1e-4;
    PositivePoint plus(rho.m() + t * x);
    PositivePoint minus(rho.m() - t * x);
    double hess = (entropy(g, rho, plus) + entropy(g, rho, minus)) / (t * t);
    CHECK(rel_err(hess, lam) < 1e-6);
  }
}

TEST_CASE("quadratic form from g matches the induced monotone metric") {
  Rng rng(406);
  std::vector<GFunction> gens = {GFunction::alpha_family(-0.7),
                                 GFunction::alpha_family(1.0),
                                 GFunction::extreme(2.0),
                                 GFunction::alpha_family(2.0).mix(0.25)};
  for (const auto& g : gens) {
    MonotoneMetric m = MonotoneMetric::from_g(g);
    GFunction gh = g.transpose();
    for (int rep = 0; rep < 5; ++rep) {
      int n = 2 + rep % 3;
      PositivePoint rho(random_positive(rng, n));
      CMat x = random_hermitian(rng, n);
      CMat y = random_hermitian(rng, n);
      double direct = metric_from_g(g, rho, x, y);
      CHECK(rel_err(direct, metric_eval(m, rho, x, y)) < 1e-10);
      // transposed generator induces the same metric
      CHECK(rel_err(direct, metric_from_g(gh, rho, x, y)) < 1e-10);
    }
  }
}

TEST_CASE("cyclic kernel-derivative sum matches independent routes") {
  Rng rng(407);
  GFunction g = GFunction::extreme(2.0);
  ScalarKernel cr = g.kernel_skew();

  SUBCASE("finite-difference route through the two-point kernel") {
    for (int n : {2, 3}) {
      PositivePoint rho(random_positive(rng, n));
      CMat x = random_hermitian(rng, n);
      CMat y = random_hermitian(rng, n);
      CMat z = random_hermitian(rng, n);
      GeometryContext ctx(g, rho);
      Complex q = ctx.q_tensor(x, y, z);
      double h = 1e-5;
      auto val = [&](double s) -> Complex {
        PositivePoint shifted(rho.m() + s * y);
        CMat kz = apply_kernel(cr, shifted.spec(), rho.spec(), z);
        return (x * kz).trace();
      };
      Complex fd = (val(h) - val(-h)) / (2.0 * h);
      CHECK(std::abs(q - fd) / (std::abs(q) + 1.0) < 1e-7);
    }
  }

  SUBCASE("brute-force eigenbasis triple sum") {
    PositivePoint rho(random_positive(rng, 3));
    CMat x = random_hermitian(rng, 3);
    CMat y = random_hermitian(rng, 3);
    CMat z = random_hermitian(rng, 3);
    GeometryContext ctx(g, rho);
    const auto& sp = rho.spec();
    CMat xe = sp.to_eigenbasis(x), ye = sp.to_eigenbasis(y),
         ze = sp.to_eigenbasis(z);
    Complex brute = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k)
          brute += quot(cr, sp.eigenvalues[i], sp.eigenvalues[j],
                        sp.eigenvalues[k]) *
                   xe(k, i) * ye(i, j) * ze(j, k);
    CHECK(std::abs(ctx.q_tensor(x, y, z) - brute) < 1e-9);
  }

  SUBCASE("symmetric generators have a vanishing skew kernel") {
    PositivePoint rho(random_positive(rng, 3));
    CMat x = random_hermitian(rng, 3);
    CMat y = random_hermitian(rng, 3);
    CMat z = random_hermitian(rng, 3);
    GeometryContext ctx(GFunction::alpha_family(0.0), rho);
    CHECK(std::abs(ctx.q_tensor(x, y, z)) < 1e-12);
  }
}

TEST_CASE("skewness form is totally symmetric and raised by the metric") {
  Rng rng(408);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  CMat z = random_hermitian(rng, 3);
  GFunction g = GFunction::alpha_family(1.3);
  GeometryContext ctx(g, rho);

  double s = ctx.skew(x, y, z);
  CHECK(std::abs(s - ctx.skew(y, x, z)) < 1e-12);
  CHECK(std::abs(s - ctx.skew(z, y, x)) < 1e-12);
  CHECK(std::abs(s - ctx.skew(x, z, y)) < 1e-12);
  CHECK(std::abs(s - ctx.skew(y, z, x)) < 1e-12);
  CHECK(std::abs(s - ctx.skew(z, x, y)) < 1e-12);

  // d_raised is the metric dual: lambda(D(X,Y), Z) = skew(X,Y,Z)
  CHECK(std::abs(ctx.lambda(ctx.d_raised(x, y), z) - s) < 1e-10);

  // D is the gap between the connection of g and of its transpose
  GeometryContext ctxh(g.transpose(), rho);
  CHECK(mat_err(ctx.d_raised(x, y), ctx.nabla_g(x, y) - ctxh.nabla_g(x, y)) <
        1e-12);

  // symmetric generator: no skewness
  GeometryContext ctx0(GFunction::alpha_family(0.0), rho);
  CHECK(std::abs(ctx0.skew(x, y, z)) < 1e-12);
  CHECK(mat_err(ctx0.d_raised(x, y), CMat::Zero(3, 3)) < 1e-12);

  // log-family witness at a fixed two-level point
  GeometryContext cb(GFunction::alpha_family(1.0), diag_point({1.0, 2.0}));
  CHECK(std::abs(cb.skew(e11(), offdiag2(), offdiag2())) > 0.1);
}

TEST_CASE("skewness tensor struct is consistent with the context") {
  Rng rng(409);
  PositivePoint rho(random_positive(rng, 2));
  GFunction g = GFunction::extreme(2.0);
  SkewnessTensor st = skewness(g, rho);
  GeometryContext ctx(g, rho);
  const auto& fr = ctx.frame();
  REQUIRE(st.size == static_cast<int>(fr.size()));
  REQUIRE(st.size == 4);
  for (int i = 0; i < st.size; ++i)
    for (int j = 0; j < st.size; ++j) {
      CHECK(mat_err(st.raised[i][j], ctx.d_raised(fr[i], fr[j])) < 1e-13);
      for (int k = 0; k < st.size; ++k) {
        CHECK(std::abs(st.at(i, j, k) - ctx.skew(fr[i], fr[j], fr[k])) <
              1e-13);
        CHECK(std::abs(ctx.lambda(st.raised[i][j], fr[k]) - st.at(i, j, k)) <
              1e-11);
        CHECK(std::abs(st.at(i, j, k) - st.at(j, i, k)) < 1e-12);
        CHECK(std::abs(st.at(i, j, k) - st.at(k, j, i)) < 1e-12);
      }
    }
  CHECK(st.max_abs() > 1e-3);
}

TEST_CASE("metric connection is compatible, torsion-free, and averages the "
          "dual pair") {
  Rng rng(410);
  GFunction g = GFunction::alpha_family(0.8);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  CMat z = random_hermitian(rng, 3);
  GeometryContext ctx(g, rho);
  GeometryContext ctxh(g.transpose(), rho);

  double xl = ctx.x_lambda(x, y, z);
  double scale = std::abs(xl) + 1.0;
  CHECK(std::abs(xl - ctx.lambda(ctx.nabla_bar(x, y), z) -
                 ctx.lambda(y, ctx.nabla_bar(x, z))) /
            scale <
        1e-9);
  CHECK(mat_err(ctx.nabla_bar(x, y), ctx.nabla_bar(y, x)) < 1e-13);
  CHECK(mat_err(ctx.nabla_bar(x, y),
                0.5 * (ctx.nabla_g(x, y) + ctxh.nabla_g(x, y))) < 1e-12);

  // at a multiple of the identity: closed form -(XY + YX)/(4c)
  double c = 1.7;
  PositivePoint scal(c * CMat::Identity(3, 3));
  GeometryContext ctxs(g, scal);
  CMat want = -(x * y + y * x) / (4.0 * c);
  CHECK(mat_err(ctxs.nabla_bar(x, y), want) < 1e-12);
}

TEST_CASE("connection from g matches the power-family embedding route") {
  Rng rng(411);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  for (double alpha : {-2.0, -1.0, 0.0, 0.7, 1.0, 2.5}) {
    GeometryContext ctx(GFunction::alpha_family(alpha), rho);
    CHECK(mat_err(ctx.nabla_g(x, y), nabla_alpha(alpha, rho, x, y)) < 1e-10);
  }

  SUBCASE("classical restriction on commuting diagonals") {
    PositivePoint rho3 = diag_point({0.5, 1.0, 2.0});
    CMat dx = CMat::Zero(3, 3), dy = CMat::Zero(3, 3);
    dx.diagonal() << 0.3, -0.2, 0.9;
    dy.diagonal() << -1.1, 0.4, 0.6;
    double alpha = 1.7;
    GeometryContext ctx(GFunction::alpha_family(alpha), rho3);
    CMat got = ctx.nabla_g(dx, dy);
    for (int i = 0; i < 3; ++i) {
      double want = -0.5 * (1.0 + alpha) * dx(i, i).real() * dy(i, i).real() /
                    rho3.spec().eigenvalues[i];
      CHECK(std::abs(got(i, i).real() - want) < 1e-11);
    }
  }
}

TEST_CASE("torsion-free connections from asymmetric generators") {
  Rng rng(412);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  for (const auto& g : {GFunction::extreme(2.0), GFunction::alpha_family(1.0),
                        GFunction::alpha_family(-2.5)}) {
    GeometryContext ctx(g, rho);
    CHECK(mat_err(ctx.nabla_g(x, y), ctx.nabla_g(y, x)) < 1e-13);
    CHECK(mat_err(ctx.nabla_p(0.3, x, y), ctx.nabla_p(0.3, y, x)) < 1e-13);
  }
}

TEST_CASE("interpolating connections match the mixed generator") {
  Rng rng(413);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  GFunction g = GFunction::extreme(2.0);
  GeometryContext ctx(g, rho);
  for (double p : {0.0, 0.25, 0.5, 0.8, 1.0}) {
    GeometryContext ctxp(g.mix(p), rho);
    CHECK(mat_err(ctx.nabla_p(p, x, y), ctxp.nabla_g(x, y)) < 1e-12);
  }
  // endpoints: p=1 is the g-connection, p=0 its transpose-partner
  GeometryContext ctxh(g.transpose(), rho);
  CHECK(mat_err(ctx.nabla_p(1.0, x, y), ctx.nabla_g(x, y)) < 1e-13);
  CHECK(mat_err(ctx.nabla_p(0.0, x, y), ctxh.nabla_g(x, y)) < 1e-13);
  CHECK(mat_err(ctx.nabla_p(0.5, x, y), ctx.nabla_bar(x, y)) < 1e-13);
}

TEST_CASE("dual pair splits the derivative of the metric") {
  Rng rng(414);
  std::vector<GFunction> gens = {
      GFunction::alpha_family(0.5), GFunction::alpha_family(-1.0),
      GFunction::extreme(2.0), GFunction::alpha_family(2.0).mix(0.3)};
  for (int n : {2, 3})
    for (const auto& g : gens)
      for (int rep = 0; rep < 3; ++rep) {
        PositivePoint rho(random_positive(rng, n));
        CMat x = random_hermitian(rng, n);
        CMat y = random_hermitian(rng, n);
        CMat z = random_hermitian(rng, n);
        GeometryContext ctx(g, rho);
        GeometryContext ctxh(g.transpose(), rho);
        double xl = ctx.x_lambda(x, y, z);
        double resid = xl - ctx.lambda(ctx.nabla_g(x, y), z) -
                       ctx.lambda(y, ctxh.nabla_g(x, z));
        CHECK(std::abs(resid) / (std::abs(xl) + 1.0) < 1e-9);
        // general p against its conjugate exponent
        double p = 0.3;
        double residp = xl - ctx.lambda(ctx.nabla_p(p, x, y), z) -
                        ctx.lambda(y, ctx.nabla_p(1.0 - p, x, z));
        CHECK(std::abs(residp) / (std::abs(xl) + 1.0) < 1e-9);
      }
}

TEST_CASE("metric derivative agrees with the operator route and finite "
          "differences") {
  Rng rng(415);
  GFunction g = GFunction::alpha_family(0.8);
  MonotoneMetric m = MonotoneMetric::from_g(g);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  CMat z = random_hermitian(rng, 3);
  GeometryContext ctx(g, rho);
  double xl = ctx.x_lambda(x, y, z);
  CHECK(rel_err(xl, metric_directional(m, rho, x, y, z)) < 1e-10);
  double h = 1e-5;
  auto lam_at = [&](double t) {
    GeometryContext c2(g, PositivePoint(rho.m() + t * x));
    return c2.lambda(y, z);
  };
  double fd = (lam_at(h) - lam_at(-h)) / (2.0 * h);
  CHECK(std::abs(xl - fd) / (std::abs(xl) + 1.0) < 1e-7);
}

TEST_CASE("directional derivatives of connection pairings and skewness match "
          "finite differences") {
  Rng rng(416);
  GFunction g = GFunction::extreme(2.0);
  PositivePoint rho(random_positive(rng, 3));
  CMat x = random_hermitian(rng, 3);
  CMat y = random_hermitian(rng, 3);
  CMat z = random_hermitian(rng, 3);
  CMat w = random_hermitian(rng, 3);
  GeometryContext ctx(g, rho);
  double h = 1e-5;

  auto fd = [&](auto&& f) {
    GeometryContext cp(g, PositivePoint(rho.m() + h * x));
    GeometryContext cm(g, PositivePoint(rho.m() - h * x));
    return (f(cp) - f(cm)) / (2.0 * h);
  };

  double lnb = ctx.x_lambda_nabla_bar(x, y, z, w);
  double lnb_fd = fd([&](const GeometryContext& c) {
    return c.lambda(c.nabla_bar(y, z), w);
  });
  CHECK(std::abs(lnb - lnb_fd) / (std::abs(lnb) + 1.0) < 1e-6);

  double lng = ctx.x_lambda_nabla_g(x, y, z, w);
  double lng_fd = fd([&](const GeometryContext& c) {
    return c.lambda(c.nabla_g(y, z), w);
  });
  CHECK(std::abs(lng - lng_fd) / (std::abs(lng) + 1.0) < 1e-6);

  double xs = ctx.x_skew(x, y, z, w);
  double xs_fd = fd([&](const GeometryContext& c) { return c.skew(y, z, w); });
  CHECK(std::abs(xs - xs_fd) / (std::abs(xs) + 1.0) < 1e-6);
}

TEST_CASE("conjugate-symmetry residual separates mixed power generators "
          "from the rest") {
  Rng rng(417);
  SUBCASE("symmetrized power mixtures pass") {
    for (double alpha : {0.5, 2.0})
      for (double p : {0.0, 0.3, 0.5}) {
        GFunction g = GFunction::alpha_family(alpha).mix(p);
        PositivePoint rho(random_positive(rng, 3));
        CMat x = random_hermitian(rng, 3);
        CMat y = random_hermitian(rng, 3);
        CMat z = random_hermitian(rng, 3);
        CMat w = random_hermitian(rng, 3);
        GeometryContext ctx(g, rho);
        CHECK(std::abs(ctx.conjugate_residual(x, y, z, w)) < 1e-10);
      }
  }
  SUBCASE("asymmetric non-power generator fails on a fixed witness") {
    PositivePoint rho = diag_point({1.0, 2.0});
    GeometryContext ctx(GFunction::extreme(2.0), rho);
    CHECK(std::abs(ctx.conjugate_residual(e11(), offdiag2(), e11(),
                                          offdiag2())) > 1e-5);
  }
  SUBCASE("symmetric generators are trivially conjugate symmetric") {
    PositivePoint rho(random_positive(rng, 3));
    CMat x = random_hermitian(rng, 3);
    CMat y = random_hermitian(rng, 3);
    CMat z = random_hermitian(rng, 3);
    CMat w = random_hermitian(rng, 3);
    GeometryContext ctx(GFunction::extreme(2.0).mix(0.5), rho);
    CHECK(std::abs(ctx.conjugate_residual(x, y, z, w)) < 1e-12);
  }
}

TEST_CASE("generator differential equations") {
  SUBCASE("pinned residual values") {
    GFunction gs = GFunction::extreme(2.0);
    CHECK(conjugate_ode_residual(gs, 2.0) ==
          doctest::Approx(-9.0 / 200.0).epsilon(1e-12));
    CHECK(std::abs(conjugate_ode_residual(gs, 2.0)) > 1e-3);
    GFunction hb = MonotoneMetric::named("bures").h();
    CHECK(flat_ode_residual(hb, 2.0) ==
          doctest::Approx(4.0 / 3.0).epsilon(1e-12));
  }

  SUBCASE("the two conjugate forms are proportional") {
    Rng rng(418);
    for (const auto& g :
         {GFunction::extreme(2.0), GFunction::alpha_family(1.7),
          GFunction::alpha_family(-0.4).mix(0.2)})
      for (int rep = 0; rep < 10; ++rep) {
        double u = 0.1 + 3.0 * rng.uniform();
        CHECK(std::abs(conjugate_ode_residual(g, u) +
                       2.0 * conjugate_ode_residual2(g, u)) < 1e-10);
      }
  }

  SUBCASE("symmetrized power mixtures solve the conjugate equation") {
    for (double alpha : {0.5, 2.0})
      for (double p : {0.0, 0.3, 0.5}) {
        GFunction g = GFunction::alpha_family(alpha).mix(p);
        for (int i = 0; i < 50; ++i) {
          double u = std::exp(-2.0 + 4.0 * i / 49.0);
          CHECK(std::abs(conjugate_ode_residual(g, u)) < 1e-9);
        }
      }
  }

  SUBCASE("power generators solve the flatness equation") {
    for (double alpha = -3.0; alpha <= 3.0; alpha += 0.5) {
      GFunction g = GFunction::alpha_family(alpha);
      for (int i = 0; i < 50; ++i) {
        double u = std::exp(-2.0 + 4.0 * i / 49.0);
        CHECK(std::abs(flat_ode_residual(g, u)) < 1e-8);
      }
    }
  }

  SUBCASE("flatness residual vanishes at u = 1 for every generator") {
    for (const auto& g :
         {GFunction::extreme(2.0), GFunction::alpha_family(1.3).mix(0.4),
          MonotoneMetric::named("bures").h()})
      CHECK(std::abs(flat_ode_residual(g, 1.0)) < 1e-10);
  }

  SUBCASE("non-power generators violate the flatness equation") {
    CHECK(std::abs(flat_ode_residual(GFunction::extreme(2.0), 2.0)) > 1e-3);
    CHECK(std::abs(flat_ode_residual(MonotoneMetric::named("bures").h(), 2.0)) >
          1e-3);
  }
}

TEST_CASE("curvature of the metric connection has the pair symmetries") {
  Rng rng(419);
  GFunction g = GFunction::extreme(2.0);
  PositivePoint rho(random_positive(rng, 2));
  CurvatureTensor r = curvature_p(g, 0.5, rho, CurvatureRoute::kTensor);
  REQUIRE(r.size == 4);
  double scale = r.max_abs() + 1.0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k)
        for (int l = 0; l < 4; ++l) {
          CHECK(std::abs(r.at(i, j, k, l) + r.at(j, i, k, l)) / scale < 1e-10);
          CHECK(std::abs(r.at(i, j, k, l) - r.at(k, l, i, j)) / scale < 1e-10);
        }

  // p = 1/2 tensor equals the metric-connection curvature component
  GeometryContext ctx(g, rho);
  const auto& fr = ctx.frame();
  CHECK(std::abs(r.at(0, 1, 0, 1) -
                 ctx.curvature_bar(fr[0], fr[1], fr[0], fr[1])) < 1e-11);
  CHECK(std::abs(r.at(0, 1, 2, 3) - ctx.curvature_p_component(
                                        0.5, fr[0], fr[1], fr[2], fr[3])) <
        1e-11);
}

TEST_CASE("power-family connections are flat at the interpolation endpoints") {
  Rng rng(420);
  for (int n : {2, 3})
    for (double alpha : {-2.0, -1.0, 0.0, 0.5, 1.0, 2.0}) {
      PositivePoint rho(random_positive(rng, n));
      GFunction g = GFunction::alpha_family(alpha);
      for (double p : {0.0, 1.0}) {
        CurvatureTensor ra = curvature_p(g, p, rho, CurvatureRoute::kTensor);
        CHECK(ra.max_abs() < 1e-9);
      }
      CurvatureTensor rb = curvature_p(g, 1.0, rho, CurvatureRoute::kDirect);
      CHECK(rb.max_abs() < 1e-9);
    }
}

TEST_CASE("the two curvature routes agree away from flatness") {
  Rng rng(421);
  PositivePoint rho(random_positive(rng, 3));
  GFunction g = GFunction::extreme(2.0);
  CurvatureTensor ra = curvature_p(g, 0.3, rho, CurvatureRoute::kTensor);
  CurvatureTensor rb = curvature_p(g, 0.3, rho, CurvatureRoute::kDirect);
  REQUIRE(ra.r.size() == rb.r.size());
  CHECK(ra.max_abs() > 1e-4);
  double worst = 0.0;
  for (size_t t = 0; t < ra.r.size(); ++t)
    worst = std::max(worst, std::abs(ra.r[t] - rb.r[t]));
  CHECK(worst < 1e-10);
  CHECK(ra.tag.substr(0, 6) == "tensor");
  CHECK(rb.tag.substr(0, 6) == "direct");
}

TEST_CASE("flat generators collapse the curvature to the skewness square") {
  Rng rng(422);
  PositivePoint rho(random_positive(rng, 2));
  GFunction g = GFunction::alpha_family(1.5);
  GeometryContext ctx(g, rho);
  const auto& fr = ctx.frame();
  double p = 0.25;
  CurvatureTensor r = curvature_p(g, p, rho, CurvatureRoute::kTensor);
  for (int i = 0; i < r.size; ++i)
    for (int j = 0; j < r.size; ++j)
      for (int k = 0; k < r.size; ++k)
        for (int l = 0; l < r.size; ++l) {
          double want =
              p * (p - 1.0) *
              (ctx.lambda(ctx.d_raised(fr[i], fr[l]),
                          ctx.d_raised(fr[j], fr[k])) -
               ctx.lambda(ctx.d_raised(fr[i], fr[k]),
                          ctx.d_raised(fr[j], fr[l])));
          CHECK(std::abs(r.at(i, j, k, l) - want) < 1e-10);
        }

  // the collapse is symmetric under p -> 1 - p
  CurvatureTensor rq = curvature_p(g, 1.0 - p, rho, CurvatureRoute::kTensor);
  double worst = 0.0;
  for (size_t t = 0; t < r.r.size(); ++t)
    worst = std::max(worst, std::abs(r.r[t] - rq.r[t]));
  CHECK(worst < 1e-11);
}

TEST_CASE("metric-connection curvature singles out the Wigner-Yanase metric") {
  PositivePoint rho = diag_point({0.4, 1.0, 2.1});
  CHECK(curvature_p(MonotoneMetric::named("wy").h(), 0.5, rho,
                    CurvatureRoute::kTensor)
            .max_abs() < 1e-9);
  for (const char* id : {"bures", "bkm", "rld"})
    CHECK(curvature_p(MonotoneMetric::named(id).h(), 0.5, rho,
                      CurvatureRoute::kTensor)
              .max_abs() > 1e-5);
}

TEST_CASE("mixture of the exponential and mixture connections is flat only "
          "at the ends") {
  PositivePoint rho = diag_point({0.5, 1.5});
  GFunction g = GFunction::alpha_family(1.0);  // u log u
  for (double p : {0.0, 1.0})
    CHECK(curvature_p(g, p, rho, CurvatureRoute::kTensor).max_abs() < 1e-10);
  for (double p : {0.25, 0.5})
    CHECK(curvature_p(g, p, rho, CurvatureRoute::kTensor).max_abs() > 1e-4);
}

TEST_CASE("geometry does not see the linear part of the generator") {
  Rng rng(423);
  GFunction base = GFunction::alpha_family(1.7);
  GFunction shifted =
      GFunction::from_k(base.k_bundle(), base.a() + 5.0, "shifted");
  PositivePoint rho(random_positive(rng, 2));
  PositivePoint sigma(random_positive(rng, 2));
  CMat x = random_hermitian(rng, 2);
  CMat y = random_hermitian(rng, 2);
  CMat z = random_hermitian(rng, 2);

  GeometryContext c0(base, rho);
  GeometryContext c1(shifted, rho);
  CHECK(mat_err(c0.nabla_g(x, y), c1.nabla_g(x, y)) < 1e-14);
  CHECK(std::abs(c0.skew(x, y, z) - c1.skew(x, y, z)) < 1e-14);
  CHECK(rel_err(c0.lambda(x, y), c1.lambda(x, y)) < 1e-14);
  CurvatureTensor r0 = curvature_p(base, 0.3, rho, CurvatureRoute::kTensor);
  CurvatureTensor r1 = curvature_p(shifted, 0.3, rho, CurvatureRoute::kTensor);
  double worst = 0.0;
  for (size_t t = 0; t < r0.r.size(); ++t)
    worst = std::max(worst, std::abs(r0.r[t] - r1.r[t]));
  CHECK(worst < 1e-13);

  // the entropy shifts by exactly a * Tr(sigma - rho)
  double tr_delta = (sigma.m() - rho.m()).trace().real();
  CHECK(rel_err(entropy(shifted, rho, sigma),
                entropy(base, rho, sigma) + 5.0 * tr_delta) < 1e-12);
}

TEST_CASE("coincidence limits on a one-dimensional state space") {
  CMat one = CMat::Ones(1, 1);
  double xval = 2.0;
  PositivePoint pt((CMat(1, 1) << xval).finished());
  for (double alpha : {-2.0, -1.0, 0.5, 1.7}) {
    GeometryContext ctx(GFunction::alpha_family(alpha), pt);
    // triple-coincidence limit of the skew quotient
    double want_q = -alpha / (6.0 * xval * xval);
    CHECK(std::abs(ctx.q_tensor(one, one, one).real() - want_q) < 1e-10);
    CHECK(std::abs(ctx.q_tensor(one, one, one).imag()) < 1e-14);
    // skew is six times the quotient; raising divides by cbar = 1/x
    CHECK(std::abs(ctx.skew(one, one, one) - 6.0 * want_q) < 1e-10);
    // metric-connection coefficient: S(x,x|x) = -1/(4x), applied twice
    CHECK(std::abs(ctx.nabla_bar(one, one)(0, 0).real() + 1.0 / (2.0 * xval)) <
          1e-10);
  }
}

TEST_CASE("connection coefficient kinds") {
  Rng rng(424);
  PositivePoint rho(random_positive(rng, 2));
  GFunction g = GFunction::alpha_family(1.3);
  GeometryContext ctx(g, rho);

  ConnectionCoefficients cg = connection_coefficients(g, rho, "g");
  ConnectionCoefficients cm = connection_coefficients(g, rho, "metric");
  ConnectionCoefficients cp = connection_coefficients(g, rho, "p", 0.5);
  ConnectionCoefficients ca = connection_coefficients(g, rho, "alpha");
  REQUIRE(cg.frame.size() == 4);
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) {
      CHECK(mat_err(cg.gamma[i][j],
                    ctx.nabla_g(cg.frame[i], cg.frame[j])) < 1e-13);
      CHECK(mat_err(cp.gamma[i][j], cm.gamma[i][j]) < 1e-13);
      CHECK(mat_err(ca.gamma[i][j], cg.gamma[i][j]) < 1e-10);
    }
  CHECK(cg.torsion_defect() < 1e-13);
  CHECK(cm.torsion_defect() < 1e-13);
  CHECK(cg.tag == "g");
  CHECK(cp.tag.substr(0, 2) == "p:");
  CHECK_THROWS_AS(connection_coefficients(g, rho, "bogus"), DomainError);
}

TEST_SUITE_END();
