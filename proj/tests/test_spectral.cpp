#include <doctest.h>

#include "qig/rng.hpp"
#include "qig/spectral.hpp"
#include "test_util.hpp"

using namespace qig;
using testutil::mat_err;

TEST_SUITE("spectral") {

TEST_CASE("decomposition reconstructs and is orthonormal") {
  Rng rng(42);
  for (int n : {1, 2, 3, 5}) {
    const CMat a = random_hermitian(rng, n);
    const auto s = spectral_decompose(a);
    CHECK(mat_err(s.reconstruct(), a) < 1e-13);
    const CMat gram = s.eigenvectors.adjoint() * s.eigenvectors;
    CHECK(mat_err(gram, CMat::Identity(n, n)) < 1e-13);
    for (int i = 0; i + 1 < n; ++i) {
      CHECK(s.eigenvalues[i] <= s.eigenvalues[i + 1]);
    }
  }
}

TEST_CASE("eigenvector gauge is deterministic and real-positive") {
  Rng rng(7);
  const CMat a = random_hermitian(rng, 4);
  const auto s1 = spectral_decompose(a);
  const auto s2 = spectral_decompose(a);
  CHECK((s1.eigenvectors - s2.eigenvectors).cwiseAbs().maxCoeff() == 0.0);
  for (int c = 0; c < 4; ++c) {
    int arg = 0;
    double best = -1.0;
    for (int r = 0; r < 4; ++r) {
      const double m = std::abs(s1.eigenvectors(r, c));
      if (m > best + 1e-15) {
        best = m;
        arg = r;
      }
    }
    const Complex pivot = s1.eigenvectors(arg, c);
    CHECK(pivot.imag() == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(pivot.real() > 0.0);
  }
}

TEST_CASE("eigenbasis round trip") {
  Rng rng(3);
  const CMat a = random_hermitian(rng, 3);
  const auto s = spectral_decompose(a);
  const CMat x = random_hermitian(rng, 3);
  CHECK(mat_err(s.from_eigenbasis(s.to_eigenbasis(x)), x) < 1e-13);
}

TEST_CASE("degenerate spectra are handled") {
  Rng rng(11);
  const CMat u = random_unitary(rng, 3);
  CMat d = CMat::Zero(3, 3);
  d.diagonal() << 1.0, 1.0, 2.0;
  const CMat a = u * d * u.adjoint();
  const auto s = spectral_decompose(a);
  CHECK(mat_err(s.reconstruct(), a) < 1e-13);
}

TEST_CASE("tangent vectors symmetrize small defects and reject big ones") {
  Rng rng(5);
  CMat x = random_hermitian(rng, 3);
  x(0, 1) += Complex(0, 1e-13);  // below tolerance
  const TangentVector t(x);
  CHECK(hermiticity_defect(t.m()) == 0.0);

  CMat bad = random_hermitian(rng, 3);
  bad(0, 1) += Complex(0.5, 0.5);
  CHECK_THROWS_AS(TangentVector{bad}, DomainError);
}

TEST_CASE("positive points require positive definiteness") {
  Rng rng(9);
  const CMat rho = random_positive(rng, 3);
  const PositivePoint p(rho);
  CHECK(p.spec().eigenvalues.minCoeff() > 0.0);
  CHECK(p.condition_number() >= 1.0);

  CMat ind = CMat::Zero(2, 2);
  ind.diagonal() << 1.0, -0.25;
  CHECK_THROWS_AS(PositivePoint{ind}, DomainError);
}

TEST_CASE("unitaries and isometries are orthonormal") {
  Rng rng(13);
  const CMat u = random_unitary(rng, 4);
  CHECK(mat_err(u.adjoint() * u, CMat::Identity(4, 4)) < 1e-13);
  const CMat v = random_isometry(rng, 6, 2);
  CHECK(mat_err(v.adjoint() * v, CMat::Identity(2, 2)) < 1e-13);
  CHECK_THROWS_AS(random_isometry(rng, 2, 3), DomainError);
}

}  // TEST_SUITE
