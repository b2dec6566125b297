#include "qig/spectral.hpp"

#include <cmath>

namespace qig {

CMat SpectralDecomposition::reconstruct() const {
  return eigenvectors * eigenvalues.asDiagonal().toDenseMatrix().cast<Complex>() *
         eigenvectors.adjoint();
}

CMat SpectralDecomposition::to_eigenbasis(const CMat& x) const {
  return eigenvectors.adjoint() * x * eigenvectors;
}

CMat SpectralDecomposition::from_eigenbasis(const CMat& x) const {
  return eigenvectors * x * eigenvectors.adjoint();
}

SpectralDecomposition spectral_decompose(const CMat& a, double tol_herm) {
  if (!is_square(a)) {
    throw DomainError("spectral_decompose: matrix must be square");
  }
  require_finite(a, "spectral_decompose");
  const double scale = mat_scale(a);
  const double defect = hermiticity_defect(a);
  if (scale > 0 && defect > tol_herm * scale) {
    warn("spectral_decompose: hermiticity defect " + std::to_string(defect) +
         " exceeds " + std::to_string(tol_herm * scale) + "; symmetrizing");
  }
  const CMat h = hermitian_part(a);

  Eigen::SelfAdjointEigenSolver<CMat> solver(h);
  if (solver.info() != Eigen::Success) {
    throw NumericError("spectral_decompose: eigensolver failed to converge");
  }

  SpectralDecomposition out;
  out.eigenvalues = solver.eigenvalues();  // ascending
  out.eigenvectors = solver.eigenvectors();

  // Gauge fixing: rotate each column so its largest-magnitude entry is real
  // and positive. Makes reports byte-stable for a given input.
  const int n = out.dim();
  for (int j = 0; j < n; ++j) {
    int arg = 0;
    double best = -1.0;
    for (int i = 0; i < n; ++i) {
      const double mag = std::abs(out.eigenvectors(i, j));
      if (mag > best + 1e-15) {
        best = mag;
        arg = i;
      }
    }
    const Complex pivot = out.eigenvectors(arg, j);
    if (std::abs(pivot) > 0) {
      out.eigenvectors.col(j) *= std::conj(pivot) / std::abs(pivot);
    }
  }
  return out;
}

TangentVector::TangentVector(const CMat& x, double tol_herm) {
  if (!is_square(x)) {
    throw DomainError("TangentVector: matrix must be square");
  }
  require_finite(x, "TangentVector");
  const double scale = mat_scale(x);
  if (scale > 0 && hermiticity_defect(x) > tol_herm * std::max(scale, 1.0)) {
    throw DomainError("TangentVector: matrix is not Hermitian");
  }
  m_ = hermitian_part(x);
}

PositivePoint::PositivePoint(const CMat& rho, double tol_herm)
    : m_(hermitian_part(rho)), spec_(spectral_decompose(rho, tol_herm)) {
  const double lo = spec_.eigenvalues.minCoeff();
  if (!(lo > 0.0)) {
    throw DomainError("PositivePoint: matrix is not positive definite (min eigenvalue " +
                      std::to_string(lo) + ")");
  }
}

double PositivePoint::condition_number() const {
  return spec_.eigenvalues.maxCoeff() / spec_.eigenvalues.minCoeff();
}

void PositivePoint::warn_if_ill_conditioned() const {
  const double c = condition_number();
  if (c > tol::cond_warn) {
    warn("base point condition number " + std::to_string(c) +
         " exceeds 1e6; kernel sums may lose digits");
  }
}

}  // namespace qig
