#pragma once

#include "qig/linalg.hpp"

namespace qig {

namespace tol {
/// Relative eigenvalue gap below which divided differences switch to their
/// confluent (derivative) forms.
constexpr double conf_gap = 1e-7;
/// Hermiticity defect (relative) above which spectral_decompose warns.
constexpr double herm_defect = 1e-10;
/// Condition number above which kernel evaluations emit a warning.
constexpr double cond_warn = 1e6;
}  // namespace tol

/// Eigendecomposition of a Hermitian matrix with ascending eigenvalues and a
/// deterministic eigenvector gauge: in each column the entry of largest
/// magnitude is made real and positive (ties broken by lowest row index).
struct SpectralDecomposition {
  RVec eigenvalues;
  CMat eigenvectors;  // unitary; i-th column pairs with eigenvalues[i]

  int dim() const { return static_cast<int>(eigenvalues.size()); }
  CMat reconstruct() const;

  /// U* X U: coordinates of X in the eigenbasis.
  CMat to_eigenbasis(const CMat& x) const;
  /// U X U*: back to the ambient basis.
  CMat from_eigenbasis(const CMat& x) const;

  double eigenvalue_scale() const { return eigenvalues.cwiseAbs().maxCoeff(); }
};

/// Input is symmetrized (A + A*)/2 first; a defect above tol_herm (relative
/// to the matrix scale) is reported through the warning hook.
SpectralDecomposition spectral_decompose(const CMat& a,
                                         double tol_herm = tol::herm_defect);

/// Hermitian tangent direction. Constructor symmetrizes and validates.
class TangentVector {
public:
  explicit TangentVector(const CMat& x, double tol_herm = tol::herm_defect);
  const CMat& m() const { return m_; }
  int dim() const { return static_cast<int>(m_.rows()); }

private:
  CMat m_;
};

/// Strictly positive definite base point with its spectral data computed
/// eagerly (safe to share across threads).
class PositivePoint {
public:
  explicit PositivePoint(const CMat& rho, double tol_herm = tol::herm_defect);

  const CMat& m() const { return m_; }
  const SpectralDecomposition& spec() const { return spec_; }
  int dim() const { return static_cast<int>(m_.rows()); }

  double condition_number() const;
  /// Warns once per call site pattern if the condition number is extreme.
  void warn_if_ill_conditioned() const;

private:
  CMat m_;
  SpectralDecomposition spec_;
};

}  // namespace qig
