#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qig/g_function.hpp"
#include "qig/operator_calculus.hpp"
#include "qig/spectral.hpp"

namespace qig {

/// Monotone metric lambda_rho(X, Y) = Tr X J_rho(Y); J_rho acts in the
/// eigenbasis by the symmetric kernel cbar(x, y) = 1/(y F(x/y)).
class MonotoneMetric {
public:
  const ScalarKernel& kernel() const { return cbar_; }
  const MonotoneF& F() const { return f_; }
  /// Symmetric generator with k_h = 1/(2F); absent for unchecked metrics.
  const GFunction& h() const;
  bool has_h() const { return h_.has_value(); }
  const std::string& id() const { return id_; }

  /// bures | rld | bkm | wy | wyd:<alpha> with alpha in [-3, 3].
  static MonotoneMetric named(const std::string& id);
  /// Metric induced by a generator: h = (g + ghat)/2, cbar = c + chat.
  static MonotoneMetric from_g(const GFunction& g);
  static MonotoneMetric from_F(const MonotoneF& F);
  /// Skips the symmetry/normalization checks; for deliberately broken
  /// kernels in negative-control experiments. No generator is attached.
  static MonotoneMetric from_F_unchecked(const MonotoneF& F);

private:
  MonotoneMetric(ScalarKernel cbar, MonotoneF f, std::optional<GFunction> h,
                 std::string id);

  ScalarKernel cbar_;
  MonotoneF f_;
  std::optional<GFunction> h_;
  std::string id_;
};

double metric_eval(const MonotoneMetric& m, const PositivePoint& rho,
                   const CMat& x, const CMat& y);
double metric_eval(const MonotoneMetric& m, const PositivePoint& rho,
                   const TangentVector& x, const TangentVector& y);

CMat j_apply(const MonotoneMetric& m, const PositivePoint& rho, const CMat& y);
CMat j_inverse(const MonotoneMetric& m, const PositivePoint& rho,
               const CMat& y);

/// Hermitian frame built from rho's eigenvectors: projectors onto each
/// eigenvector (ascending), then for each pair a < b (lexicographic) the
/// real and imaginary off-diagonal units. Mutually orthogonal under every
/// monotone metric, so Gram matrices are diagonal.
class TangentBasis {
public:
  explicit TangentBasis(const PositivePoint& rho);

  const std::vector<CMat>& elements() const { return elements_; }
  int size() const { return static_cast<int>(elements_.size()); }

  /// Coefficients of X in this frame (X = sum coords_j * elements_j).
  RVec coords(const CMat& x) const;

  /// lambda(f_j, f_j): cbar(lam_a, lam_a) for projectors, 2 cbar(lam_a,
  /// lam_b) for the off-diagonal pairs (closed form, no quadrature).
  RVec norms(const MonotoneMetric& m) const;

  /// Frame rescaled to lambda-norm one.
  std::vector<CMat> orthonormal_frame(const MonotoneMetric& m) const;

private:
  const PositivePoint* rho_;
  std::vector<CMat> elements_;
  std::vector<int> ia_, ib_;  // eigenvalue index pair per element
  std::vector<int> kind_;     // 1 projector, 2 real pair, 3 imaginary pair
};

/// Dense Gram matrix by pairwise metric_eval; the generic cross-check for
/// the diagonal closed form in TangentBasis::norms.
RMat gram_matrix(const MonotoneMetric& m, const PositivePoint& rho,
                 const std::vector<CMat>& basis);

}  // namespace qig
