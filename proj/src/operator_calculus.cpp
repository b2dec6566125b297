#include "qig/operator_calculus.hpp"

namespace qig {

namespace {

void check_dims(const SpectralDecomposition& rho, const CMat& a,
                const char* what) {
  if (a.rows() != rho.dim() || a.cols() != rho.dim()) {
    throw DomainError(std::string(what) + ": dimension mismatch");
  }
}

}  // namespace

CMat apply_kernel(const ScalarKernel& c, const SpectralDecomposition& left,
                  const SpectralDecomposition& right, const CMat& a) {
  if (a.rows() != left.dim() || a.cols() != right.dim()) {
    throw DomainError("apply_kernel: dimension mismatch");
  }
  CMat coords = left.eigenvectors.adjoint() * a * right.eigenvectors;
  for (int i = 0; i < left.dim(); ++i) {
    for (int j = 0; j < right.dim(); ++j) {
      coords(i, j) *= c.value(left.eigenvalues[i], right.eigenvalues[j]);
    }
  }
  return left.eigenvectors * coords * right.eigenvectors.adjoint();
}

CMat apply_kernel(const ScalarKernel& c, const SpectralDecomposition& rho,
                  const CMat& a) {
  return apply_kernel(c, rho, rho, a);
}

CMat kernel_d_left(const ScalarKernel& c, const SpectralDecomposition& rho,
                   const CMat& x, const CMat& a) {
  check_dims(rho, x, "kernel_d_left");
  check_dims(rho, a, "kernel_d_left");
  const int n = rho.dim();
  const double scale = rho.eigenvalue_scale();
  const RVec& lam = rho.eigenvalues;
  const CMat xc = rho.to_eigenbasis(x);
  const CMat ac = rho.to_eigenbasis(a);
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += dd1(c, lam[i], lam[j], lam[k], scale) * xc(i, j) * ac(j, k);
      }
      out(i, k) = s;
    }
  }
  return rho.from_eigenbasis(out);
}

CMat kernel_d_right(const ScalarKernel& c, const SpectralDecomposition& rho,
                    const CMat& x, const CMat& a) {
  check_dims(rho, x, "kernel_d_right");
  check_dims(rho, a, "kernel_d_right");
  const int n = rho.dim();
  const double scale = rho.eigenvalue_scale();
  const RVec& lam = rho.eigenvalues;
  const CMat xc = rho.to_eigenbasis(x);
  const CMat ac = rho.to_eigenbasis(a);
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += dd1_right(c, lam[i], lam[j], lam[k], scale) * ac(i, j) * xc(j, k);
      }
      out(i, k) = s;
    }
  }
  return rho.from_eigenbasis(out);
}

CMat kernel_d_total(const ScalarKernel& c, const SpectralDecomposition& rho,
                    const CMat& x, const CMat& a) {
  return kernel_d_left(c, rho, x, a) + kernel_d_right(c, rho, x, a);
}

CMat matrix_function(const Func1D& f, const SpectralDecomposition& rho) {
  const int n = rho.dim();
  RVec vals(n);
  for (int i = 0; i < n; ++i) {
    vals[i] = f.f(rho.eigenvalues[i]);
  }
  return rho.eigenvectors * vals.asDiagonal().toDenseMatrix().cast<Complex>() *
         rho.eigenvectors.adjoint();
}

CMat frechet1(const Func1D& f, const SpectralDecomposition& rho, const CMat& x) {
  check_dims(rho, x, "frechet1");
  const int n = rho.dim();
  const double scale = rho.eigenvalue_scale();
  const RVec& lam = rho.eigenvalues;
  CMat coords = rho.to_eigenbasis(x);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      coords(i, j) *= dd1_1d(f, lam[i], lam[j], scale);
    }
  }
  return rho.from_eigenbasis(coords);
}

CMat frechet2(const Func1D& f, const SpectralDecomposition& rho, const CMat& x,
              const CMat& y) {
  check_dims(rho, x, "frechet2");
  check_dims(rho, y, "frechet2");
  const int n = rho.dim();
  const double scale = rho.eigenvalue_scale();
  const RVec& lam = rho.eigenvalues;
  const CMat xc = rho.to_eigenbasis(x);
  const CMat yc = rho.to_eigenbasis(y);
  CMat out = CMat::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (int j = 0; j < n; ++j) {
        s += dd2_1d(f, lam[i], lam[j], lam[k], scale) *
             (xc(i, j) * yc(j, k) + yc(i, j) * xc(j, k));
      }
      out(i, k) = s;
    }
  }
  return rho.from_eigenbasis(out);
}

}  // namespace qig
