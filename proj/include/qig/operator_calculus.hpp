#pragma once

#include "qig/divided_differences.hpp"
#include "qig/func1d.hpp"
#include "qig/scalar_kernel.hpp"
#include "qig/spectral.hpp"

namespace qig {

/// c(L_sigma, R_rho)(A): two-point kernel sum. In the eigenbases
/// sigma = sum_i mu_i |phi_i><phi_i| and rho = sum_j lam_j |psi_j><psi_j| the
/// result is sum_ij c(mu_i, lam_j) <phi_i|A|psi_j> |phi_i><psi_j|.
CMat apply_kernel(const ScalarKernel& c, const SpectralDecomposition& left,
                  const SpectralDecomposition& right, const CMat& a);

/// Coincident-point version c(L_rho, R_rho)(A).
CMat apply_kernel(const ScalarKernel& c, const SpectralDecomposition& rho,
                  const CMat& a);

/// d/dt c(L_{rho+tX}, R_rho)(A) at t = 0. In rho's eigenbasis:
///   out_ik = sum_j T(lam_i, lam_j | lam_k) x_ij a_jk
/// with T the first divided difference of c in its left slot.
CMat kernel_d_left(const ScalarKernel& c, const SpectralDecomposition& rho,
                   const CMat& x, const CMat& a);

/// d/dt c(L_rho, R_{rho+tX})(A) at t = 0 (divided difference in the right
/// slot):  out_ik = sum_j T(lam_i | lam_j, lam_k) a_ij x_jk.
CMat kernel_d_right(const ScalarKernel& c, const SpectralDecomposition& rho,
                    const CMat& x, const CMat& a);

/// Derivative of rho -> c(L_rho, R_rho)(A) along X (left + right parts).
CMat kernel_d_total(const ScalarKernel& c, const SpectralDecomposition& rho,
                    const CMat& x, const CMat& a);

/// Matrix function f(rho) through the spectral decomposition.
CMat matrix_function(const Func1D& f, const SpectralDecomposition& rho);

/// First Frechet derivative d/dt f(rho + tX)|_0; eigenbasis entries are
/// T_f(lam_i, lam_j) (U* X U)_ij.
CMat frechet1(const Func1D& f, const SpectralDecomposition& rho, const CMat& x);

/// Second Frechet derivative d2/ds dt f(rho + sX + tY)|_0 with entries
/// sum_j T_f(lam_i, lam_j, lam_k)(x_ij y_jk + y_ij x_jk).
CMat frechet2(const Func1D& f, const SpectralDecomposition& rho, const CMat& x,
              const CMat& y);

}  // namespace qig
