#pragma once

#include <Eigen/Dense>
#include <complex>
#include <functional>
#include <stdexcept>
#include <string>

namespace qig {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;

/// Thrown when an input fails a mathematical precondition (shape, hermiticity,
/// positivity, parameter range).
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Thrown when a computation produces a result outside its numerical contract
/// (e.g. an imaginary residue where a real number is required).
class NumericError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Non-fatal diagnostics (hermiticity defects, ill conditioning) go through
/// this hook so tests and the CLI can capture them. Default prints to stderr.
void set_warning_handler(std::function<void(const std::string&)> handler);
void warn(const std::string& message);

inline double hermiticity_defect(const CMat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

inline CMat hermitian_part(const CMat& a) { return 0.5 * (a + a.adjoint()); }

inline bool is_square(const CMat& a) { return a.rows() == a.cols(); }

/// Largest absolute entry; used as the scale for relative tolerances.
inline double mat_scale(const CMat& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

void require_finite(const CMat& a, const char* what);

/// Takes the real part of a scalar that is real by symmetry, and flags an
/// imaginary residue above tol * scale instead of silently discarding it.
double real_checked(Complex z, double scale = 1.0, double tol = 1e-10);

}  // namespace qig
