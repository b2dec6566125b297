#include "qig/linalg.hpp"

#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>

namespace qig {

namespace {
std::mutex handler_mutex;
std::function<void(const std::string&)> warning_handler;
}  // namespace

void set_warning_handler(std::function<void(const std::string&)> handler) {
  std::lock_guard<std::mutex> lock(handler_mutex);
  warning_handler = std::move(handler);
}

void warn(const std::string& message) {
  std::function<void(const std::string&)> handler;
  {
    std::lock_guard<std::mutex> lock(handler_mutex);
    handler = warning_handler;
  }
  if (handler) {
    handler(message);
  } else {
    std::cerr << "[qig] warning: " << message << "\n";
  }
}

void require_finite(const CMat& a, const char* what) {
  if (!a.allFinite()) {
    throw DomainError(std::string(what) + ": matrix has non-finite entries");
  }
}

double real_checked(Complex z, double scale, double tol) {
  const double bound = tol * std::max(1.0, scale);
  if (std::abs(z.imag()) > bound) {
    throw NumericError("imaginary residue " + std::to_string(z.imag()) +
                       " exceeds tolerance " + std::to_string(bound));
  }
  return z.real();
}

}  // namespace qig
