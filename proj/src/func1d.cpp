#include "qig/func1d.hpp"

#include <cmath>

namespace qig {

double Func1D::deriv(int k, double x) const {
  switch (k) {
    case 0:
      return f(x);
    case 1:
      return d1(x);
    case 2:
      return d2(x);
    case 3:
      return d3(x);
    default:
      throw DomainError("Func1D::deriv: order must be 0..3");
  }
}

Func1D func_identity() {
  return {[](double x) { return x; }, [](double) { return 1.0; },
          [](double) { return 0.0; }, [](double) { return 0.0; }, "id"};
}

Func1D func_log() {
  return {[](double x) { return std::log(x); },
          [](double x) { return 1.0 / x; },
          [](double x) { return -1.0 / (x * x); },
          [](double x) { return 2.0 / (x * x * x); }, "log"};
}

Func1D func_exp() {
  auto e = [](double x) { return std::exp(x); };
  return {e, e, e, e, "exp"};
}

Func1D func_sqrt() { return func_power(0.5); }

Func1D func_power(double p) {
  return {[p](double x) { return std::pow(x, p); },
          [p](double x) { return p * std::pow(x, p - 1); },
          [p](double x) { return p * (p - 1) * std::pow(x, p - 2); },
          [p](double x) { return p * (p - 1) * (p - 2) * std::pow(x, p - 3); },
          "pow:" + std::to_string(p)};
}

Func1D alpha_function(double alpha) {
  if (alpha == 1.0) {
    Func1D f = func_log();
    f.id = "embed:1";
    return f;
  }
  const double q = 2.0 / (1.0 - alpha);  // f(x) = q x^{1/q}
  Func1D p = func_power(1.0 / q);
  Func1D out;
  out.f = [p, q](double x) { return q * p.f(x); };
  out.d1 = [p, q](double x) { return q * p.d1(x); };
  out.d2 = [p, q](double x) { return q * p.d2(x); };
  out.d3 = [p, q](double x) { return q * p.d3(x); };
  out.id = "embed:" + std::to_string(alpha);
  return out;
}

Func1D alpha_function_inverse(double alpha) {
  if (alpha == 1.0) {
    Func1D f = func_exp();
    f.id = "embed_inv:1";
    return f;
  }
  // y = q x^{1/q}  =>  x = (y/q)^q; for alpha > 1 the range is negative and
  // y/q stays positive.
  const double q = 2.0 / (1.0 - alpha);
  Func1D out;
  out.f = [q](double y) { return std::pow(y / q, q); };
  out.d1 = [q](double y) { return std::pow(y / q, q - 1); };
  out.d2 = [q](double y) { return (q - 1) / q * std::pow(y / q, q - 2); };
  out.d3 = [q](double y) {
    return (q - 1) * (q - 2) / (q * q) * std::pow(y / q, q - 3);
  };
  out.id = "embed_inv:" + std::to_string(alpha);
  return out;
}

}  // namespace qig
