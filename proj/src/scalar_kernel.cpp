#include "qig/scalar_kernel.hpp"

#include <cmath>
#include <limits>

#include "qig/divided_differences.hpp"

namespace qig {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double step(double x, double scale, double exponent) {
  return std::pow(kEps, exponent) * std::max(std::abs(x), scale);
}

// 4th-order central stencils; the step exponent balances truncation against
// roundoff for each derivative order.
double fd1(const std::function<double(double)>& f, double x, double scale) {
  const double h = step(x, scale, 1.0 / 3.0);
  return (-f(x + 2 * h) + 8 * f(x + h) - 8 * f(x - h) + f(x - 2 * h)) / (12 * h);
}

double fd2(const std::function<double(double)>& f, double x, double scale) {
  const double h = step(x, scale, 1.0 / 6.0);
  return (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) -
          f(x - 2 * h)) /
         (12 * h * h);
}

double fd3(const std::function<double(double)>& f, double x, double scale) {
  const double h = step(x, scale, 1.0 / 7.0);
  auto d = [&](double hh) {
    return (f(x + 2 * hh) - 2 * f(x + hh) + 2 * f(x - hh) - f(x - 2 * hh)) /
           (2 * hh * hh * hh);
  };
  return (4 * d(h) - d(2 * h)) / 3.0;  // Richardson, removes the h^2 term
}

double fd_cross(const ScalarKernel::F2& f, double x, double y, double scale) {
  auto d = [&](double h) {
    return (f(x + h, y + h) - f(x + h, y - h) - f(x - h, y + h) +
            f(x - h, y - h)) /
           (4 * h * h);
  };
  const double h = step(std::max(std::abs(x), std::abs(y)), scale, 1.0 / 6.0);
  return (4 * d(h) - d(2 * h)) / 3.0;
}

}  // namespace

double fd_derivative(const std::function<double(double)>& f, double x,
                     double scale) {
  return fd1(f, x, scale);
}

double fd_derivative2(const std::function<double(double)>& f, double x,
                      double scale) {
  return fd2(f, x, scale);
}

double fd_derivative3(const std::function<double(double)>& f, double x,
                      double scale) {
  return fd3(f, x, scale);
}

ScalarKernel ScalarKernel::from_value(F2 v, std::string id, double scale_hint) {
  ScalarKernel k;
  k.value = v;
  k.id = std::move(id);
  k.dx = [v, scale_hint](double x, double y) {
    return fd1([&](double t) { return v(t, y); }, x, scale_hint);
  };
  k.dy = [v, scale_hint](double x, double y) {
    return fd1([&](double t) { return v(x, t); }, y, scale_hint);
  };
  k.dxx = [v, scale_hint](double x, double y) {
    return fd2([&](double t) { return v(t, y); }, x, scale_hint);
  };
  k.dyy = [v, scale_hint](double x, double y) {
    return fd2([&](double t) { return v(x, t); }, y, scale_hint);
  };
  k.dxy = [v, scale_hint](double x, double y) {
    return fd_cross(v, x, y, scale_hint);
  };
  k.dxxx = [v, scale_hint](double x, double y) {
    return fd3([&](double t) { return v(t, y); }, x, scale_hint);
  };
  k.dyyy = [v, scale_hint](double x, double y) {
    return fd3([&](double t) { return v(x, t); }, y, scale_hint);
  };
  return k;
}

ScalarKernel ScalarKernel::transpose() const {
  ScalarKernel t;
  const ScalarKernel self = *this;
  t.id = id + "^T";
  t.value = [self](double x, double y) { return self.value(y, x); };
  t.dx = [self](double x, double y) { return self.dy(y, x); };
  t.dy = [self](double x, double y) { return self.dx(y, x); };
  t.dxx = [self](double x, double y) { return self.dyy(y, x); };
  t.dyy = [self](double x, double y) { return self.dxx(y, x); };
  t.dxy = [self](double x, double y) { return self.dxy(y, x); };
  t.dxxx = [self](double x, double y) { return self.dyyy(y, x); };
  t.dyyy = [self](double x, double y) { return self.dxxx(y, x); };
  return t;
}

ScalarKernel ScalarKernel::divided_difference(const Func1D& f) {
  ScalarKernel k;
  k.id = "dd[" + f.id + "]";
  k.value = [f](double x, double y) { return dd1_1d(f, x, y); };
  // d/dx^r of the two-node divided difference inserts r extra copies of x.
  k.dx = [f](double x, double y) { return dd2_1d(f, x, x, y); };
  k.dy = [f](double x, double y) { return dd2_1d(f, x, y, y); };
  k.dxx = [f](double x, double y) {
    const double nodes[] = {x, x, x, y};
    return 2.0 * dd_1d(f, nodes);
  };
  k.dxy = [f](double x, double y) {
    const double nodes[] = {x, x, y, y};
    return dd_1d(f, nodes);
  };
  k.dyy = [f](double x, double y) {
    const double nodes[] = {x, y, y, y};
    return 2.0 * dd_1d(f, nodes);
  };
  auto value = k.value;
  k.dxxx = [value](double x, double y) {
    return fd3([&](double t) { return value(t, y); }, x, 1.0);
  };
  k.dyyy = [value](double x, double y) {
    return fd3([&](double t) { return value(x, t); }, y, 1.0);
  };
  return k;
}

ScalarKernel ScalarKernel::quotient(const ScalarKernel& a,
                                    const ScalarKernel& b) {
  ScalarKernel q;
  q.id = "(" + a.id + ")/(" + b.id + ")";
  q.value = [a, b](double x, double y) { return a.value(x, y) / b.value(x, y); };
  q.dx = [a, b](double x, double y) {
    const double m = a.value(x, y) / b.value(x, y);
    return (a.dx(x, y) - m * b.dx(x, y)) / b.value(x, y);
  };
  q.dy = [a, b](double x, double y) {
    const double m = a.value(x, y) / b.value(x, y);
    return (a.dy(x, y) - m * b.dy(x, y)) / b.value(x, y);
  };
  q.dxx = [a, b](double x, double y) {
    const double bv = b.value(x, y);
    const double m = a.value(x, y) / bv;
    const double mx = (a.dx(x, y) - m * b.dx(x, y)) / bv;
    return (a.dxx(x, y) - 2 * mx * b.dx(x, y) - m * b.dxx(x, y)) / bv;
  };
  q.dyy = [a, b](double x, double y) {
    const double bv = b.value(x, y);
    const double m = a.value(x, y) / bv;
    const double my = (a.dy(x, y) - m * b.dy(x, y)) / bv;
    return (a.dyy(x, y) - 2 * my * b.dy(x, y) - m * b.dyy(x, y)) / bv;
  };
  q.dxy = [a, b](double x, double y) {
    const double bv = b.value(x, y);
    const double m = a.value(x, y) / bv;
    const double mx = (a.dx(x, y) - m * b.dx(x, y)) / bv;
    const double my = (a.dy(x, y) - m * b.dy(x, y)) / bv;
    return (a.dxy(x, y) - mx * b.dy(x, y) - my * b.dx(x, y) - m * b.dxy(x, y)) /
           bv;
  };
  auto value = q.value;
  q.dxxx = [value](double x, double y) {
    return fd3([&](double t) { return value(t, y); }, x, 1.0);
  };
  q.dyyy = [value](double x, double y) {
    return fd3([&](double t) { return value(x, t); }, y, 1.0);
  };
  return q;
}

ScalarKernel ScalarKernel::scaled(double w) const {
  return linear_combination(w, *this, 0.0, *this);
}

ScalarKernel ScalarKernel::linear_combination(double wa, const ScalarKernel& a,
                                              double wb, const ScalarKernel& b) {
  ScalarKernel k;
  k.id = std::to_string(wa) + "*(" + a.id + ")+" + std::to_string(wb) + "*(" +
         b.id + ")";
  auto combine = [wa, wb](const F2& fa, const F2& fb) -> F2 {
    return [wa, wb, fa, fb](double x, double y) {
      return wa * fa(x, y) + wb * fb(x, y);
    };
  };
  k.value = combine(a.value, b.value);
  k.dx = combine(a.dx, b.dx);
  k.dy = combine(a.dy, b.dy);
  k.dxx = combine(a.dxx, b.dxx);
  k.dxy = combine(a.dxy, b.dxy);
  k.dyy = combine(a.dyy, b.dyy);
  k.dxxx = combine(a.dxxx, b.dxxx);
  k.dyyy = combine(a.dyyy, b.dyyy);
  return k;
}

}  // namespace qig
