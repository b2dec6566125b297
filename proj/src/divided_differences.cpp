#include "qig/divided_differences.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace qig {

namespace {

double pair_scale(double a, double b, double scale) {
  return scale > 0 ? scale : std::max(std::abs(a), std::abs(b));
}

bool confluent(double a, double b, double scale) {
  return std::abs(a - b) <= tol::conf_gap * pair_scale(a, b, scale);
}

constexpr double kFactorial[4] = {1.0, 1.0, 2.0, 6.0};

double dd_1d_rec(const Func1D& f, const double* nodes, int lo, int hi,
                 double scale) {
  const double span = nodes[hi] - nodes[lo];  // nodes sorted ascending
  const int order = hi - lo;
  if (order == 0) {
    return f.f(nodes[lo]);
  }
  if (confluent(nodes[lo], nodes[hi], scale)) {
    double mean = 0.0;
    for (int i = lo; i <= hi; ++i) mean += nodes[i];
    mean /= (order + 1);
    return f.deriv(order, mean) / kFactorial[order];
  }
  return (dd_1d_rec(f, nodes, lo + 1, hi, scale) -
          dd_1d_rec(f, nodes, lo, hi - 1, scale)) /
         span;
}

}  // namespace

double dd_1d(const Func1D& f, std::span<const double> nodes, double scale) {
  const int m = static_cast<int>(nodes.size());
  if (m < 1 || m > 4) {
    throw DomainError("dd_1d: supports 1 to 4 nodes");
  }
  std::array<double, 4> sorted{};
  std::copy(nodes.begin(), nodes.end(), sorted.begin());
  std::sort(sorted.begin(), sorted.begin() + m);
  if (scale <= 0) {
    scale = std::max(std::abs(sorted[0]), std::abs(sorted[m - 1]));
  }
  return dd_1d_rec(f, sorted.data(), 0, m - 1, scale);
}

double dd1(const ScalarKernel& c, double x, double y, double z, double scale) {
  if (confluent(x, y, scale)) {
    return c.dx(0.5 * (x + y), z);
  }
  return (c.value(x, z) - c.value(y, z)) / (x - y);
}

double dd1_right(const ScalarKernel& c, double z, double x, double y,
                 double scale) {
  if (confluent(x, y, scale)) {
    return c.dy(z, 0.5 * (x + y));
  }
  return (c.value(z, x) - c.value(z, y)) / (x - y);
}

double dd2(const ScalarKernel& c, double x, double y, double z, double w,
           double scale) {
  std::array<double, 3> s{x, y, z};
  std::sort(s.begin(), s.end());
  const double a = s[0], b = s[1], d = s[2];
  if (confluent(a, d, scale)) {
    return 0.5 * c.dxx((a + b + d) / 3.0, w);
  }
  if (confluent(a, b, scale)) {
    // T(m,m,d|w) = d/dm T(m,d|w) = (c_x(m,w) - T(m,d|w))/(m-d)
    const double m = 0.5 * (a + b);
    return (c.dx(m, w) - dd1(c, m, d, w, scale)) / (m - d);
  }
  if (confluent(b, d, scale)) {
    const double m = 0.5 * (b + d);
    return (c.dx(m, w) - dd1(c, m, a, w, scale)) / (m - a);
  }
  return (dd1(c, a, b, w, scale) - dd1(c, b, d, w, scale)) / (a - d);
}

double dd_mixed(const ScalarKernel& c, double x, double y, double z, double w,
                double scale) {
  const bool left = confluent(x, y, scale);
  const bool right = confluent(z, w, scale);
  if (left && right) {
    return c.dxy(0.5 * (x + y), 0.5 * (z + w));
  }
  if (right) {
    const double m = 0.5 * (z + w);
    return (c.dy(x, m) - c.dy(y, m)) / (x - y);
  }
  if (left) {
    const double m = 0.5 * (x + y);
    return (c.dx(m, z) - c.dx(m, w)) / (z - w);
  }
  return (dd1(c, x, y, z, scale) - dd1(c, x, y, w, scale)) / (z - w);
}

}  // namespace qig
