#include "qig/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qig {

using nlohmann::json;

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 1099511628211ULL;
  }
  return h;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string header_line(json header) {
  header["hash"] = config_hash(header);
  return "# " + header.dump() + "\n";
}

}  // namespace

std::string config_hash(json config) {
  config.erase("timestamp");
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(fnv1a(config.dump())));
  return buf;
}

std::string tensor_csv(const CurvatureTensor& t, json header) {
  std::ostringstream out;
  out << header_line(std::move(header)) << "i,j,k,l,value\n";
  for (int i = 0; i < t.size; ++i)
    for (int j = 0; j < t.size; ++j)
      for (int k = 0; k < t.size; ++k)
        for (int l = 0; l < t.size; ++l)
          out << i << ',' << j << ',' << k << ',' << l << ','
              << num(t.at(i, j, k, l)) << '\n';
  return out.str();
}

std::string tensor_csv(const SkewnessTensor& t, json header) {
  std::ostringstream out;
  out << header_line(std::move(header)) << "i,j,k,l,value\n";
  for (int i = 0; i < t.size; ++i)
    for (int j = 0; j < t.size; ++j)
      for (int k = 0; k < t.size; ++k)
        out << i << ',' << j << ',' << k << ",," << num(t.at(i, j, k)) << '\n';
  return out.str();
}

std::string residual_grid_csv(const GFunction& g, const std::string& which,
                              int points, double u_min, double u_max,
                              json header) {
  if (points < 2) throw DomainError("residual_grid_csv: need >= 2 points");
  if (!(u_min > 0.0) || !(u_max > u_min))
    throw DomainError("residual_grid_csv: need 0 < u_min < u_max");
  double (*resid)(const GFunction&, double) = nullptr;
  if (which == "conjugate")
    resid = conjugate_ode_residual;
  else if (which == "flat")
    resid = flat_ode_residual;
  else
    throw DomainError("residual_grid_csv: unknown equation " + which);

  std::ostringstream out;
  out << header_line(std::move(header)) << "u,residual\n";
  double lo = std::log(u_min), hi = std::log(u_max);
  for (int i = 0; i < points; ++i) {
    double u = std::exp(lo + (hi - lo) * i / (points - 1));
    out << num(u) << ',' << num(resid(g, u)) << '\n';
  }
  return out.str();
}

}  // namespace qig
