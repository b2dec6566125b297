#include "qig/g_function.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "qig/linalg.hpp"

namespace qig {

namespace {

void check_positive_arg(double u) {
  if (!(u > 0.0)) {
    throw DomainError("generator argument must be positive, got " +
                      std::to_string(u));
  }
}

double phi1(double x) {  // expm1(x)/x, continuous at 0
  if (std::abs(x) < 1e-290) return 1.0;
  return std::expm1(x) / x;
}

std::string num_id(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::ostringstream o;
  o << x;
  return o.str();
}

// ---- alpha family ----------------------------------------------------------
//
// With beta = (1+alpha)/2 in [-1, 2] and N(u) = beta*u - u^beta + 1 - beta,
//   k(u) = N(u) / (beta (1-beta) (u-1)^2).
// Both beta and 1-beta can vanish, so away from u = 1 we evaluate the reduced
// quotient N/s (s = beta or beta-1, whichever keeps the cofactor away from 0)
// and near u = 1 the power series of k, which has radius 1 and coefficients
// bounded by 1/2 for the whole admissible beta range.

std::array<double, 4> alpha_k_closed(double beta, double u) {
  const double L = std::log(u);
  const double d = u - 1.0;
  double n0, n1, n2, n3, c0;  // N/s and its u-derivatives, cofactor c0
  if (beta <= 0.5) {
    n0 = d - L * phi1(beta * L);  // N/beta
    n1 = -std::expm1((beta - 1.0) * L);
    n2 = (1.0 - beta) * std::pow(u, beta - 2.0);
    n3 = (1.0 - beta) * (beta - 2.0) * std::pow(u, beta - 3.0);
    c0 = 1.0 - beta;
  } else {
    const double q = L * phi1((beta - 1.0) * L);  // (u^{beta-1}-1)/(beta-1)
    n0 = d - u * q;                               // N/(beta-1)
    n1 = -beta * q;
    n2 = -beta * std::pow(u, beta - 2.0);
    n3 = -beta * (beta - 2.0) * std::pow(u, beta - 3.0);
    c0 = -beta;
  }
  const double d2 = d * d, d3 = d2 * d, d4 = d3 * d, d5 = d4 * d;
  return {n0 / (c0 * d2),
          (n1 * d - 2.0 * n0) / (c0 * d3),
          (n2 * d2 - 4.0 * n1 * d + 6.0 * n0) / (c0 * d4),
          (n3 * d3 - 6.0 * n2 * d2 + 18.0 * n1 * d - 24.0 * n0) / (c0 * d5)};
}

// k(1+e) = sum_{j>=0} s_j e^j with s_0 = 1/2, s_{j+1} = s_j (beta-j-2)/(j+3).
std::array<double, 4> alpha_k_series(double beta, double e) {
  constexpr int kTerms = 64;
  double s[kTerms];
  s[0] = 0.5;
  for (int j = 0; j + 1 < kTerms; ++j) {
    s[j + 1] = s[j] * (beta - (j + 2)) / (j + 3);
  }
  std::array<double, 4> out{};
  for (int d = 0; d < 4; ++d) {
    double acc = 0.0;
    for (int j = kTerms - 1; j >= d; --j) {
      double fall = 1.0;
      for (int i = 0; i < d; ++i) fall *= (j - i);
      acc = acc * e + s[j] * fall;
    }
    out[d] = acc;
  }
  return out;
}

std::array<double, 4> alpha_k_eval(double beta, double u) {
  check_positive_arg(u);
  if (std::abs(u - 1.0) < 0.25) return alpha_k_series(beta, u - 1.0);
  return alpha_k_closed(beta, u);
}

KBundle alpha_k_bundle(double alpha) {
  const double beta = 0.5 * (1.0 + alpha);
  KBundle kb;
  kb.id = "k[alpha(" + num_id(alpha) + ")]";
  kb.k0 = [beta](double u) { return alpha_k_eval(beta, u)[0]; };
  kb.k1 = [beta](double u) { return alpha_k_eval(beta, u)[1]; };
  kb.k2 = [beta](double u) { return alpha_k_eval(beta, u)[2]; };
  kb.k3 = [beta](double u) { return alpha_k_eval(beta, u)[3]; };
  return kb;
}

ScalarKernel kernel_from_bundle(const KBundle& kb, std::string id) {
  ScalarKernel c;
  c.id = std::move(id);
  auto grab = [&kb](double x, double y) {
    check_positive_arg(x);
    check_positive_arg(y);
    return x / y;
  };
  c.value = [kb, grab](double x, double y) { return kb.k0(grab(x, y)) / y; };
  c.dx = [kb, grab](double x, double y) {
    return kb.k1(grab(x, y)) / (y * y);
  };
  c.dy = [kb, grab](double x, double y) {
    const double u = grab(x, y);
    return -(u * kb.k1(u) + kb.k0(u)) / (y * y);
  };
  c.dxx = [kb, grab](double x, double y) {
    return kb.k2(grab(x, y)) / (y * y * y);
  };
  c.dxy = [kb, grab](double x, double y) {
    const double u = grab(x, y);
    return -(u * kb.k2(u) + 2.0 * kb.k1(u)) / (y * y * y);
  };
  c.dyy = [kb, grab](double x, double y) {
    const double u = grab(x, y);
    return (u * u * kb.k2(u) + 4.0 * u * kb.k1(u) + 2.0 * kb.k0(u)) /
           (y * y * y);
  };
  c.dxxx = [kb, grab](double x, double y) {
    return kb.k3(grab(x, y)) / (y * y * y * y);
  };
  c.dyyy = [kb, grab](double x, double y) {
    const double u = grab(x, y);
    return -(u * u * u * kb.k3(u) + 9.0 * u * u * kb.k2(u) +
             18.0 * u * kb.k1(u) + 6.0 * kb.k0(u)) /
           (y * y * y * y);
  };
  return c;
}

}  // namespace

KBundle transpose_bundle(const KBundle& kb) {
  KBundle out;
  out.id = "transpose(" + kb.id + ")";
  // khat(u) = k(1/u)/u
  out.k0 = [kb](double u) {
    check_positive_arg(u);
    return kb.k0(1.0 / u) / u;
  };
  out.k1 = [kb](double u) {
    check_positive_arg(u);
    const double v = 1.0 / u;
    return -(kb.k0(v) + v * kb.k1(v)) / (u * u);
  };
  out.k2 = [kb](double u) {
    check_positive_arg(u);
    const double v = 1.0 / u;
    return (2.0 * kb.k0(v) + 4.0 * v * kb.k1(v) + v * v * kb.k2(v)) /
           (u * u * u);
  };
  out.k3 = [kb](double u) {
    check_positive_arg(u);
    const double v = 1.0 / u;
    return -(6.0 * kb.k0(v) + 18.0 * v * kb.k1(v) + 9.0 * v * v * kb.k2(v) +
             v * v * v * kb.k3(v)) /
           (u * u * u * u);
  };
  return out;
}

KBundle add_bundle(double wa, const KBundle& a, double wb, const KBundle& b) {
  KBundle out;
  out.id = "combine(" + a.id + "," + b.id + ")";
  out.k0 = [wa, a, wb, b](double u) { return wa * a.k0(u) + wb * b.k0(u); };
  out.k1 = [wa, a, wb, b](double u) { return wa * a.k1(u) + wb * b.k1(u); };
  out.k2 = [wa, a, wb, b](double u) { return wa * a.k2(u) + wb * b.k2(u); };
  out.k3 = [wa, a, wb, b](double u) { return wa * a.k3(u) + wb * b.k3(u); };
  return out;
}

KBundle mix_bundle(double p, const KBundle& kb) {
  return add_bundle(p, kb, 1.0 - p, transpose_bundle(kb));
}

GFunction::GFunction(KBundle kb, double a, std::string id, nlohmann::json spec,
                     double rescale)
    : kb_(std::move(kb)),
      a_(a),
      id_(std::move(id)),
      spec_(std::move(spec)),
      rescale_(rescale) {}

double GFunction::g(double u) const {
  const double d = u - 1.0;
  return a_ * d + d * d * kb_.k0(u);
}

double GFunction::g1(double u) const {
  const double d = u - 1.0;
  return a_ + 2.0 * d * kb_.k0(u) + d * d * kb_.k1(u);
}

double GFunction::g2(double u) const {
  const double d = u - 1.0;
  return 2.0 * kb_.k0(u) + 4.0 * d * kb_.k1(u) + d * d * kb_.k2(u);
}

double GFunction::g3(double u) const {
  const double d = u - 1.0;
  return 6.0 * kb_.k1(u) + 6.0 * d * kb_.k2(u) + d * d * kb_.k3(u);
}

GFunction GFunction::transpose() const {
  nlohmann::json spec = {{"family", "transpose"}, {"base", spec_}};
  return GFunction(transpose_bundle(kb_), -a_, "transpose(" + id_ + ")",
                   std::move(spec), rescale_);
}

GFunction GFunction::mix(double p) const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw DomainError("mixture weight must lie in [0, 1], got " +
                      std::to_string(p));
  }
  nlohmann::json spec = {{"family", "mixture"}, {"p", p}, {"base", spec_}};
  return GFunction(mix_bundle(p, kb_), (2.0 * p - 1.0) * a_,
                   "mix(" + num_id(p) + "," + id_ + ")", std::move(spec),
                   rescale_);
}

ScalarKernel GFunction::kernel() const {
  return kernel_from_bundle(kb_, "c[" + id_ + "]");
}

ScalarKernel GFunction::kernel_hat() const {
  ScalarKernel hat = kernel().transpose();
  hat.id = "chat[" + id_ + "]";
  return hat;
}

ScalarKernel GFunction::kernel_sym() const {
  ScalarKernel s = ScalarKernel::linear_combination(1.0, kernel(), 1.0,
                                                    kernel_hat());
  s.id = "cbar[" + id_ + "]";
  return s;
}

ScalarKernel GFunction::kernel_skew() const {
  ScalarKernel s = ScalarKernel::linear_combination(1.0, kernel_hat(), -1.0,
                                                    kernel());
  s.id = "cr[" + id_ + "]";
  return s;
}

double GFunction::induced_F(double x) const {
  check_positive_arg(x);
  const double ks = kb_.k0(x) + transpose_bundle(kb_).k0(x);
  if (!(ks > 0.0)) {
    throw NumericError("symmetrized kernel not positive at " +
                       std::to_string(x));
  }
  return 1.0 / ks;
}

GFunction GFunction::alpha_family(double alpha) {
  if (!(alpha >= -3.0 && alpha <= 3.0)) {
    throw DomainError("alpha generator requires alpha in [-3, 3], got " +
                      std::to_string(alpha));
  }
  double a;
  if (alpha == 1.0) {
    a = 1.0;  // g(u) = u log u
  } else if (alpha == -1.0) {
    a = -1.0;  // g(u) = -log u
  } else {
    a = -2.0 * alpha / (1.0 - alpha * alpha);
  }
  nlohmann::json spec = {{"family", "alpha"}, {"alpha", alpha}};
  return GFunction(alpha_k_bundle(alpha), a, "alpha(" + num_id(alpha) + ")",
                   std::move(spec));
}

GFunction GFunction::extreme(double s) {
  if (!(s >= 0.0)) {  // rejects NaN and negatives; +inf allowed
    throw DomainError("extreme generator requires s in [0, inf], got " +
                      std::to_string(s));
  }
  KBundle kb;
  kb.id = "k[extreme(" + num_id(s) + ")]";
  if (std::isinf(s)) {
    kb.k0 = [](double u) {
      check_positive_arg(u);
      return 0.5;
    };
    kb.k1 = kb.k2 = kb.k3 = [](double u) {
      check_positive_arg(u);
      return 0.0;
    };
  } else {
    const double w = 0.5 * (1.0 + s);
    kb.k0 = [w, s](double u) {
      check_positive_arg(u);
      return w / (u + s);
    };
    kb.k1 = [w, s](double u) {
      check_positive_arg(u);
      return -w / ((u + s) * (u + s));
    };
    kb.k2 = [w, s](double u) {
      check_positive_arg(u);
      const double t = u + s;
      return 2.0 * w / (t * t * t);
    };
    kb.k3 = [w, s](double u) {
      check_positive_arg(u);
      const double t = u + s;
      return -6.0 * w / (t * t * t * t);
    };
  }
  nlohmann::json spec = {{"family", "extreme"}};
  if (std::isinf(s)) {
    spec["s"] = "inf";
  } else {
    spec["s"] = s;
  }
  return GFunction(std::move(kb), 0.0, "extreme(" + num_id(s) + ")",
                   std::move(spec));
}

GFunction GFunction::measure(double a, double atom_inf, double atom_zero,
                             const std::vector<double>& nodes,
                             const std::vector<double>& weights) {
  if (nodes.size() != weights.size()) {
    throw DomainError("measure generator: nodes and weights length mismatch");
  }
  double mass = atom_inf + atom_zero;
  if (atom_inf < 0.0 || atom_zero < 0.0) {
    throw DomainError("measure generator: atom weights must be nonnegative");
  }
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (!(nodes[i] > 0.0) || !std::isfinite(nodes[i])) {
      throw DomainError("measure generator: nodes must be finite positive");
    }
    if (weights[i] < 0.0) {
      throw DomainError("measure generator: weights must be nonnegative");
    }
    mass += weights[i];
  }
  if (!(mass > 0.0)) {
    throw DomainError("measure generator: total mass must be positive");
  }
  // Normalize so k(1) = 1/2 (each extreme kernel already has k_s(1) = 1/2).
  const double r = 1.0 / mass;
  struct Term {
    double w, s;
  };
  std::vector<Term> terms;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    if (weights[i] > 0.0) terms.push_back({r * weights[i], nodes[i]});
  }
  const double b = 0.5 * r * atom_inf;   // constant part
  const double c = 0.5 * r * atom_zero;  // 1/u part
  KBundle kb;
  kb.id = "k[measure]";
  kb.k0 = [b, c, terms](double u) {
    check_positive_arg(u);
    double v = b + c / u;
    for (const auto& t : terms) v += 0.5 * t.w * (1.0 + t.s) / (u + t.s);
    return v;
  };
  kb.k1 = [c, terms](double u) {
    check_positive_arg(u);
    double v = -c / (u * u);
    for (const auto& t : terms) {
      const double d = u + t.s;
      v -= 0.5 * t.w * (1.0 + t.s) / (d * d);
    }
    return v;
  };
  kb.k2 = [c, terms](double u) {
    check_positive_arg(u);
    double v = 2.0 * c / (u * u * u);
    for (const auto& t : terms) {
      const double d = u + t.s;
      v += t.w * (1.0 + t.s) / (d * d * d);
    }
    return v;
  };
  kb.k3 = [c, terms](double u) {
    check_positive_arg(u);
    double v = -6.0 * c / (u * u * u * u);
    for (const auto& t : terms) {
      const double d = u + t.s;
      v -= 3.0 * t.w * (1.0 + t.s) / (d * d * d * d);
    }
    return v;
  };
  nlohmann::json spec = {{"family", "measure"},   {"a", a},
                         {"atom_inf", atom_inf},  {"atom_zero", atom_zero},
                         {"nodes", nodes},        {"weights", weights},
                         {"rescale", r}};
  if (r != 1.0) {
    warn("measure generator mass " + std::to_string(mass) +
         " rescaled by " + std::to_string(r) + " to normalize g''(1) = 1");
  }
  return GFunction(std::move(kb), a, "measure", std::move(spec), r);
}

GFunction GFunction::from_k(KBundle kb, double a, std::string id,
                            nlohmann::json spec) {
  const double k1v = kb.k0(1.0);
  if (std::abs(k1v - 0.5) > 1e-8) {
    throw DomainError("generator not normalized: k(1) = " +
                      std::to_string(k1v) + ", expected 1/2");
  }
  if (spec.is_null() || spec.empty()) {
    spec = {{"family", "custom"}, {"id", id}};
  }
  return GFunction(std::move(kb), a, std::move(id), std::move(spec));
}

GFunction GFunction::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("family")) {
    throw DomainError("generator spec must be an object with a family field");
  }
  const std::string family = j.at("family").get<std::string>();
  if (family == "alpha") {
    return alpha_family(j.at("alpha").get<double>());
  }
  if (family == "extreme") {
    const auto& sv = j.at("s");
    double s;
    if (sv.is_string()) {
      const std::string t = sv.get<std::string>();
      if (t == "inf" || t == "infinity") {
        s = std::numeric_limits<double>::infinity();
      } else {
        s = std::stod(t);
      }
    } else {
      s = sv.get<double>();
    }
    return extreme(s);
  }
  if (family == "mixture") {
    return from_json(j.at("base")).mix(j.at("p").get<double>());
  }
  if (family == "transpose") {
    return from_json(j.at("base")).transpose();
  }
  if (family == "measure") {
    return measure(j.value("a", 0.0), j.value("atom_inf", 0.0),
                   j.value("atom_zero", 0.0),
                   j.value("nodes", std::vector<double>{}),
                   j.value("weights", std::vector<double>{}));
  }
  throw DomainError("unknown generator family: " + family);
}

GFunction GFunction::parse(const std::string& text) {
  std::string t = text;
  // trim
  const auto b = t.find_first_not_of(" \t\n\r");
  const auto e = t.find_last_not_of(" \t\n\r");
  if (b == std::string::npos) throw DomainError("empty generator spec");
  t = t.substr(b, e - b + 1);
  if (t.front() == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(t);
    } catch (const nlohmann::json::exception& ex) {
      throw DomainError(std::string("generator spec is not valid JSON: ") +
                        ex.what());
    }
    return from_json(j);
  }
  const auto colon = t.find(':');
  const std::string head = t.substr(0, colon);
  const std::string rest =
      colon == std::string::npos ? std::string() : t.substr(colon + 1);
  auto to_double = [](const std::string& s, const char* what) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw DomainError(std::string("cannot parse ") + what + ": '" + s + "'");
    }
  };
  if (head == "alpha") {
    return alpha_family(to_double(rest, "alpha"));
  }
  if (head == "extreme") {
    if (rest == "inf" || rest == "infinity") {
      return extreme(std::numeric_limits<double>::infinity());
    }
    return extreme(to_double(rest, "s"));
  }
  if (head == "mixture" || head == "mix") {
    const auto c2 = rest.find(':');
    if (c2 == std::string::npos) {
      throw DomainError("mixture spec needs 'mixture:<p>:<base>'");
    }
    const double p = to_double(rest.substr(0, c2), "mixture weight");
    return parse(rest.substr(c2 + 1)).mix(p);
  }
  throw DomainError("unknown generator '" + t +
                    "' (expected alpha:<a>, extreme:<s>, "
                    "mixture:<p>:<base>, or JSON)");
}

GFunction h_from_F(const MonotoneF& F) {
  const double f1 = F(1.0);
  if (std::abs(f1 - 1.0) > 1e-8) {
    throw DomainError("monotone function not normalized: F(1) = " +
                      std::to_string(f1));
  }
  for (double u : {0.05, 0.3, 0.7, 1.9, 3.7, 12.0}) {
    const double lhs = F(u);
    const double rhs = u * F(1.0 / u);
    if (std::abs(lhs - rhs) > 1e-8 * std::max(1.0, std::abs(lhs))) {
      throw DomainError("monotone function not symmetric at u = " +
                        std::to_string(u) + ": F(u) = " + std::to_string(lhs) +
                        ", u F(1/u) = " + std::to_string(rhs));
    }
  }
  auto fv = F.f;
  auto k0 = [fv](double u) {
    check_positive_arg(u);
    return 0.5 / fv(u);
  };
  KBundle kb;
  kb.id = "k[h(" + F.id + ")]";
  kb.k0 = k0;
  kb.k1 = [k0](double u) { return fd_derivative(k0, u, std::max(u, 1e-3)); };
  kb.k2 = [k0](double u) { return fd_derivative2(k0, u, std::max(u, 1e-3)); };
  kb.k3 = [k0](double u) { return fd_derivative3(k0, u, std::max(u, 1e-3)); };
  return GFunction::from_k(std::move(kb), 0.0, "h[" + F.id + "]",
                           {{"family", "custom"}, {"id", "h[" + F.id + "]"}});
}

MonotoneF F_from_h(const GFunction& h) {
  const KBundle hat = transpose_bundle(h.k_bundle());
  for (double u : {0.05, 0.3, 0.7, 1.9, 3.7, 12.0}) {
    const double kv = h.k(u);
    const double kh = hat.k0(u);
    if (std::abs(kv - kh) > 1e-8 * std::max(1.0, std::abs(kv))) {
      throw DomainError("generator '" + h.id() +
                        "' is not symmetric; cannot read off a monotone "
                        "function");
    }
  }
  auto kb = h.k_bundle();
  return MonotoneF{[kb](double x) {
                     check_positive_arg(x);
                     return 0.5 / kb.k0(x);
                   },
                   "F[" + h.id() + "]"};
}

double wyd_F(double alpha, double x) {
  if (!(alpha >= -3.0 && alpha <= 3.0)) {
    throw DomainError("wyd requires alpha in [-3, 3], got " +
                      std::to_string(alpha));
  }
  check_positive_arg(x);
  if (x == 1.0) return 1.0;
  const double L = std::log(x);
  if (std::abs(alpha) == 1.0) return (x - 1.0) / L;  // BKM
  const double beta = 0.5 * (1.0 + alpha);
  const double num = 0.25 * (1.0 - alpha * alpha) * (x - 1.0) * (x - 1.0);
  return num / (std::expm1(beta * L) * std::expm1((1.0 - beta) * L));
}

}  // namespace qig
