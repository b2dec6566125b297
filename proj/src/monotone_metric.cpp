#include "qig/monotone_metric.hpp"

#include <cmath>
#include <utility>

namespace qig {

namespace {

MonotoneF named_F(const std::string& id, double alpha) {
  if (id == "bures") {
    return {[](double x) { return 0.5 * (1.0 + x); }, id};
  }
  if (id == "rld") {
    return {[](double x) { return 2.0 * x / (1.0 + x); }, id};
  }
  if (id == "bkm") {
    return {[](double x) {
              return x == 1.0 ? 1.0 : (x - 1.0) / std::log(x);
            },
            id};
  }
  if (id == "wy") {
    return {[](double x) {
              const double r = std::sqrt(x) + 1.0;
              return 0.25 * r * r;
            },
            id};
  }
  return {[alpha](double x) { return wyd_F(alpha, x); }, id};
}

}  // namespace

MonotoneMetric::MonotoneMetric(ScalarKernel cbar, MonotoneF f,
                               std::optional<GFunction> h, std::string id)
    : cbar_(std::move(cbar)),
      f_(std::move(f)),
      h_(std::move(h)),
      id_(std::move(id)) {}

const GFunction& MonotoneMetric::h() const {
  if (!h_) {
    throw DomainError("metric '" + id_ +
                      "' carries no generator (built unchecked)");
  }
  return *h_;
}

MonotoneMetric MonotoneMetric::named(const std::string& id) {
  if (id == "bures") {
    const GFunction h = GFunction::extreme(1.0);
    return MonotoneMetric(h.kernel_sym(), named_F(id, 0.0), h, id);
  }
  if (id == "rld") {
    // k_h = 1/4 + 1/(4u): equal atoms at s = 0 and s = infinity
    const GFunction h = GFunction::measure(0.0, 0.5, 0.5, {}, {});
    return MonotoneMetric(h.kernel_sym(), named_F(id, 0.0), h, id);
  }
  if (id == "bkm") {
    const GFunction g = GFunction::alpha_family(1.0);
    return MonotoneMetric(g.kernel_sym(), named_F(id, 0.0), g.mix(0.5), id);
  }
  if (id == "wy") {
    const GFunction g = GFunction::alpha_family(0.0);
    return MonotoneMetric(g.kernel_sym(), named_F(id, 0.0), g.mix(0.5), id);
  }
  if (id.rfind("wyd:", 0) == 0) {
    double alpha;
    try {
      std::size_t pos = 0;
      const std::string tail = id.substr(4);
      alpha = std::stod(tail, &pos);
      if (pos != tail.size()) throw std::invalid_argument(tail);
    } catch (const std::exception&) {
      throw DomainError("cannot parse metric id '" + id + "'");
    }
    const GFunction g = GFunction::alpha_family(alpha);  // checks [-3, 3]
    return MonotoneMetric(g.kernel_sym(), named_F(id, alpha), g.mix(0.5), id);
  }
  throw DomainError("unknown metric '" + id +
                    "' (expected bures|rld|bkm|wy|wyd:<alpha>)");
}

MonotoneMetric MonotoneMetric::from_g(const GFunction& g) {
  const GFunction h = g.mix(0.5);
  auto kb = h.k_bundle();
  MonotoneF F{[kb](double x) { return 0.5 / kb.k0(x); }, "F[" + g.id() + "]"};
  return MonotoneMetric(g.kernel_sym(), std::move(F), h,
                        "metric[" + g.id() + "]");
}

MonotoneMetric MonotoneMetric::from_F(const MonotoneF& F) {
  const GFunction h = h_from_F(F);  // validates symmetry + normalization
  return MonotoneMetric(h.kernel_sym(), F, h, "metric[" + F.id + "]");
}

MonotoneMetric MonotoneMetric::from_F_unchecked(const MonotoneF& F) {
  auto fv = F.f;
  ScalarKernel cbar = ScalarKernel::from_value(
      [fv](double x, double y) { return 1.0 / (y * fv(x / y)); },
      "cbar[" + F.id + "]");
  return MonotoneMetric(std::move(cbar), F, std::nullopt,
                        "unchecked[" + F.id + "]");
}

double metric_eval(const MonotoneMetric& m, const PositivePoint& rho,
                   const CMat& x, const CMat& y) {
  if (x.rows() != rho.dim() || y.rows() != rho.dim()) {
    throw DomainError("metric_eval: dimension mismatch");
  }
  const auto& s = rho.spec();
  const CMat xc = s.to_eigenbasis(x);
  const CMat yc = s.to_eigenbasis(y);
  const int n = s.dim();
  Complex acc = 0.0;
  double mag = 0.0;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const double c = m.kernel().value(s.eigenvalues[i], s.eigenvalues[j]);
      const Complex term = c * std::conj(xc(i, j)) * yc(i, j);
      acc += term;
      mag += std::abs(term);
    }
  }
  return real_checked(acc, mag);
}

double metric_eval(const MonotoneMetric& m, const PositivePoint& rho,
                   const TangentVector& x, const TangentVector& y) {
  return metric_eval(m, rho, x.m(), y.m());
}

CMat j_apply(const MonotoneMetric& m, const PositivePoint& rho,
             const CMat& y) {
  return apply_kernel(m.kernel(), rho.spec(), y);
}

CMat j_inverse(const MonotoneMetric& m, const PositivePoint& rho,
               const CMat& y) {
  const auto& s = rho.spec();
  CMat yc = s.to_eigenbasis(y);
  const int n = s.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      yc(i, j) /= m.kernel().value(s.eigenvalues[i], s.eigenvalues[j]);
    }
  }
  return s.from_eigenbasis(yc);
}

TangentBasis::TangentBasis(const PositivePoint& rho) : rho_(&rho) {
  const int n = rho.dim();
  const CMat& u = rho.spec().eigenvectors;
  for (int a = 0; a < n; ++a) {
    elements_.push_back(u.col(a) * u.col(a).adjoint());
    ia_.push_back(a);
    ib_.push_back(a);
    kind_.push_back(1);
  }
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const CMat eab = u.col(a) * u.col(b).adjoint();
      elements_.push_back(eab + eab.adjoint());
      ia_.push_back(a);
      ib_.push_back(b);
      kind_.push_back(2);
      elements_.push_back(Complex(0, 1) * eab +
                          (Complex(0, 1) * eab).adjoint());
      ia_.push_back(a);
      ib_.push_back(b);
      kind_.push_back(3);
    }
  }
}

RVec TangentBasis::coords(const CMat& x) const {
  // Frame elements are HS-orthogonal with squared norms 1 (projectors) and
  // 2 (pairs); coords follow from HS inner products.
  RVec out(size());
  for (int j = 0; j < size(); ++j) {
    const double nrm2 = kind_[j] == 1 ? 1.0 : 2.0;
    out[j] = real_checked((elements_[j].adjoint() * x).trace(),
                          x.cwiseAbs().maxCoeff() + 1.0) /
             nrm2;
  }
  return out;
}

RVec TangentBasis::norms(const MonotoneMetric& m) const {
  const RVec& lam = rho_->spec().eigenvalues;
  RVec out(size());
  for (int j = 0; j < size(); ++j) {
    const double c = m.kernel().value(lam[ia_[j]], lam[ib_[j]]);
    out[j] = kind_[j] == 1 ? c : 2.0 * c;
  }
  return out;
}

std::vector<CMat> TangentBasis::orthonormal_frame(
    const MonotoneMetric& m) const {
  const RVec nn = norms(m);
  std::vector<CMat> out;
  out.reserve(elements_.size());
  for (int j = 0; j < size(); ++j) {
    if (!(nn[j] > 0.0)) {
      throw NumericError("tangent frame norm not positive under metric " +
                         m.id());
    }
    out.push_back(elements_[j] / std::sqrt(nn[j]));
  }
  return out;
}

RMat gram_matrix(const MonotoneMetric& m, const PositivePoint& rho,
                 const std::vector<CMat>& basis) {
  const int n = static_cast<int>(basis.size());
  RMat g(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      g(i, j) = g(j, i) = metric_eval(m, rho, basis[i], basis[j]);
    }
  }
  return g;
}

}  // namespace qig
