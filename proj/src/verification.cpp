#include "qig/verification.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "qig/g_geometry.hpp"
#include "qig/parallel.hpp"
#include "qig/rng.hpp"
#include "qig/spectral.hpp"

namespace qig {

using nlohmann::json;

int StochasticMap::n_in() const {
  if (kraus.empty()) throw DomainError("StochasticMap: no Kraus operators");
  return static_cast<int>(kraus.front().cols());
}

int StochasticMap::n_out() const {
  if (kraus.empty()) throw DomainError("StochasticMap: no Kraus operators");
  return static_cast<int>(kraus.front().rows());
}

CMat StochasticMap::apply(const CMat& rho) const {
  CMat out = CMat::Zero(n_out(), n_out());
  for (const CMat& k : kraus) out += k * rho * k.adjoint();
  return out;
}

double StochasticMap::completeness_defect() const {
  CMat acc = CMat::Zero(n_in(), n_in());
  for (const CMat& k : kraus) acc += k.adjoint() * k;
  return mat_scale(acc - CMat::Identity(n_in(), n_in()));
}

StochasticMap sample_cptp(int n_in, int n_out, int m, std::uint64_t seed) {
  if (n_in < 1 || n_out < 1 || m < 1)
    throw DomainError("sample_cptp: dimensions and Kraus count must be >= 1");
  if (m * n_out < n_in)
    throw DomainError(
        "sample_cptp: need m * n_out >= n_in for a trace-preserving map");
  Rng rng(seed);
  CMat v = random_isometry(rng, m * n_out, n_in);
  StochasticMap t;
  t.kraus.reserve(m);
  for (int i = 0; i < m; ++i)
    t.kraus.push_back(v.block(i * n_out, 0, n_out, n_in));
  return t;
}

json TrialReport::to_json() const {
  return json{{"check", check},       {"subject", subject},
              {"seed", seed},         {"trials", trials},
              {"passed", passed},     {"max_violation", max_violation},
              {"properties", properties}, {"witness", witness}};
}

json mat_to_json(const CMat& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(row);
  }
  return rows;
}

CMat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty())
    throw DomainError("matrix json: expected a non-empty array of rows");
  int rows = static_cast<int>(j.size());
  int cols = static_cast<int>(j.at(0).size());
  CMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const json& row = j.at(i);
    if (static_cast<int>(row.size()) != cols)
      throw DomainError("matrix json: ragged rows");
    for (int c = 0; c < cols; ++c) {
      const json& e = row.at(c);
      if (!e.is_array() || e.size() != 2)
        throw DomainError("matrix json: entries must be [re, im] pairs");
      m(i, c) = Complex(e.at(0).get<double>(), e.at(1).get<double>());
    }
  }
  return m;
}

namespace {

double min_eigenvalue(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(hermitian_part(m),
                                         Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

struct MonoTrial {
  int n_in = 0, n_out = 0, m = 0;
  std::uint64_t map_seed = 0;
  CMat rho, x;
  bool skipped = false;
  double gap = 0.0;  // after - before; positive means violation
};

MonoTrial run_mono_trial(const MonotoneMetric& metric, const Rng& master,
                         int trial) {
  Rng tr = master.split(static_cast<std::uint64_t>(trial));
  MonoTrial t;
  t.n_in = 2 + static_cast<int>(tr.next_u64() % 2);
  t.n_out = 2 + static_cast<int>(tr.next_u64() % 2);
  t.m = 1 + static_cast<int>(tr.next_u64() % 3);
  if (t.m == 1) t.n_out = t.n_in;  // rank-1 maps must be unitary to keep rank
  t.map_seed = tr.next_u64();
  StochasticMap map = sample_cptp(t.n_in, t.n_out, t.m, t.map_seed);
  t.rho = random_positive(tr, t.n_in);
  t.x = random_hermitian(tr, t.n_in);
  CMat trho = map.apply(t.rho);
  if (min_eigenvalue(trho) < 1e-10 * std::abs(trho.trace())) {
    t.skipped = true;
    return t;
  }
  PositivePoint before_pt(t.rho);
  PositivePoint after_pt(trho);
  double before = metric_eval(metric, before_pt, t.x, t.x);
  double after = metric_eval(metric, after_pt, map.apply(t.x), map.apply(t.x));
  t.gap = after - before;
  return t;
}

constexpr double kMonoSlack = 1e-10;

struct EntropyTrial {
  // per-property gap beyond which the axiom is violated; NaN when skipped
  double positivity = 0.0, separation = 0.0, homogeneity = 0.0,
         convexity = 0.0, monotonicity = 0.0, differentiability = 0.0;
  int n = 0;
  CMat a, b;
  std::uint64_t map_seed = 0;
  int map_out = 0, map_m = 0;
};

EntropyTrial run_entropy_trial(const GFunction& g, const Rng& master,
                               int trial) {
  Rng tr = master.split(static_cast<std::uint64_t>(trial));
  EntropyTrial t;
  t.n = 2 + static_cast<int>(tr.next_u64() % 2);
  t.a = random_positive(tr, t.n);
  t.b = random_positive(tr, t.n);
  PositivePoint pa(t.a), pb(t.b);

  // (a) positivity and one-sided separation at equal traces
  PositivePoint ra(t.a / t.a.trace().real());
  PositivePoint rb(t.b / t.b.trace().real());
  double h_norm = entropy(g, ra, rb);
  t.positivity = -h_norm;  // violation when H < 0
  if (mat_scale(ra.m() - rb.m()) > 1e-2)
    t.separation = 1e-8 - h_norm;  // H must exceed 1e-8 away from the diagonal
  else
    t.separation = std::nan("");

  // (b) positive homogeneity of degree one
  double h = entropy(g, pa, pb);
  double c = 0.5 + 2.0 * tr.uniform();
  double hc = entropy(g, PositivePoint(c * t.a), PositivePoint(c * t.b));
  t.homogeneity = std::abs(hc - c * h) - 1e-10;

  // (c) joint convexity along a sampled chord
  CMat a2 = random_positive(tr, t.n);
  CMat b2 = random_positive(tr, t.n);
  double mid = entropy(g, PositivePoint(0.5 * (t.a + a2)),
                       PositivePoint(0.5 * (t.b + b2)));
  double chord = 0.5 * (h + entropy(g, PositivePoint(a2), PositivePoint(b2)));
  t.convexity = mid - chord - 1e-9;

  // (d) monotonicity under a sampled CPTP map
  t.map_out = 2 + static_cast<int>(tr.next_u64() % 2);
  t.map_m = 2 + static_cast<int>(tr.next_u64() % 2);
  t.map_seed = tr.next_u64();
  StochasticMap map = sample_cptp(t.n, t.map_out, t.map_m, t.map_seed);
  CMat ta = map.apply(t.a), tb = map.apply(t.b);
  double floor = 1e-10 * (std::abs(ta.trace()) + std::abs(tb.trace()));
  if (min_eigenvalue(ta) > floor && min_eigenvalue(tb) > floor)
    t.monotonicity =
        entropy(g, PositivePoint(ta), PositivePoint(tb)) - h - 1e-9;
  else
    t.monotonicity = std::nan("");

  // (e) differentiability: halving the FD step must not move the derivative
  CMat x = random_hermitian(tr, t.n);
  auto slope = [&](double step) {
    return (entropy(g, pa, PositivePoint(t.b + step * x)) -
            entropy(g, pa, PositivePoint(t.b - step * x))) /
           (2.0 * step);
  };
  double d1 = slope(1e-4), d2 = slope(5e-5);
  t.differentiability = std::abs(d1 - d2) / (1.0 + std::abs(d1)) - 1e-5;
  return t;
}

struct PropertyStats {
  double worst = -std::numeric_limits<double>::infinity();
  int worst_trial = -1;
  int used = 0;

  void add(int trial, double gap) {
    if (std::isnan(gap)) return;
    ++used;
    if (gap > worst) worst = gap, worst_trial = trial;
  }
  json to_json() const {
    return json{{"pass", worst <= 0.0},
                {"max_excess", used ? worst : 0.0},
                {"worst_trial", worst_trial},
                {"trials_used", used}};
  }
};

}  // namespace

TrialReport check_metric_monotonicity(const MonotoneMetric& metric, int trials,
                                      std::uint64_t seed) {
  if (trials < 1) throw DomainError("check_metric_monotonicity: trials >= 1");
  Rng master(seed);
  std::vector<double> gap(trials, std::nan(""));
  parallel_for(0, trials, [&](int i) {
    MonoTrial t = run_mono_trial(metric, master, i);
    if (!t.skipped) gap[i] = t.gap;
  });

  PropertyStats stats;
  for (int i = 0; i < trials; ++i) stats.add(i, gap[i]);

  TrialReport report;
  report.check = "metric-monotonicity";
  report.subject = metric.id();
  report.seed = seed;
  report.trials = trials;
  report.max_violation =
      stats.used ? std::max(0.0, stats.worst - kMonoSlack) : 0.0;
  report.passed = report.max_violation == 0.0;
  report.properties =
      json{{"contraction",
            {{"pass", report.passed},
             {"max_gap", stats.used ? stats.worst : 0.0},
             {"slack", kMonoSlack},
             {"worst_trial", stats.worst_trial},
             {"trials_used", stats.used}}}};
  if (stats.worst_trial >= 0) {
    MonoTrial worst = run_mono_trial(metric, master, stats.worst_trial);
    report.witness = json{{"trial", stats.worst_trial},
                          {"n_in", worst.n_in},
                          {"n_out", worst.n_out},
                          {"kraus_count", worst.m},
                          {"map_seed", worst.map_seed},
                          {"rho", mat_to_json(worst.rho)},
                          {"x", mat_to_json(worst.x)},
                          {"gap", worst.gap}};
  }
  return report;
}

TrialReport check_entropy_axioms(const GFunction& g, int trials,
                                 std::uint64_t seed) {
  if (trials < 1) throw DomainError("check_entropy_axioms: trials >= 1");
  Rng master(seed);
  const char* names[6] = {"positivity",   "separation",   "homogeneity",
                          "convexity",    "monotonicity", "differentiability"};
  std::vector<std::array<double, 6>> gaps(
      trials, {std::nan(""), std::nan(""), std::nan(""), std::nan(""),
               std::nan(""), std::nan("")});
  parallel_for(0, trials, [&](int i) {
    EntropyTrial t = run_entropy_trial(g, master, i);
    gaps[i] = {t.positivity,  t.separation,   t.homogeneity,
               t.convexity,   t.monotonicity, t.differentiability};
  });

  PropertyStats stats[6];
  for (int i = 0; i < trials; ++i)
    for (int p = 0; p < 6; ++p) stats[p].add(i, gaps[i][p]);

  TrialReport report;
  report.check = "entropy-axioms";
  report.subject = g.id();
  report.seed = seed;
  report.trials = trials;
  report.properties = json::object();
  int worst_prop = -1;
  for (int p = 0; p < 6; ++p) {
    report.properties[names[p]] = stats[p].to_json();
    if (stats[p].used && stats[p].worst > report.max_violation) {
      report.max_violation = stats[p].worst;
      worst_prop = p;
    }
  }
  report.passed = report.max_violation <= 0.0;
  if (!report.passed && worst_prop >= 0) {
    int trial = stats[worst_prop].worst_trial;
    EntropyTrial worst = run_entropy_trial(g, master, trial);
    report.witness = json{{"property", names[worst_prop]},
                          {"trial", trial},
                          {"rho", mat_to_json(worst.a)},
                          {"sigma", mat_to_json(worst.b)}};
  } else {
    report.max_violation = 0.0;
  }
  return report;
}

}  // namespace qig
