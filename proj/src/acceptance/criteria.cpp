#include "slelab/acceptance/criteria.hpp"

#include "slelab/algebra/minimal_model.hpp"
#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/algebra/verma.hpp"
#include "slelab/algebra/virasoro.hpp"
#include "slelab/bridge/cft_bridge.hpp"
#include "slelab/flow/loewner.hpp"
#include "slelab/io/json_codec.hpp"
#include "slelab/stochastic/brownian.hpp"
#include "slelab/stochastic/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

namespace slelab::acceptance {

using algebra::Partition;
using algebra::PBWVector;
using algebra::ParamPoly;
using algebra::Rational;
using algebra::VermaParams;
using flow::CPoint;

namespace {

// Tolerances and sizes, fixed here.
constexpr double kClosedFormTol = 1e-9;
constexpr double kConjugationTol = 1e-6;
constexpr double kHydroTol = 1e-3;
constexpr double kRoundTripTol = 1e-8;
constexpr double kPValue = 0.01;
constexpr double kMaxSwallow = 0.05;
constexpr int kStatSeeds = 10;
constexpr int kStatSeedsRequired = 9;
constexpr std::size_t kStatSamples = 2000;
constexpr std::size_t kBrownianPaths = 10000;
constexpr double kStdErrors = 3.0;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(3);
  os << x;
  return os.str();
}

CriterionResult verdict(bool ok, std::string detail) {
  CriterionResult r;
  r.passed = ok;
  r.detail = std::move(detail);
  return r;
}

// ---- 1 ----------------------------------------------------------------------

CriterionResult level2_correspondence() {
  std::mt19937_64 rng(20251016);
  int checked = 0;
  std::string bad;
  for (int i = 0; i < 20; ++i) {
    const long q = 1 + static_cast<long>(rng() % 60);
    const long p = 1 + static_cast<long>(rng() % static_cast<unsigned long>(20 * q));
    const Rational kappa(p, q);
    const auto kp = algebra::kappa_parameterization(kappa);
    const auto params = VermaParams::numeric(kp.c, kp.delta);
    const PBWVector v(2, params, {{Partition{2}, ParamPoly(1)}, {Partition{1, 1}, ParamPoly(-kappa / Rational(4))}});
    if (!algebra::act_raising(v, 1).is_zero() || !algebra::act_raising(v, 2).is_zero()) {
      bad += " " + kappa.str();
    }
    ++checked;
  }
  return verdict(bad.empty(), std::to_string(checked) + " random kappa in (0,20], exact" +
                                  (bad.empty() ? "" : "; not annihilated at" + bad));
}

// ---- 2, 3 -------------------------------------------------------------------

VermaParams yang_lee_identity() { return VermaParams::numeric(Rational(-22, 5), Rational(0)); }

std::vector<Rational> expected_level4() {
  return {Rational(1), Rational(5, 27), Rational(-5, 3), Rational(125, 27), Rational(-125, 108)};
}

CriterionResult yang_lee_singular() {
  const auto vectors = algebra::find_singular_vectors(4, yang_lee_identity());
  if (vectors.size() != 1) {
    return verdict(false, "expected one singular vector at level 4, found " + std::to_string(vectors.size()));
  }
  const auto basis = algebra::partitions_of(4);
  const auto expected = expected_level4();
  std::string got;
  bool ok = true;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const ParamPoly coeff = vectors[0].coefficient(basis[i]);
    got += (i ? ", " : "") + coeff.str();
    ok = ok && coeff == ParamPoly(expected[i]);
  }
  return verdict(ok, "(" + got + ")");
}

CriterionResult null_vector() {
  const auto params = yang_lee_identity();
  const auto basis = algebra::partitions_of(4);
  const auto expected = expected_level4();
  PBWVector level4(4, params);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    level4.add_term(basis[i], ParamPoly(expected[i]));
  }
  const std::vector<PBWVector> generators{PBWVector(1, params, {{Partition{1}, ParamPoly(1)}}), level4};
  const PBWVector candidate(4, params, {{Partition{4}, ParamPoly(1)}, {Partition{2, 2}, ParamPoly(Rational(-5, 3))}});
  const PBWVector residue = algebra::submodule_reduce(candidate, generators);
  return verdict(residue.is_zero(), "residue " + (residue.is_zero() ? std::string("0") : residue.str()));
}

// ---- 4 ----------------------------------------------------------------------

CriterionResult kappa_solver() {
  const algebra::MinimalModel yl{5, 2};
  const algebra::KacLabel identity{1, 1};
  const auto s2 = bridge::solve_kappa_null(2, 2, yl, identity);
  const auto s1 = bridge::solve_kappa_null(2, 1, yl, identity);
  const auto nn2 = s2.non_negative_roots();
  const bool unique40 = s2.roots.size() == 1 && nn2.size() == 1 && nn2[0] == Rational(40) && !s2.every_kappa &&
                        s2.residue_kappa_degree <= 1;
  const bool s1_none = s1.non_negative_roots().empty() && !s1.every_kappa;
  bool singular_empty = true;
  for (int n : {2, 3}) {
    for (int s : {1, 2}) {
      singular_empty = singular_empty && bridge::solve_kappa_singular(n, s).empty();
    }
  }
  std::string detail = "s=2 -> {";
  for (std::size_t i = 0; i < nn2.size(); ++i) {
    detail += (i ? "," : "") + nn2[i].str();
  }
  detail += "} (residue degree " + std::to_string(s2.residue_kappa_degree) + "); s=1 non-negative roots " +
            std::to_string(s1.non_negative_roots().size()) + "; singular n=2,3 " +
            (singular_empty ? "empty" : "NOT empty");
  return verdict(unique40 && s1_none && singular_empty, detail);
}

// ---- 5 ----------------------------------------------------------------------

CriterionResult minimal_model_tables() {
  const algebra::MinimalModel yl{5, 2};
  bool ok = algebra::minimal_model_c(yl) == Rational(-22, 5);
  ok = ok && algebra::minimal_model_weight(yl, {1, 2}) == Rational(-1, 5);
  const auto at10 = algebra::kappa_parameterization(Rational(10));
  ok = ok && at10.delta == Rational(-1, 5) && at10.c == Rational(-22, 5);
  int labels = 0;
  for (const algebra::MinimalModel m : {algebra::MinimalModel{5, 2}, algebra::MinimalModel{4, 3}}) {
    for (int r = 1; r < m.p_prime; ++r) {
      for (int s = 1; s < m.p; ++s) {
        ok = ok && algebra::minimal_model_weight(m, {r, s}) ==
                       algebra::minimal_model_weight(m, {m.p_prime - r, m.p - s});
        ++labels;
      }
    }
  }
  return verdict(ok, "c(5,2) = -22/5, D12 = -1/5 = D(kappa=10), symmetry over " + std::to_string(labels) + " labels");
}

// ---- 6 ----------------------------------------------------------------------

CPoint closed_form_g(CPoint z, int n, double t) {
  return flow::principal_root(flow::sqrt_upper(flow::int_power(z, 2 * n) + 4.0 * n * t), n);
}

CriterionResult zero_drive() {
  const double t = 0.5;
  const auto drive = flow::DrivePath::zero(1.0, 1e-4);
  double g_err = 0.0;
  double trace_err = 0.0;
  double tau_err = 0.0;
  int swallowed_off_ray = 0;
  for (int n = 1; n <= 3; ++n) {
    const flow::FlowConfig cfg{n, 1, 1e-4, 1e-8};
    for (int k = 0; k < 20; ++k) {
      const double theta = std::numbers::pi / n * (k + 0.5) / 20.0;
      const CPoint z = std::polar(0.4 + 0.08 * k, theta);
      const auto r = flow::flow_forward(z, drive, cfg, t);
      if (!r.is_alive()) {
        ++swallowed_off_ray;
        continue;
      }
      g_err = std::max(g_err, std::abs(r.value() - closed_form_g(z, n, t)));
    }
    const auto curve = flow::trace_sample(drive, cfg, {0.25, 0.5, 1.0});
    for (const auto& pt : curve.points) {
      const CPoint expected = std::pow(4.0 * n * pt.t, 1.0 / (2 * n)) * flow::Wedge{n}.bisector();
      trace_err = std::max(trace_err, std::abs(pt.point - expected));
    }
    for (int k = 0; k < 20; ++k) {
      const double radius = 0.05 + 0.045 * k;
      const auto r = flow::flow_forward(radius * flow::Wedge{n}.bisector(), drive, cfg, 1.0);
      const double expected = std::pow(radius, 2 * n) / (4.0 * n);
      tau_err = std::max(tau_err, r.is_alive() ? INFINITY : std::abs(r.tau() - expected));
    }
  }
  const bool ok = swallowed_off_ray == 0 && g_err <= kClosedFormTol && trace_err <= kClosedFormTol &&
                  tau_err <= kClosedFormTol;
  return verdict(ok, "max |g - closed form| " + fmt(g_err) + ", trace " + fmt(trace_err) + ", tau " + fmt(tau_err) +
                         (swallowed_off_ray ? ", off-ray swallowed " + std::to_string(swallowed_off_ray) : ""));
}

// ---- 7 ----------------------------------------------------------------------

// Independent oracle: RK4 on dg/dt = 2 / (g^{n-1} (g^n - Y)) in g itself,
// with the same piecewise-constant drive.
CPoint rk4_flow(CPoint z, const flow::DrivePath& drive, int n, double dt, double t, int substeps) {
  auto rhs = [n](CPoint g, double y) {
    const CPoint gp = flow::int_power(g, n - 1);
    return 2.0 / (gp * (gp * g - y));
  };
  const std::int64_t steps = flow::grid_steps(t, dt);
  const std::int64_t stride = flow::grid_steps(dt, drive.step());
  const double h = dt / substeps;
  CPoint g = z;
  for (std::int64_t k = 0; k < steps; ++k) {
    const double y = drive.at((k + 1) * stride);
    for (int i = 0; i < substeps; ++i) {
      const CPoint k1 = rhs(g, y);
      const CPoint k2 = rhs(g + 0.5 * h * k1, y);
      const CPoint k3 = rhs(g + 0.5 * h * k2, y);
      const CPoint k4 = rhs(g + h * k3, y);
      g += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
  }
  return g;
}

CriterionResult conjugation_oracle() {
  const int n = 2;
  const double kappa = 2.0;
  const double dt = 1e-4;
  const double t = 0.5;
  const flow::FlowConfig cfg{n, 1, dt, 1e-8};
  double worst_gap = 0.0;
  double worst_rk4 = 0.0;
  int incomparable = 0;
  for (int seed = 1; seed <= 10; ++seed) {
    // grade-1 path on [0, n t] with step n dt; its time-rescaled copy drives grade n
    const auto drive = stochastic::sample_brownian(n * t, n * dt, {static_cast<std::uint64_t>(seed), 0, 0}, kappa);
    const CPoint w(-0.9 + 0.2 * seed, 0.5 + 0.15 * seed);  // z^2, Im >= 0.5
    const CPoint z = flow::principal_root(w, n);
    const auto res = flow::conjugation_check(z, drive, cfg, t);
    if (!res.comparable) {
      ++incomparable;
      continue;
    }
    worst_gap = std::max(worst_gap, res.gap);
    const CPoint oracle = rk4_flow(z, drive.time_rescaled(n), n, dt, t, 4);
    worst_rk4 = std::max(worst_rk4, std::abs(res.lhs - oracle));
  }
  const bool ok = incomparable == 0 && worst_gap <= kConjugationTol && worst_rk4 <= kConjugationTol;
  return verdict(ok, "10 paths: max conjugation gap " + fmt(worst_gap) + ", max |flow - RK4| " + fmt(worst_rk4) +
                         (incomparable ? ", incomparable " + std::to_string(incomparable) : ""));
}

// ---- 8 ----------------------------------------------------------------------

CriterionResult hydrodynamic() {
  const double t = 1.0;
  const double dt = 1e-4;
  double worst = 0.0;
  std::string worst_case;
  int failures = 0;
  int cases = 0;
  for (int n = 1; n <= 2; ++n) {
    const flow::FlowConfig cfg{n, 1, dt, 1e-8};
    const CPoint z = 1e3 * flow::Wedge{n}.bisector();
    std::vector<std::pair<std::string, flow::DrivePath>> drives;
    drives.emplace_back("zero", flow::DrivePath::zero(t, dt));
    for (int seed = 1; seed <= 10; ++seed) {
      drives.emplace_back("seed " + std::to_string(seed),
                          stochastic::sample_brownian(t, dt, {static_cast<std::uint64_t>(seed), 0, 0}, 2.0));
    }
    for (const auto& [label, drive] : drives) {
      const CPoint disp = flow::flow_displacement(z, drive, cfg, t).value();
      const double rel = std::abs(disp * flow::int_power(z, 2 * n - 1) - 2.0 * t) / (2.0 * t);
      ++cases;
      if (rel > kHydroTol) {
        ++failures;
      }
      if (rel > worst) {
        worst = rel;
        worst_case = "n=" + std::to_string(n) + " " + label;
        if (n == 1) {
          // next term of the expansion: (g - z) z = 2t + 2 int_0^t Y ds / z + ...
          double integral = 0.0;
          const std::int64_t steps = flow::grid_steps(t, dt);
          for (std::int64_t k = 1; k <= steps; ++k) {
            integral += drive.at(k) * dt;
          }
          worst_case += " (next-order term 2 int Y / z gives " + fmt(std::abs(integral) / (t * std::abs(z))) + ")";
        }
      }
    }
  }
  return verdict(failures == 0, std::to_string(cases) + " cases (zero drive + kappa=2 seeds 1-10), |z|=1e3: max rel " +
                                    fmt(worst) + " at " + worst_case + "; " + std::to_string(failures) +
                                    " case(s) over 1e-3");
}

// ---- 9 ----------------------------------------------------------------------

std::vector<std::pair<std::string, stochastic::ExperimentParams>> statistical_sets() {
  using stochastic::ExperimentParams;
  const CPoint z1(0.0, 2.0);
  const CPoint z2 = std::polar(1.5, std::numbers::pi / 4);
  auto base = [](int n, CPoint z) {
    ExperimentParams p;
    p.n = n;
    p.kappa = 2.0;
    p.z = z;
    p.samples = kStatSamples;
    p.threshold = kPValue;
    p.max_swallow_fraction = kMaxSwallow;
    return p;
  };
  std::vector<std::pair<std::string, ExperimentParams>> out;
  auto si1 = base(1, z1);
  si1.alpha = 4.0;
  si1.t = 0.25;
  out.emplace_back("scale-invariance", si1);
  auto si2 = base(2, z2);
  si2.alpha = 2.0;
  si2.t = 0.2;
  out.emplace_back("scale-invariance", si2);
  auto st1 = base(1, z1);
  st1.t0 = 0.1;
  st1.t1 = 0.35;
  out.emplace_back("stationarity", st1);
  auto st2 = base(2, z2);
  st2.t0 = 0.1;
  st2.t1 = 0.3;
  out.emplace_back("stationarity", st2);
  auto bl1 = base(1, z1);
  bl1.t = 0.25;
  out.emplace_back("backward-law", bl1);
  auto bl2 = base(2, z2);
  bl2.t = 0.2;
  out.emplace_back("backward-law", bl2);
  return out;
}

CriterionResult statistical_laws() {
  bool ok = true;
  std::string detail;
  for (auto [name, params] : statistical_sets()) {
    int passes = 0;
    double max_swallow = 0.0;
    for (int seed = 1; seed <= kStatSeeds; ++seed) {
      params.seed = static_cast<std::uint64_t>(seed);
      const auto report = name == "scale-invariance" ? stochastic::scale_invariance_experiment(params)
                          : name == "stationarity"   ? stochastic::stationarity_experiment(params)
                                                     : stochastic::backward_law_experiment(params);
      max_swallow = std::max(max_swallow, report.swallow_fraction);
      const bool seed_ok = report.real_part.p_value > kPValue && report.imag_part.p_value > kPValue &&
                           report.swallow_fraction < kMaxSwallow;
      passes += seed_ok ? 1 : 0;
    }
    const bool set_ok = passes >= kStatSeedsRequired;
    ok = ok && set_ok;
    detail += (detail.empty() ? "" : "; ") + name + " n=" + std::to_string(params.n) + " " + std::to_string(passes) +
              "/" + std::to_string(kStatSeeds) + (max_swallow > 0 ? " (swallow " + fmt(max_swallow) + ")" : "");
  }
  return verdict(ok, detail);
}

// ---- 10 ---------------------------------------------------------------------

CriterionResult brownian_normalization() {
  const double kappa = 2.0;
  const double dt = 1e-3;
  const std::vector<std::pair<double, double>> pairs{{0.3, 0.7}, {0.5, 0.5}, {0.2, 0.9}};
  std::vector<double> sum(pairs.size(), 0.0);
  std::vector<double> sum_sq(pairs.size(), 0.0);
  for (std::size_t i = 0; i < kBrownianPaths; ++i) {
    const auto path = stochastic::sample_brownian(1.0, dt, {77, i, 0}, kappa);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      const double prod = path.at_time(pairs[k].first) * path.at_time(pairs[k].second);
      sum[k] += prod;
      sum_sq[k] += prod * prod;
    }
  }
  bool ok = true;
  std::string detail;
  const double n = static_cast<double>(kBrownianPaths);
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const double mean = sum[k] / n;
    const double var = (sum_sq[k] - n * mean * mean) / (n - 1.0);
    const double se = std::sqrt(var / n);
    const double target = kappa * std::min(pairs[k].first, pairs[k].second);
    const double z = std::abs(mean - target) / se;
    ok = ok && z <= kStdErrors;
    detail += (k ? "; " : "") + std::string("(") + fmt(pairs[k].first) + "," + fmt(pairs[k].second) + "): " +
              fmt(mean) + " vs " + fmt(target) + " (" + fmt(z) + " se)";
  }
  return verdict(ok, detail);
}

// ---- 11 ---------------------------------------------------------------------

std::string certificate_bundle(std::uint64_t seed) {
  io::Json j;
  j["bridge"] = io::to_json(bridge::solve_kappa_null(2, 2, {5, 2}, {1, 1}));
  stochastic::ExperimentParams p;
  p.seed = seed;
  p.samples = 50;
  p.alpha = 4.0;
  j["experiment"] = io::to_json(stochastic::scale_invariance_experiment(p));
  const auto drive = stochastic::sample_brownian(0.5, 1e-4, {seed, 0, 0}, 40.0, true);
  const flow::FlowConfig cfg{2, 2, 1e-4, 1e-8};
  j["trace"] = io::to_json(flow::trace_sample(drive, cfg, flow::uniform_times(0.5, 0.05)));
  return j.dump(2);
}

CriterionResult round_trip_determinism() {
  double worst = 0.0;
  int cases = 0;
  for (int n = 1; n <= 2; ++n) {
    const flow::FlowConfig cfg{n, 1, 1e-4, 1e-8};
    for (int seed = 0; seed <= 4; ++seed) {
      const auto drive = seed == 0 ? flow::DrivePath::zero(1.0, 1e-4)
                                   : stochastic::sample_brownian(1.0, 1e-4, {static_cast<std::uint64_t>(seed), 0, 0}, 2.0);
      for (int k = 0; k < 4; ++k) {
        const CPoint w(-1.0 + 0.6 * k, 0.5 + 0.5 * k);  // z^n with Im >= 0.5
        const CPoint z = flow::principal_root(w, n);
        for (double t : {0.25, 1.0}) {
          const auto g = flow::flow_forward(z, drive, cfg, t);
          if (!g.is_alive()) {
            return verdict(false, "test point swallowed");
          }
          worst = std::max(worst, std::abs(flow::inverse_map(g.value(), drive, cfg, t) - z));
          ++cases;
        }
      }
    }
  }
  const bool identical = certificate_bundle(7) == certificate_bundle(7);
  return verdict(worst <= kRoundTripTol && identical,
                 std::to_string(cases) + " round trips, max error " + fmt(worst) + "; certificates " +
                     (identical ? "byte-identical" : "DIFFER") + " across reruns");
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "level-2 correspondence", 1.0, level2_correspondence},
      {2, "Yang-Lee singular vector", 1.0, yang_lee_singular},
      {3, "null vector", 1.0, null_vector},
      {4, "kappa solver", 5.0, kappa_solver},
      {5, "minimal-model tables", 1.0, minimal_model_tables},
      {6, "zero-drive closed forms", 1.0, zero_drive},
      {7, "conjugation oracle", 60.0, conjugation_oracle},
      {8, "hydrodynamic normalization", 30.0, hydrodynamic},
      {9, "statistical laws", 600.0, statistical_laws},
      {10, "Brownian normalization", 30.0, brownian_normalization},
      {11, "round trip and determinism", 30.0, round_trip_determinism},
  };
  return all;
}

CriterionResult run_criterion(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  CriterionResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r = verdict(false, std::string("exception: ") + e.what());
  }
  r.id = c.id;
  r.name = c.name;
  r.budget_seconds = c.budget_seconds;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (r.seconds > c.budget_seconds) {
    r.passed = false;
    r.detail += "; over time budget " + fmt(c.budget_seconds) + "s";
  }
  return r;
}

std::string format_line(const CriterionResult& r) {
  std::ostringstream os;
  os << (r.passed ? "[PASS] " : "[FAIL] ") << r.id << " " << r.name << " (" << fmt(r.seconds) << "s): " << r.detail;
  return os.str();
}

std::vector<CriterionResult> run_suite(const std::vector<int>& ids, std::ostream& out) {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    if (!ids.empty() && std::find(ids.begin(), ids.end(), c.id) == ids.end()) {
      continue;
    }
    results.push_back(run_criterion(c));
    out << format_line(results.back()) << std::endl;
  }
  return results;
}

}  // namespace slelab::acceptance
