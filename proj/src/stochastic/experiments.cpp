#include "slelab/stochastic/experiments.hpp"

#include "slelab/errors.hpp"
#include "slelab/flow/loewner.hpp"
#include "slelab/stochastic/brownian.hpp"

#include <cmath>
#include <stdexcept>

namespace slelab::stochastic {

using flow::CPoint;
using flow::FlowConfig;
using flow::FlowResult;

std::string status_name(ExperimentStatus s) {
  switch (s) {
    case ExperimentStatus::pass:
      return "pass";
    case ExperimentStatus::fail:
      return "fail";
    case ExperimentStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

namespace {

FlowConfig config_of(const ExperimentParams& p) {
  FlowConfig cfg{p.n, 1, p.step, p.eps_swallow};
  cfg.validate();
  return cfg;
}

void check_common(const ExperimentParams& p) {
  if (p.samples == 0) {
    throw std::invalid_argument("experiment needs at least one sample");
  }
  if (p.kappa < 0.0) {
    throw std::invalid_argument("kappa must be non-negative");
  }
  if (!flow::Wedge{p.n}.contains(p.z)) {
    throw DomainError("experiment point outside the wedge");
  }
}

StreamKey left_key(const ExperimentParams& p, std::size_t i) { return {p.seed, i, 0}; }
StreamKey right_key(const ExperimentParams& p, std::size_t i) { return {p.seed, i, p.shared_streams ? 0u : 1u}; }

// Drive long enough for `horizon`; a zero horizon still gets one step.
flow::DrivePath drive_for(const ExperimentParams& p, double horizon, const StreamKey& key, bool two_sided) {
  return sample_brownian(std::max(horizon, p.step), p.step, key, p.kappa, two_sided);
}

void record(PairedSamples& out, std::size_t i, const FlowResult& left, const FlowResult& right) {
  out.keep[i] = left.is_alive() && right.is_alive();
  if (left.is_alive()) {
    out.left[i] = left.value();
  }
  if (right.is_alive()) {
    out.right[i] = right.value();
  }
}

PairedSamples sized(std::size_t n) {
  return {std::vector<CPoint>(n), std::vector<CPoint>(n), std::vector<bool>(n, false)};
}

}  // namespace

PairedSamples scale_invariance_samples(const ExperimentParams& p) {
  check_common(p);
  if (!(p.alpha > 0.0)) {
    throw std::invalid_argument("alpha must be positive");
  }
  const FlowConfig cfg = config_of(p);
  const double lambda = std::pow(p.alpha, 1.0 / (2.0 * p.n));
  const double scaled_t = flow::grid_steps(p.alpha * p.t, p.step) * p.step;
  PairedSamples out = sized(p.samples);
  for (std::size_t i = 0; i < p.samples; ++i) {
    const auto left_drive = drive_for(p, scaled_t, left_key(p, i), false);
    FlowResult left = flow::flow_forward(lambda * p.z, left_drive, cfg, scaled_t);
    if (left.is_alive()) {
      left = FlowResult::alive(left.value() / lambda);
    }
    const auto right_drive = drive_for(p, p.t, right_key(p, i), false);
    record(out, i, left, flow::flow_forward(p.z, right_drive, cfg, p.t));
  }
  return out;
}

PairedSamples stationarity_samples(const ExperimentParams& p) {
  check_common(p);
  if (!(p.t1 > p.t0) || p.t0 < 0.0) {
    throw std::invalid_argument("stationarity needs t1 > t0 >= 0");
  }
  const FlowConfig cfg = config_of(p);
  const double span = p.t1 - p.t0;
  PairedSamples out = sized(p.samples);
  for (std::size_t i = 0; i < p.samples; ++i) {
    const auto left_drive = drive_for(p, p.t1, left_key(p, i), false);
    FlowResult left = FlowResult::swallowed(p.t1);
    try {
      left = FlowResult::alive(flow::shifted_flow(p.z, left_drive, cfg, p.t0, span));
    } catch (const NumericalError&) {
    }
    const auto right_drive = drive_for(p, span, right_key(p, i), false);
    record(out, i, left, flow::flow_forward(p.z, right_drive, cfg, span));
  }
  return out;
}

PairedSamples backward_law_samples(const ExperimentParams& p) {
  check_common(p);
  if (p.t < 0.0) {
    throw std::invalid_argument("backward law needs t >= 0");
  }
  const FlowConfig cfg = config_of(p);
  PairedSamples out = sized(p.samples);
  for (std::size_t i = 0; i < p.samples; ++i) {
    const auto left_drive = drive_for(p, p.t, left_key(p, i), true);
    const FlowResult left = flow::flow_backward(p.z, left_drive, cfg, p.t);

    const auto right_drive = drive_for(p, p.t, right_key(p, i), false);
    const double y_t = right_drive.at_time(p.t);
    const CPoint start = flow::principal_root(flow::int_power(p.z, p.n) + y_t, p.n);
    const CPoint pre = flow::inverse_map(start, right_drive, cfg, p.t);
    const CPoint right = flow::principal_root(flow::int_power(pre, p.n) - y_t, p.n);
    record(out, i, left, FlowResult::alive(right));
  }
  return out;
}

ExperimentReport compare(const std::string& name, const ExperimentParams& p, const PairedSamples& samples) {
  ExperimentReport report;
  report.experiment = name;
  report.params = p;
  std::vector<double> lr, li, rr, ri;
  for (std::size_t i = 0; i < samples.keep.size(); ++i) {
    if (!samples.keep[i]) {
      ++report.swallowed;
      continue;
    }
    lr.push_back(samples.left[i].real());
    li.push_back(samples.left[i].imag());
    rr.push_back(samples.right[i].real());
    ri.push_back(samples.right[i].imag());
  }
  report.swallow_fraction = static_cast<double>(report.swallowed) / static_cast<double>(samples.keep.size());
  if (lr.empty()) {
    report.status = ExperimentStatus::inconclusive;
    report.note = "every sample was swallowed";
    return report;
  }
  report.real_part = ks_two_sample(lr, rr, p.threshold);
  report.imag_part = ks_two_sample(li, ri, p.threshold);
  if (report.swallow_fraction > p.max_swallow_fraction) {
    report.status = ExperimentStatus::inconclusive;
    report.note = "swallow fraction above the allowed maximum";
  } else if (report.real_part.pass() && report.imag_part.pass()) {
    report.status = ExperimentStatus::pass;
  } else {
    report.status = ExperimentStatus::fail;
  }
  if (report.note.empty()) {
    report.note = "componentwise KS; threshold and sample size are test choices";
  }
  return report;
}

ExperimentReport scale_invariance_experiment(const ExperimentParams& p) {
  return compare("scale-invariance", p, scale_invariance_samples(p));
}

ExperimentReport stationarity_experiment(const ExperimentParams& p) {
  return compare("stationarity", p, stationarity_samples(p));
}

ExperimentReport backward_law_experiment(const ExperimentParams& p) {
  return compare("backward-law", p, backward_law_samples(p));
}

}  // namespace slelab::stochastic
