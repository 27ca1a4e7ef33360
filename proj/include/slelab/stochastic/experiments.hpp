#pragma once

#include "slelab/flow/complex_ops.hpp"
#include "slelab/stochastic/ks.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace slelab::stochastic {

struct ExperimentParams {
  int n = 1;
  double kappa = 2.0;
  double alpha = 1.0;   // scale invariance
  double t = 0.25;      // scale invariance, backward law
  double t0 = 0.1;      // stationarity
  double t1 = 0.35;     // stationarity
  flow::CPoint z{0.0, 2.0};
  std::size_t samples = 2000;
  std::uint64_t seed = 0;
  double step = 1e-4;
  double eps_swallow = 1e-8;
  bool shared_streams = false;
  double threshold = 0.01;
  double max_swallow_fraction = 0.05;
};

enum class ExperimentStatus { pass, fail, inconclusive };

std::string status_name(ExperimentStatus s);

struct ExperimentReport {
  std::string experiment;
  ExperimentParams params;
  TestReport real_part;
  TestReport imag_part;
  std::size_t swallowed = 0;
  double swallow_fraction = 0.0;
  ExperimentStatus status = ExperimentStatus::inconclusive;
  std::string note;
};

/// Samples of the two sides of a law identity, index-aligned; a missing
/// value marks a swallowed sample.
struct PairedSamples {
  std::vector<flow::CPoint> left;
  std::vector<flow::CPoint> right;
  std::vector<bool> keep;
};

/// alpha^{-1/(2n)} g_{alpha t}(alpha^{1/(2n)} z) against g_t(z).
PairedSamples scale_invariance_samples(const ExperimentParams& p);
/// g_{t1} o g_{t0}^{-1} construction (shifted_flow) against g_{t1 - t0}(z).
PairedSamples stationarity_samples(const ExperimentParams& p);
/// g_{-t}(z) against root((g_t^{-1}(root(z^n + Y_t)))^n - Y_t).
PairedSamples backward_law_samples(const ExperimentParams& p);

ExperimentReport compare(const std::string& name, const ExperimentParams& p, const PairedSamples& samples);

ExperimentReport scale_invariance_experiment(const ExperimentParams& p);
ExperimentReport stationarity_experiment(const ExperimentParams& p);
ExperimentReport backward_law_experiment(const ExperimentParams& p);

}  // namespace slelab::stochastic
