#pragma once

#include <cstddef>
#include <vector>

namespace slelab::stochastic {

struct TestReport {
  double statistic = 0.0;
  double p_value = 1.0;
  std::size_t n_x = 0;
  std::size_t n_y = 0;
  double threshold = 0.01;

  bool pass() const { return p_value > threshold; }
};

/// Kolmogorov distribution tail Q(lambda) = 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 lambda^2).
double kolmogorov_q(double lambda);

/// Two-sample KS test; asymptotic p-value with the Stephens small-sample
/// correction lambda = (sqrt(ne) + 0.12 + 0.11/sqrt(ne)) D.
TestReport ks_two_sample(std::vector<double> xs, std::vector<double> ys, double threshold = 0.01);

}  // namespace slelab::stochastic
