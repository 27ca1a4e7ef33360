#include "slelab/stochastic/ks.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace slelab::stochastic {

double kolmogorov_q(double lambda) {
  if (lambda <= 0.0) {
    return 1.0;
  }
  if (lambda < 0.2) {
    return 1.0;  // 1 - Q(0.2) is about 5e-13
  }
  double sum = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 200; ++j) {
    const double term = std::exp(-2.0 * j * j * lambda * lambda);
    sum += sign * term;
    if (term < 1e-18 * std::abs(sum)) {
      break;
    }
    sign = -sign;
  }
  return std::clamp(2.0 * sum, 0.0, 1.0);
}

TestReport ks_two_sample(std::vector<double> xs, std::vector<double> ys, double threshold) {
  if (xs.empty() || ys.empty()) {
    throw std::invalid_argument("ks_two_sample: samples must be nonempty");
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  const double nx = static_cast<double>(xs.size());
  const double ny = static_cast<double>(ys.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < xs.size() && j < ys.size()) {
    const double v = std::min(xs[i], ys[j]);
    while (i < xs.size() && xs[i] == v) {
      ++i;
    }
    while (j < ys.size() && ys[j] == v) {
      ++j;
    }
    d = std::max(d, std::abs(static_cast<double>(i) / nx - static_cast<double>(j) / ny));
  }
  TestReport report;
  report.statistic = d;
  report.n_x = xs.size();
  report.n_y = ys.size();
  report.threshold = threshold;
  const double ne = std::sqrt(nx * ny / (nx + ny));
  report.p_value = d == 0.0 ? 1.0 : kolmogorov_q((ne + 0.12 + 0.11 / ne) * d);
  return report;
}

}  // namespace slelab::stochastic
