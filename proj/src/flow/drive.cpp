#include "slelab/flow/drive.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace slelab::flow {

std::int64_t grid_steps(double t, double step) {
  if (!(step > 0.0)) {
    throw std::invalid_argument("grid_steps: step must be positive");
  }
  const double ratio = t / step;
  const auto k = static_cast<std::int64_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(k)) > 1e-9 * std::max(1.0, std::abs(ratio))) {
    throw std::invalid_argument("time " + std::to_string(t) + " is not a multiple of the step " +
                                std::to_string(step));
  }
  return k;
}

DrivePath::DrivePath(double step, std::vector<double> forward, std::vector<double> backward, double kappa)
    : step_(step), forward_(std::move(forward)), backward_(std::move(backward)), kappa_(kappa) {
  if (!(step_ > 0.0)) {
    throw std::invalid_argument("DrivePath: step must be positive");
  }
  if (forward_.empty() || forward_.front() != 0.0) {
    throw std::invalid_argument("DrivePath: Y(0) must be 0");
  }
  if (!backward_.empty() && backward_.front() != 0.0) {
    throw std::invalid_argument("DrivePath: backward branch must start at Y(0) = 0");
  }
  if (kappa_ < 0.0) {
    throw std::invalid_argument("DrivePath: kappa must be non-negative");
  }
}

DrivePath DrivePath::zero(double horizon, double step, bool two_sided) {
  const auto steps = static_cast<std::size_t>(std::ceil(horizon / step - 1e-9));
  std::vector<double> fwd(steps + 1, 0.0);
  std::vector<double> bwd;
  if (two_sided) {
    bwd.assign(steps + 1, 0.0);
  }
  return DrivePath(step, std::move(fwd), std::move(bwd), 0.0);
}

double DrivePath::at(std::int64_t k) const {
  if (k > max_index() || k < min_index()) {
    throw std::out_of_range("DrivePath: index " + std::to_string(k) + " outside [" +
                            std::to_string(min_index()) + ", " + std::to_string(max_index()) + "]");
  }
  return k >= 0 ? forward_[static_cast<std::size_t>(k)] : backward_[static_cast<std::size_t>(-k)];
}

std::int64_t DrivePath::index_of(double t) const { return grid_steps(t, step_); }

DrivePath DrivePath::time_rescaled(int n) const {
  if (n < 1) {
    throw std::invalid_argument("DrivePath::time_rescaled: n must be >= 1");
  }
  return DrivePath(step_ / n, forward_, backward_, kappa_ * n);
}

std::vector<double> DrivePath::samples() const {
  std::vector<double> out;
  out.reserve(backward_.size() + forward_.size());
  for (std::int64_t k = min_index(); k <= max_index(); ++k) {
    out.push_back(at(k));
  }
  return out;
}

}  // namespace slelab::flow
