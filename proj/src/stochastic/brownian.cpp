#include "slelab/stochastic/brownian.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace slelab::stochastic {

namespace {

std::vector<double> branch(std::int64_t steps, double scale, StreamKey key) {
  std::vector<double> out(static_cast<std::size_t>(steps) + 1, 0.0);
  if (scale == 0.0) {
    return out;
  }
  NormalStream normals(key);
  for (std::int64_t k = 1; k <= steps; ++k) {
    out[k] = out[k - 1] + scale * normals.next();
  }
  return out;
}

}  // namespace

flow::DrivePath sample_brownian(double horizon, double dt, const StreamKey& key, double kappa, bool two_sided) {
  if (!(horizon > 0.0) || !(dt > 0.0)) {
    throw std::invalid_argument("sample_brownian: horizon and step must be positive");
  }
  if (kappa < 0.0) {
    throw std::invalid_argument("sample_brownian: kappa must be non-negative");
  }
  const std::int64_t steps = flow::grid_steps(horizon, dt);
  const double scale = std::sqrt(kappa * dt);
  StreamKey fwd = key;
  fwd.lane = 2 * key.lane;
  std::vector<double> backward;
  if (two_sided) {
    StreamKey bwd = key;
    bwd.lane = 2 * key.lane + 1;
    backward = branch(steps, scale, bwd);
  }
  return flow::DrivePath(dt, branch(steps, scale, fwd), std::move(backward), kappa);
}

}  // namespace slelab::stochastic
