#pragma once

#include <cstdint>
#include <vector>

namespace slelab::flow {

/// Driving function sampled on a uniform grid t_k = k * step. Index 0 is
/// t = 0 with Y = 0; two-sided paths also carry k < 0.
class DrivePath {
 public:
  /// forward[k] = Y(k step), backward[k] = Y(-k step); both start with 0.
  DrivePath(double step, std::vector<double> forward, std::vector<double> backward = {}, double kappa = 0.0);

  static DrivePath zero(double horizon, double step, bool two_sided = false);

  double step() const { return step_; }
  double kappa() const { return kappa_; }
  bool two_sided() const { return !backward_.empty(); }

  std::int64_t max_index() const { return static_cast<std::int64_t>(forward_.size()) - 1; }
  std::int64_t min_index() const {
    return two_sided() ? -(static_cast<std::int64_t>(backward_.size()) - 1) : 0;
  }
  double t0() const { return static_cast<double>(min_index()) * step_; }
  double horizon() const { return static_cast<double>(max_index()) * step_; }

  double at(std::int64_t k) const;
  double at_time(double t) const { return at(index_of(t)); }
  /// Grid index of t; throws std::invalid_argument if t is off the grid.
  std::int64_t index_of(double t) const;

  /// Same samples on a grid n times finer in time, kappa scaled by n:
  /// Y'(t) = Y(n t).
  DrivePath time_rescaled(int n) const;

  /// Samples from t0() to horizon().
  std::vector<double> samples() const;

  friend bool operator==(const DrivePath&, const DrivePath&) = default;

 private:
  double step_;
  std::vector<double> forward_;
  std::vector<double> backward_;
  double kappa_;
};

/// round(t / step) when t is a grid multiple within 1e-9 relative slack.
std::int64_t grid_steps(double t, double step);

}  // namespace slelab::flow
