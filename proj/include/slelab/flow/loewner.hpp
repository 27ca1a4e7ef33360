#pragma once

#include "slelab/flow/complex_ops.hpp"
#include "slelab/flow/drive.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace slelab::flow {

struct FlowConfig {
  int n = 1;
  int s = 1;
  double step = 1e-4;
  double eps_swallow = 1e-8;

  void validate() const;
};

class FlowResult {
 public:
  static FlowResult alive(CPoint value) { return FlowResult(value, std::nullopt); }
  static FlowResult swallowed(double tau) { return FlowResult(std::nullopt, tau); }

  bool is_alive() const { return value_.has_value(); }
  /// Throws NumericalError when swallowed.
  CPoint value() const;
  /// Throws std::logic_error when alive.
  double tau() const;

 private:
  FlowResult(std::optional<CPoint> v, std::optional<double> tau) : value_(v), tau_(tau) {}
  std::optional<CPoint> value_;
  std::optional<double> tau_;
};

/// w' = Y + sqrt_H((w - Y)^2 + 4 n dt), no swallow checks.
CPoint advance_exact(CPoint w, double y, double dt, int n);

struct StepOutcome {
  bool swallowed = false;
  CPoint w;
  /// Time into the step at which the point was swallowed.
  double hit_offset = 0.0;
};

/// One frozen-drive step in w = g^n coordinates with swallow detection:
/// |w - Y| <= eps max(1, |Y|) at step start, or the exact hitting time of
/// (w - Y)^2 + 4 n s = 0 falls inside the step.
StepOutcome step_exact(CPoint w, double y, double dt, int n, double eps_swallow = 1e-8);

/// Inverse of advance_exact: w - 4 n dt / ((w - Y) + sqrt_H((w - Y)^2 - 4 n dt)).
CPoint inverse_step(CPoint w, double y, double dt, int n);

/// g_t(z). Forward step k uses the drive value at the end of the step.
FlowResult flow_forward(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

/// g_t(z) - z, evaluated without the cancellation of subtracting z from
/// g_t(z) when |z| is large.
FlowResult flow_displacement(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

/// g_{-t}(z): the hierarchy equation run to negative time, i.e.
/// dw/ds = -2n/(w - Y_{-s}) for w = g^n, s in [0, t]. Needs a two-sided drive.
/// Maps H_n into itself, so it is never swallowed.
FlowResult flow_backward(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

/// s = 1: root(g_t^n - Y_t); s = 2: root(g_{-t}^n - Y_{-t}).
FlowResult f_map(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

/// g_t^{-1}(w) for w in H_n.
CPoint inverse_map(CPoint w, const DrivePath& drive, const FlowConfig& cfg, double t);

/// f_t^{-1}(z); for s = 2 the inverse of the backward f-map.
CPoint f_inverse(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

struct TracePoint {
  double t;
  CPoint point;
};

struct TraceCurve {
  int n = 1;
  int s = 1;
  double basepoint_radius = 1e-6;
  std::vector<TracePoint> points;
};

/// gamma_n(t) ~ f_t^{-1}(eps e^{i pi/(2n)}); times strictly increasing grid multiples.
TraceCurve trace_sample(const DrivePath& drive, const FlowConfig& cfg, const std::vector<double>& times,
                        double basepoint_radius = 1e-6);

/// times = 0, step, 2 step, ... up to horizon.
std::vector<double> uniform_times(double horizon, double step);

struct PolarGrid {
  double r_max = 2.0;
  int n_r = 40;
  int n_theta = 21;
};

struct HullCell {
  CPoint z;
  std::optional<double> tau;
};

struct HullGrid {
  int n = 1;
  double t = 0.0;
  PolarGrid grid;
  std::vector<HullCell> cells;

  bool swallowed(std::size_t i) const { return cells[i].tau.has_value() && *cells[i].tau <= t; }
  std::size_t swallowed_count() const;
  /// Swallowed flags evaluated at an earlier time t' <= t.
  std::vector<bool> swallowed_by(double t_prime) const;
};

/// Points r_i e^{i theta_j}, r_i = r_max (i + 1)/n_r, theta_j = (j + 1) pi / (n (n_theta + 1)).
/// An odd n_theta puts a column on the bisector.
std::vector<CPoint> polar_points(int n, const PolarGrid& grid);

HullGrid hull_grid(const DrivePath& drive, const FlowConfig& cfg, double t, const PolarGrid& grid);

struct ConjugationResult {
  CPoint lhs;
  CPoint rhs;
  double gap = 0.0;
  bool comparable = false;
};

/// Grade-n flow driven by Y(n t) against root(grade-1 flow of z^n at time n t).
/// `drive` is the grade-1 path; cfg.step is the grade-n step.
ConjugationResult conjugation_check(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t);

/// ghat_t^{(t1)}(z) = root(g_{t1+t}(g_{t1}^{-1}(root(z^n + Y_{t1})))^n - Y_{t1}).
CPoint shifted_flow(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t1, double t);

}  // namespace slelab::flow
