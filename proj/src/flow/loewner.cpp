#include "slelab/flow/loewner.hpp"

#include "slelab/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace slelab::flow {

void FlowConfig::validate() const {
  if (n < 1) {
    throw std::invalid_argument("FlowConfig: grade must be >= 1");
  }
  if (s != 1 && s != 2) {
    throw std::invalid_argument("FlowConfig: sign must be 1 or 2");
  }
  if (!(step > 0.0)) {
    throw std::invalid_argument("FlowConfig: step must be positive");
  }
  if (!(eps_swallow > 0.0)) {
    throw std::invalid_argument("FlowConfig: eps_swallow must be positive");
  }
}

CPoint FlowResult::value() const {
  if (!value_) {
    throw NumericalError("point swallowed at tau = " + std::to_string(*tau_));
  }
  return *value_;
}

double FlowResult::tau() const {
  if (!tau_) {
    throw std::logic_error("FlowResult::tau on a live point");
  }
  return *tau_;
}

namespace {

// w = base + offset. base stays fixed at the starting value so that the
// small increments are not absorbed when |w| is large.
struct WState {
  CPoint base;
  CPoint offset{0.0, 0.0};

  CPoint value() const { return base + offset; }
  CPoint centered(double y) const { return (base - y) + offset; }
};

// sqrt_H(d^2 + a) - d, evaluated in whichever of its two algebraic forms
// avoids cancellation.
CPoint forward_increment(CPoint d, double a) {
  const CPoint r = sqrt_upper(d * d + a);
  const CPoint sum = r + d;
  const CPoint diff = r - d;
  if (std::abs(sum) >= std::abs(diff) && sum != CPoint(0.0, 0.0)) {
    return a / sum;
  }
  return diff;
}

CPoint inverse_increment(CPoint d, double a) {
  const CPoint r = sqrt_upper(d * d - a);
  const CPoint sum = r + d;
  const CPoint diff = r - d;
  if (std::abs(sum) >= std::abs(diff) && sum != CPoint(0.0, 0.0)) {
    return -a / sum;
  }
  return diff;
}

StepOutcome forward_step(WState& st, double y, double dt, int n, double eps) {
  const CPoint d = st.centered(y);
  if (std::abs(d) <= eps * std::max(1.0, std::abs(y))) {
    return {true, st.value(), 0.0};
  }
  const double a = 4.0 * n * dt;
  const CPoint u = d * d;
  // Slack for the rounding accumulated in d over many steps, so that a hit
  // landing exactly on the step end is not missed.
  const double scale = std::abs(st.base) + std::abs(st.offset) + std::abs(y);
  const double slack = 2.0 * std::abs(d) * 1e-12 * scale;
  if (u.real() < 0.0 && u.real() + a >= -slack && std::abs(u.imag()) <= eps * std::abs(u)) {
    return {true, st.value(), std::min(-u.real() / (4.0 * n), dt)};
  }
  st.offset += forward_increment(d, a);
  const CPoint w = st.value();
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
    throw NumericalError("forward step produced a non-finite value");
  }
  if (w.imag() <= eps * std::max(1.0, std::abs(w))) {
    return {true, w, 0.5 * dt};
  }
  return {false, w, 0.0};
}

std::int64_t stride_of(const DrivePath& drive, const FlowConfig& cfg) {
  const std::int64_t stride = grid_steps(cfg.step, drive.step());
  if (stride < 1) {
    throw std::invalid_argument("flow step is finer than the drive grid");
  }
  return stride;
}

std::int64_t steps_of(double t, const FlowConfig& cfg) {
  if (t < 0.0) {
    throw std::invalid_argument("flow time must be non-negative");
  }
  return grid_steps(t, cfg.step);
}

void require_horizon(const DrivePath& drive, std::int64_t last_index) {
  if (last_index > drive.max_index() || last_index < drive.min_index()) {
    throw std::invalid_argument("flow time exceeds the drive horizon");
  }
}

// Forward step j is driven by Y((j + 1) stride), the value at its right end.
std::optional<double> run_forward(WState& st, const DrivePath& drive, const FlowConfig& cfg, std::int64_t steps) {
  const std::int64_t stride = stride_of(drive, cfg);
  require_horizon(drive, steps * stride);
  for (std::int64_t j = 0; j < steps; ++j) {
    const double y = drive.at((j + 1) * stride);
    const StepOutcome out = forward_step(st, y, cfg.step, cfg.n, cfg.eps_swallow);
    if (out.swallowed) {
      return static_cast<double>(j) * cfg.step + out.hit_offset;
    }
  }
  return std::nullopt;
}

enum class StepKind { forward, inverse };

// Unchecked steps over drive indices direction (j+1) stride, j = 0..steps-1,
// visited in ascending or descending j.
CPoint run_plain(CPoint w, const DrivePath& drive, const FlowConfig& cfg, std::int64_t steps, int direction,
                 bool descending, StepKind kind) {
  const std::int64_t stride = stride_of(drive, cfg);
  require_horizon(drive, direction * steps * stride);
  const double a = 4.0 * cfg.n * cfg.step;
  for (std::int64_t i = 0; i < steps; ++i) {
    const std::int64_t j = descending ? steps - 1 - i : i;
    const double y = drive.at(direction * (j + 1) * stride);
    w += kind == StepKind::inverse ? inverse_increment(w - y, a) : forward_increment(w - y, a);
    if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
      throw NumericalError("flow step produced a non-finite value");
    }
  }
  return w;
}

CPoint run_inverse(CPoint w, const DrivePath& drive, const FlowConfig& cfg, std::int64_t steps) {
  return run_plain(w, drive, cfg, steps, +1, true, StepKind::inverse);
}

// g_{-t} in w-coordinates: dw/dt = -2n/(w - Y_{-t}) integrated over [0, t].
CPoint run_backward(CPoint w, const DrivePath& drive, const FlowConfig& cfg, std::int64_t steps) {
  return run_plain(w, drive, cfg, steps, -1, false, StepKind::inverse);
}

void require_wedge(CPoint z, int n, const char* what) {
  if (!Wedge{n}.contains(z)) {
    throw DomainError(std::string(what) + ": point outside the wedge H_" + std::to_string(n));
  }
}

void require_two_sided(const DrivePath& drive) {
  if (!drive.two_sided()) {
    throw std::invalid_argument("sign 2 flows need a two-sided drive");
  }
}

}  // namespace

CPoint advance_exact(CPoint w, double y, double dt, int n) {
  return y + sqrt_upper((w - y) * (w - y) + 4.0 * n * dt);
}

StepOutcome step_exact(CPoint w, double y, double dt, int n, double eps_swallow) {
  WState st{w};
  return forward_step(st, y, dt, n, eps_swallow);
}

CPoint inverse_step(CPoint w, double y, double dt, int n) {
  return w + inverse_increment(w - y, 4.0 * n * dt);
}

FlowResult flow_forward(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  require_wedge(z, cfg.n, "flow_forward");
  WState st{int_power(z, cfg.n)};
  if (auto tau = run_forward(st, drive, cfg, steps_of(t, cfg))) {
    return FlowResult::swallowed(*tau);
  }
  return FlowResult::alive(principal_root(st.value(), cfg.n));
}

FlowResult flow_displacement(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  require_wedge(z, cfg.n, "flow_displacement");
  WState st{int_power(z, cfg.n)};
  if (auto tau = run_forward(st, drive, cfg, steps_of(t, cfg))) {
    return FlowResult::swallowed(*tau);
  }
  // g = z (1 + rho)^{1/n} with rho = offset / base; (1 + rho)^{1/n} - 1 is
  // expm1(log1p(rho) / n), both evaluated componentwise.
  const CPoint rho = st.offset / st.base;
  const double log_mod = 0.5 * std::log1p(2.0 * rho.real() + std::norm(rho));
  const double arg = std::atan2(rho.imag(), 1.0 + rho.real());
  const double x = log_mod / cfg.n;
  const double y = arg / cfg.n;
  const double half_sin = std::sin(0.5 * y);
  const CPoint factor(std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y));
  return FlowResult::alive(z * factor);
}

FlowResult flow_backward(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  require_two_sided(drive);
  require_wedge(z, cfg.n, "flow_backward");
  return FlowResult::alive(principal_root(run_backward(int_power(z, cfg.n), drive, cfg, steps_of(t, cfg)), cfg.n));
}

FlowResult f_map(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  require_wedge(z, cfg.n, "f_map");
  const std::int64_t steps = steps_of(t, cfg);
  if (cfg.s == 2) {
    require_two_sided(drive);
    const double y_end = drive.at(-steps * stride_of(drive, cfg));
    return FlowResult::alive(principal_root(run_backward(int_power(z, cfg.n), drive, cfg, steps) - y_end, cfg.n));
  }
  WState st{int_power(z, cfg.n)};
  if (auto tau = run_forward(st, drive, cfg, steps)) {
    return FlowResult::swallowed(*tau);
  }
  const double y_end = drive.at(steps * stride_of(drive, cfg));
  return FlowResult::alive(principal_root(st.centered(y_end), cfg.n));
}

CPoint inverse_map(CPoint w, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  require_wedge(w, cfg.n, "inverse_map");
  return principal_root(run_inverse(int_power(w, cfg.n), drive, cfg, steps_of(t, cfg)), cfg.n);
}

CPoint f_inverse(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  const std::int64_t steps = steps_of(t, cfg);
  if (cfg.s == 2) {
    require_two_sided(drive);
    const double y_end = drive.at(-steps * stride_of(drive, cfg));
    const CPoint w = run_plain(int_power(z, cfg.n) + y_end, drive, cfg, steps, -1, true, StepKind::forward);
    return principal_root(w, cfg.n);
  }
  const double y_end = drive.at(steps * stride_of(drive, cfg));
  return principal_root(run_inverse(int_power(z, cfg.n) + y_end, drive, cfg, steps), cfg.n);
}

TraceCurve trace_sample(const DrivePath& drive, const FlowConfig& cfg, const std::vector<double>& times,
                        double basepoint_radius) {
  cfg.validate();
  if (!(basepoint_radius > 0.0)) {
    throw std::invalid_argument("trace basepoint radius must be positive");
  }
  TraceCurve curve{cfg.n, cfg.s, basepoint_radius, {}};
  const CPoint z0 = basepoint_radius * Wedge{cfg.n}.bisector();
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (i > 0 && !(times[i] > times[i - 1])) {
      throw std::invalid_argument("trace times must be strictly increasing");
    }
    curve.points.push_back({times[i], f_inverse(z0, drive, cfg, times[i])});
  }
  return curve;
}

std::vector<double> uniform_times(double horizon, double step) {
  const std::int64_t k = grid_steps(horizon, step);
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(k + 1));
  for (std::int64_t i = 0; i <= k; ++i) {
    out.push_back(static_cast<double>(i) * step);
  }
  return out;
}

std::size_t HullGrid::swallowed_count() const {
  std::size_t count = 0;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    count += swallowed(i) ? 1 : 0;
  }
  return count;
}

std::vector<bool> HullGrid::swallowed_by(double t_prime) const {
  if (t_prime > t) {
    throw std::invalid_argument("HullGrid::swallowed_by: time beyond the computed horizon");
  }
  std::vector<bool> out;
  out.reserve(cells.size());
  for (const auto& cell : cells) {
    out.push_back(cell.tau.has_value() && *cell.tau <= t_prime);
  }
  return out;
}

std::vector<CPoint> polar_points(int n, const PolarGrid& grid) {
  if (grid.n_r < 1 || grid.n_theta < 1 || !(grid.r_max > 0.0)) {
    throw std::invalid_argument("polar grid needs positive sizes");
  }
  std::vector<CPoint> out;
  out.reserve(static_cast<std::size_t>(grid.n_r) * grid.n_theta);
  for (int i = 0; i < grid.n_r; ++i) {
    const double r = grid.r_max * (i + 1) / grid.n_r;
    for (int j = 0; j < grid.n_theta; ++j) {
      const double theta = std::numbers::pi * (j + 1) / (static_cast<double>(n) * (grid.n_theta + 1));
      out.push_back(std::polar(r, theta));
    }
  }
  return out;
}

HullGrid hull_grid(const DrivePath& drive, const FlowConfig& cfg, double t, const PolarGrid& grid) {
  cfg.validate();
  HullGrid hull{cfg.n, t, grid, {}};
  for (CPoint z : polar_points(cfg.n, grid)) {
    const FlowResult r = flow_forward(z, drive, cfg, t);
    hull.cells.push_back({z, r.is_alive() ? std::nullopt : std::optional<double>(r.tau())});
  }
  return hull;
}

ConjugationResult conjugation_check(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t) {
  cfg.validate();
  FlowConfig grade1 = cfg;
  grade1.n = 1;
  grade1.step = cfg.n * cfg.step;
  const FlowResult lhs = flow_forward(z, drive.time_rescaled(cfg.n), cfg, t);
  const FlowResult rhs1 = flow_forward(int_power(z, cfg.n), drive, grade1, cfg.n * t);
  ConjugationResult out;
  if (!lhs.is_alive() || !rhs1.is_alive()) {
    return out;
  }
  out.lhs = lhs.value();
  out.rhs = principal_root(rhs1.value(), cfg.n);
  out.gap = std::abs(out.lhs - out.rhs);
  out.comparable = true;
  return out;
}

CPoint shifted_flow(CPoint z, const DrivePath& drive, const FlowConfig& cfg, double t1, double t) {
  cfg.validate();
  require_wedge(z, cfg.n, "shifted_flow");
  const std::int64_t k1 = steps_of(t1, cfg);
  const std::int64_t k2 = k1 + steps_of(t, cfg);
  const double y1 = drive.at(k1 * stride_of(drive, cfg));
  WState st{run_inverse(int_power(z, cfg.n) + y1, drive, cfg, k1)};
  if (auto tau = run_forward(st, drive, cfg, k2)) {
    throw NumericalError("shifted_flow: intermediate point swallowed at " + std::to_string(*tau));
  }
  return principal_root(st.centered(y1), cfg.n);
}

}  // namespace slelab::flow
