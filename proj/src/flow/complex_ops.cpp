#include "slelab/flow/complex_ops.hpp"

#include "slelab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace slelab::flow {

bool Wedge::contains(CPoint z) const {
  if (!(std::abs(z) > 0.0) || !std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    return false;
  }
  const double arg = std::arg(z);
  return arg > 0.0 && arg < opening();
}

double Wedge::opening() const { return std::numbers::pi / n; }

CPoint Wedge::bisector() const { return std::polar(1.0, std::numbers::pi / (2.0 * n)); }

CPoint sqrt_upper(CPoint u) {
  CPoint r = std::sqrt(u);
  if (r.imag() < 0.0 || (r.imag() == 0.0 && r.real() < 0.0)) {
    r = -r;
  }
  if (r.imag() == 0.0) {
    r.imag(0.0);  // drop a negative zero
  }
  return r;
}

CPoint principal_root(CPoint w, int n) {
  if (n < 1) {
    throw DomainError("principal_root: n must be >= 1");
  }
  const double modulus = std::abs(w);
  if (modulus == 0.0) {
    return {0.0, 0.0};
  }
  if (w.imag() < 0.0) {
    if (-w.imag() > 1e-12 * modulus) {
      throw DomainError("principal_root: argument in the lower half-plane (" + std::to_string(w.real()) +
                        ", " + std::to_string(w.imag()) + ")");
    }
    w.imag(0.0);
  }
  if (n == 1) {
    return w;
  }
  double arg = std::atan2(w.imag(), w.real());
  arg = std::clamp(arg, 0.0, std::numbers::pi);
  return std::polar(std::pow(modulus, 1.0 / n), arg / n);
}

CPoint int_power(CPoint z, int n) {
  CPoint out(1.0, 0.0);
  for (int i = 0; i < n; ++i) {
    out *= z;
  }
  return out;
}

}  // namespace slelab::flow
