#pragma once

#include <complex>

namespace slelab::flow {

using CPoint = std::complex<double>;

/// Wedge H_n = { z : |z| > 0, 0 < Arg z < pi/n }.
struct Wedge {
  int n = 1;

  bool contains(CPoint z) const;
  double opening() const;
  /// Unit vector along the bisector, e^{i pi / (2n)}.
  CPoint bisector() const;
};

/// Square root with non-negative imaginary part; on the real axis the
/// non-negative root is returned for u >= 0.
CPoint sqrt_upper(CPoint u);

/// |w|^{1/n} exp(i Arg(w)/n) with Arg(w) in [0, pi]. w = 0 maps to 0.
/// Throws DomainError for w in the open lower half-plane (beyond a 1e-12
/// relative rounding allowance, which is clamped onto the real axis).
CPoint principal_root(CPoint w, int n);

/// z^n by repeated multiplication.
CPoint int_power(CPoint z, int n);

}  // namespace slelab::flow
