#pragma once

#include "slelab/algebra/param_poly.hpp"
#include "slelab/algebra/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace slelab::algebra {

/// Univariate polynomial over Q, coefficients stored lowest degree first
/// with no trailing zeros. The zero polynomial has degree -1.
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(Rational constant);  // NOLINT(google-explicit-constructor)

  static UPoly x();

  /// Views a ParamPoly depending on at most `p` as a polynomial in `p`.
  /// Throws std::invalid_argument if another parameter appears.
  static UPoly from_param_poly(const ParamPoly& poly, Param p);
  ParamPoly to_param_poly(Param p) const;

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational leading() const;
  Rational operator()(const Rational& x) const;

  UPoly monic() const;
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const;

  /// Distinct rational roots, ascending.
  std::vector<Rational> rational_roots() const;

  std::string str(std::string_view var = "x") const;

  UPoly& operator+=(const UPoly& other);
  UPoly& operator-=(const UPoly& other);
  UPoly& operator*=(const UPoly& other);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(UPoly a, const UPoly& b) { return a *= b; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(UPoly a, UPoly b);

}  // namespace slelab::algebra
