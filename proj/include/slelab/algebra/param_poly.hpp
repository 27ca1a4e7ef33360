#pragma once

#include "slelab/algebra/rational.hpp"

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace slelab::algebra {

/// Named parameters a coefficient may depend on.
enum class Param : std::uint8_t { kappa = 0, c = 1, delta = 2 };

inline constexpr std::array<Param, 3> kAllParams{Param::kappa, Param::c, Param::delta};

std::string_view param_name(Param p);

using Exponents = std::array<std::uint16_t, 3>;

/// Graded lexicographic order: total degree first, then exponents of
/// (kappa, c, delta) lexicographically.
struct GradedLex {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Polynomial in (kappa, c, delta) with exact rational coefficients.
/// Zero coefficients are never stored, so equality is structural.
class ParamPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLex>;

  ParamPoly() = default;
  ParamPoly(Rational constant);  // NOLINT(google-explicit-constructor)
  ParamPoly(long constant) : ParamPoly(Rational(constant)) {}  // NOLINT(google-explicit-constructor)

  static ParamPoly variable(Param p);
  static ParamPoly monomial(const Exponents& exponents, const Rational& coeff);

  /// Parses the format produced by str(), e.g. "2 - 1/8*kappa + c*delta^2".
  static ParamPoly parse(std::string_view text);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// The value when the polynomial is constant, nullopt otherwise.
  std::optional<Rational> as_rational() const;
  Rational constant_term() const;

  int degree(Param p) const;
  int total_degree() const;
  bool depends_on(Param p) const { return degree(p) > 0; }

  /// Coefficient of p^power, as a polynomial in the remaining parameters.
  ParamPoly coefficient(Param p, int power) const;

  ParamPoly substitute(Param p, const Rational& value) const;
  ParamPoly substitute(Param p, const ParamPoly& value) const;

  std::string str() const;

  ParamPoly& operator+=(const ParamPoly& other);
  ParamPoly& operator-=(const ParamPoly& other);
  ParamPoly& operator*=(const ParamPoly& other);
  ParamPoly operator-() const;
  ParamPoly pow(int exponent) const;

  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
  friend ParamPoly operator*(ParamPoly a, const ParamPoly& b) { return a *= b; }
  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
  friend std::ostream& operator<<(std::ostream& os, const ParamPoly& p) { return os << p.str(); }

 private:
  void add_term(const Exponents& e, const Rational& coeff);

  TermMap terms_;
};

}  // namespace slelab::algebra
