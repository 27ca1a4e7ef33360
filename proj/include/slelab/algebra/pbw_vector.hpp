#pragma once

#include "slelab/algebra/param_poly.hpp"
#include "slelab/algebra/partition.hpp"

#include <initializer_list>
#include <map>
#include <utility>

namespace slelab::algebra {

/// Highest-weight data of a Verma module: central charge and weight.
struct VermaParams {
  ParamPoly c;
  ParamPoly delta;

  /// c and delta as free parameters.
  static VermaParams symbolic();
  static VermaParams numeric(const Rational& c, const Rational& delta);

  bool is_numeric() const { return c.is_constant() && delta.is_constant(); }

  friend bool operator==(const VermaParams&, const VermaParams&) = default;
};

/// Homogeneous element of a Verma module in the PBW basis. Coefficients
/// may depend polynomially on kappa (and on c, delta when the parameters
/// are symbolic).
class PBWVector {
 public:
  using TermMap = std::map<Partition, ParamPoly, BasisOrder>;

  PBWVector(int level, VermaParams params);
  PBWVector(int level, VermaParams params, std::initializer_list<std::pair<Partition, ParamPoly>> terms);

  /// The highest-weight vector |h> itself.
  static PBWVector highest_weight(VermaParams params);

  int level() const { return level_; }
  const VermaParams& params() const { return params_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  ParamPoly coefficient(const Partition& p) const;

  /// Adds coeff * |p>. The partition must sit at this vector's level.
  void add_term(const Partition& p, const ParamPoly& coeff);

  /// Coefficients with `p` replaced by `value`.
  PBWVector substitute(Param p, const Rational& value) const;

  PBWVector& operator+=(const PBWVector& other);
  PBWVector& operator-=(const PBWVector& other);
  PBWVector& operator*=(const ParamPoly& scalar);

  friend PBWVector operator+(PBWVector a, const PBWVector& b) { return a += b; }
  friend PBWVector operator-(PBWVector a, const PBWVector& b) { return a -= b; }
  friend PBWVector operator*(PBWVector a, const ParamPoly& s) { return a *= s; }
  friend PBWVector operator*(const ParamPoly& s, PBWVector a) { return a *= s; }

  friend bool operator==(const PBWVector& a, const PBWVector& b) {
    return a.level_ == b.level_ && a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void check_compatible(const PBWVector& other) const;

  int level_;
  VermaParams params_;
  TermMap terms_;
};

}  // namespace slelab::algebra
