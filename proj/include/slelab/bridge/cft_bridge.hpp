#pragma once

#include "slelab/algebra/minimal_model.hpp"
#include "slelab/algebra/param_poly.hpp"
#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/algebra/upoly.hpp"
#include "slelab/algebra/verma.hpp"

#include <optional>
#include <string>
#include <vector>

namespace slelab::bridge {

using algebra::KacLabel;
using algebra::MinimalModel;
using algebra::ModuleQuotient;
using algebra::ParamPoly;
using algebra::PBWVector;
using algebra::Rational;
using algebra::UPoly;
using algebra::VermaParams;

/// Grade n >= 1, sign choice s in {1, 2} and the diffusion constant, which
/// may be a number or the free parameter kappa.
struct CandidateSpec {
  int n = 1;
  int s = 1;
  ParamPoly kappa = ParamPoly::variable(algebra::Param::kappa);

  static CandidateSpec symbolic(int n, int s) { return {n, s, ParamPoly::variable(algebra::Param::kappa)}; }
  static CandidateSpec numeric(int n, int s, const Rational& kappa) { return {n, s, ParamPoly(kappa)}; }

  void validate() const;
};

/// dt-part and noise of the Ito walk
///   G^{-1} dG = (A L_{-2n} + B L_{-n}^2) dt + sigma L_{-n} dB,
/// with sigma stored through sigma^2 so everything stays polynomial.
struct GeneratorDrift {
  ParamPoly coeff_L_minus_2n;
  ParamPoly coeff_L_minus_n_squared;
  ParamPoly noise_coeff_squared;
  /// u_{-n} of the generic walk; sigma = sqrt(kappa) * u_{-n}.
  Rational u_minus_n;

  /// v_{-n} of the generic walk, equal to coeff_L_minus_2n.
  const ParamPoly& v_minus_n() const { return coeff_L_minus_2n; }

  /// B == sigma^2 / 2.
  bool ito_consistent() const;
};

GeneratorDrift drift_from_walk(const CandidateSpec& spec);

/// (2(-1)^s - kappa(n-1)/(2n^2)) L_{-2n}|h> + kappa/(2n^2) L_{-n}^2 |h>.
PBWVector candidate_vector(const CandidateSpec& spec, const VermaParams& params);

/// L_1 applied to the candidate in closed form:
///   ((2n+1)(2(-1)^s - kappa(n-1)/(2n^2)) + (n+1)kappa/(2n^2)) L_{-(2n-1)}
///   + (n+1)kappa/n^2 L_{-n} L_{-(n-1)}.
/// Only for n >= 2; n = 1 needs the full level-2 singular condition.
PBWVector obstruction_L1(const CandidateSpec& spec, const VermaParams& params);

/// c(kappa) = c_num/c_den, delta(kappa) = delta_num/delta_den.
struct KappaFamily {
  UPoly c_num;
  UPoly c_den;
  UPoly delta_num;
  UPoly delta_den;

  algebra::KappaParams at(const Rational& kappa) const;
};

struct IsolatedSolution {
  Rational kappa;
  std::optional<Rational> c;
  std::optional<Rational> delta;
};

/// Solutions (kappa, c, delta) making the candidate annihilated by L_1 and L_2.
struct SingularSolution {
  enum class Kind { empty, family, isolated, underdetermined };
  Kind kind = Kind::empty;
  std::optional<KappaFamily> family;
  std::vector<IsolatedSolution> isolated;
  /// Conditions on kappa alone that the elimination produced (monic gcd).
  std::optional<UPoly> kappa_constraint;
  std::string diagnostic;

  bool empty() const { return kind == Kind::empty; }
};

SingularSolution solve_kappa_singular(int n, int s);

struct KappaRoot {
  Rational kappa;
  bool non_negative;
  /// Residue of the candidate at this kappa; zero by construction.
  PBWVector certificate;
};

struct NullSolution {
  int n;
  int s;
  MinimalModel model;
  KacLabel label;
  VermaParams params;
  std::vector<PBWVector> generators;
  /// Residue of the candidate with kappa left free.
  std::optional<PBWVector> residue;
  std::vector<KappaRoot> roots;
  bool every_kappa = false;
  /// Highest power of kappa in the residue; <= 1 certifies uniqueness.
  int residue_kappa_degree = 0;
  std::string diagnostic;

  std::vector<Rational> non_negative_roots() const;
  std::vector<Rational> negative_roots() const;
};

/// All rational kappa for which the candidate of grade n and sign s is null
/// in the (r, s_label) module of M(p, p'), quotiented by its primitive
/// singular vectors up to level 2n.
NullSolution solve_kappa_null(int n, int s, MinimalModel model, KacLabel label);

struct MartingaleCheck {
  bool null;
  PBWVector residue;
};

/// Whether the drift applied to |h>, i.e. the candidate vector, vanishes in
/// the quotient module. Requires numeric kappa.
MartingaleCheck martingale_generator_check(const CandidateSpec& spec, const ModuleQuotient& module);

}  // namespace slelab::bridge
