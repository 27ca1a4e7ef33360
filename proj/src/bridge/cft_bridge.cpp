#include "slelab/bridge/cft_bridge.hpp"

#include "slelab/algebra/linalg.hpp"
#include "slelab/algebra/virasoro.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace slelab::bridge {

using algebra::Param;
using algebra::Partition;

namespace {

ParamPoly sign_term(int s) { return ParamPoly(Rational(s % 2 == 0 ? 2 : -2)); }

// 2(-1)^s - kappa (n-1) / (2 n^2)
ParamPoly coeff_2n(const CandidateSpec& spec) {
  const long n = spec.n;
  return sign_term(spec.s) - spec.kappa * ParamPoly(Rational(n - 1, 2 * n * n));
}

// kappa / (2 n^2)
ParamPoly coeff_nn(const CandidateSpec& spec) {
  const long n = spec.n;
  return spec.kappa * ParamPoly(Rational(1, 2 * n * n));
}

using Row = std::array<UPoly, 3>;  // [coeff of c, coeff of delta, constant]

Row split_linear(const ParamPoly& p) {
  const ParamPoly a0 = p.substitute(Param::c, Rational(0)).substitute(Param::delta, Rational(0));
  const ParamPoly a1 = p.coefficient(Param::c, 1).substitute(Param::delta, Rational(0));
  const ParamPoly a2 = p.coefficient(Param::delta, 1).substitute(Param::c, Rational(0));
  const ParamPoly rebuilt =
      a0 + a1 * ParamPoly::variable(Param::c) + a2 * ParamPoly::variable(Param::delta);
  if (!(rebuilt == p)) {
    throw std::domain_error("solve_kappa_singular: condition is not linear in (c, delta): " + p.str());
  }
  return {UPoly::from_param_poly(a1, Param::kappa), UPoly::from_param_poly(a2, Param::kappa),
          UPoly::from_param_poly(a0, Param::kappa)};
}

void normalize(Row& row) {
  UPoly g;
  for (const auto& e : row) {
    g = algebra::gcd(g, e);
  }
  if (g.is_zero() || g.degree() == 0) {
    return;
  }
  for (auto& e : row) {
    e = e.divmod(g).first;
  }
}

std::pair<UPoly, UPoly> reduce_fraction(UPoly num, UPoly den) {
  const UPoly g = algebra::gcd(num, den);
  if (!g.is_zero() && g.degree() > 0) {
    num = num.divmod(g).first;
    den = den.divmod(g).first;
  }
  const Rational lead = den.leading();
  return {num * UPoly(lead.inverse()), den * UPoly(lead.inverse())};
}

std::optional<IsolatedSolution> solve_at(const std::vector<Row>& rows, const Rational& kappa) {
  algebra::RationalMatrix m(0, 3);
  for (const auto& row : rows) {
    m.append_row({row[0](kappa), row[1](kappa), -row[2](kappa)});
  }
  const auto rref = algebra::reduced_row_echelon(m);
  for (std::size_t p : rref.pivots) {
    if (p == 2) {
      return std::nullopt;  // inconsistent
    }
  }
  IsolatedSolution sol{kappa, std::nullopt, std::nullopt};
  if (rref.pivots.size() == 2) {
    sol.c = rref.matrix(0, 2);
    sol.delta = rref.matrix(1, 2);
  }
  return sol;
}

std::vector<ParamPoly> coefficients_of(const PBWVector& v) {
  std::vector<ParamPoly> out;
  for (const auto& [p, coeff] : v.terms()) {
    out.push_back(coeff);
  }
  return out;
}

}  // namespace

void CandidateSpec::validate() const {
  if (n < 1) {
    throw std::invalid_argument("CandidateSpec: grade n must be >= 1");
  }
  if (s != 1 && s != 2) {
    throw std::invalid_argument("CandidateSpec: sign s must be 1 or 2");
  }
}

bool GeneratorDrift::ito_consistent() const {
  return coeff_L_minus_n_squared * ParamPoly(Rational(2)) == noise_coeff_squared;
}

GeneratorDrift drift_from_walk(const CandidateSpec& spec) {
  spec.validate();
  const long n = spec.n;
  return {coeff_2n(spec), coeff_nn(spec), spec.kappa * ParamPoly(Rational(1, n * n)), Rational(1, n)};
}

PBWVector candidate_vector(const CandidateSpec& spec, const VermaParams& params) {
  spec.validate();
  const int n = spec.n;
  PBWVector v(2 * n, params);
  v.add_term(Partition{2 * n}, coeff_2n(spec));
  v.add_term(Partition{n, n}, coeff_nn(spec));
  return v;
}

PBWVector obstruction_L1(const CandidateSpec& spec, const VermaParams& params) {
  spec.validate();
  if (spec.n < 2) {
    throw std::domain_error("obstruction_L1: n = 1 is governed by the level-2 singular condition");
  }
  const long n = spec.n;
  PBWVector v(static_cast<int>(2 * n - 1), params);
  v.add_term(Partition{static_cast<int>(2 * n - 1)},
             ParamPoly(Rational(2 * n + 1)) * coeff_2n(spec) +
                 spec.kappa * ParamPoly(Rational(n + 1, 2 * n * n)));
  v.add_term(Partition{static_cast<int>(n), static_cast<int>(n - 1)},
             spec.kappa * ParamPoly(Rational(n + 1, n * n)));
  return v;
}

algebra::KappaParams KappaFamily::at(const Rational& kappa) const {
  const Rational cd = c_den(kappa);
  const Rational dd = delta_den(kappa);
  if (cd.is_zero() || dd.is_zero()) {
    throw std::domain_error("KappaFamily: family is singular at kappa = " + kappa.str());
  }
  return {c_num(kappa) / cd, delta_num(kappa) / dd};
}

SingularSolution solve_kappa_singular(int n, int s) {
  const CandidateSpec spec = CandidateSpec::symbolic(n, s);
  spec.validate();
  const VermaParams params = VermaParams::symbolic();
  const PBWVector v = candidate_vector(spec, params);

  std::vector<Row> original;
  for (int k : {1, 2}) {
    for (const ParamPoly& eq : coefficients_of(algebra::act_raising(v, k))) {
      original.push_back(split_linear(eq));
    }
  }

  // Fraction-free elimination over Q[kappa] on the (c, delta) columns.
  std::vector<Row> rows = original;
  std::vector<Row> pivots;
  for (std::size_t col = 0; col < 2; ++col) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return !r[col].is_zero(); });
    if (it == rows.end()) {
      continue;
    }
    Row pivot = *it;
    rows.erase(it);
    for (auto& r : rows) {
      if (r[col].is_zero()) {
        continue;
      }
      const UPoly factor = r[col];
      for (std::size_t j = 0; j < 3; ++j) {
        r[j] = pivot[col] * r[j] - factor * pivot[j];
      }
      normalize(r);
    }
    pivots.push_back(std::move(pivot));
  }

  SingularSolution out;
  UPoly constraint;
  for (const auto& r : rows) {
    constraint = algebra::gcd(constraint, r[2]);
  }
  if (!constraint.is_zero()) {
    out.kappa_constraint = constraint;
    if (constraint.degree() == 0) {
      out.kind = SingularSolution::Kind::empty;
      out.diagnostic = "elimination leaves a nonzero constant: no kappa works";
      return out;
    }
    for (const Rational& root : constraint.rational_roots()) {
      if (auto sol = solve_at(original, root)) {
        out.isolated.push_back(*sol);
      }
    }
    out.kind = out.isolated.empty() ? SingularSolution::Kind::empty : SingularSolution::Kind::isolated;
    if (out.isolated.empty()) {
      out.diagnostic = "kappa constraint " + constraint.str("kappa") + " has no consistent rational root";
    }
    return out;
  }
  if (pivots.size() < 2) {
    out.kind = SingularSolution::Kind::underdetermined;
    out.diagnostic = "conditions leave (c, delta) underdetermined";
    return out;
  }
  // p00 c + p01 delta + b0 = 0 and p11 delta + b1 = 0 (p10 eliminated).
  const Row& r0 = pivots[0];
  const Row& r1 = pivots[1];
  const UPoly minus_one(Rational(-1));
  auto [dn, dd] = reduce_fraction(minus_one * r1[2], r1[1]);
  auto [cn, cd] = reduce_fraction(minus_one * r0[2] * r1[1] + r0[1] * r1[2], r0[0] * r1[1]);
  out.kind = SingularSolution::Kind::family;
  out.family = KappaFamily{cn, cd, dn, dd};
  return out;
}

std::vector<Rational> NullSolution::non_negative_roots() const {
  std::vector<Rational> out;
  for (const auto& r : roots) {
    if (r.non_negative) {
      out.push_back(r.kappa);
    }
  }
  return out;
}

std::vector<Rational> NullSolution::negative_roots() const {
  std::vector<Rational> out;
  for (const auto& r : roots) {
    if (!r.non_negative) {
      out.push_back(r.kappa);
    }
  }
  return out;
}

NullSolution solve_kappa_null(int n, int s, MinimalModel model, KacLabel label) {
  const CandidateSpec spec = CandidateSpec::symbolic(n, s);
  spec.validate();
  const VermaParams params =
      VermaParams::numeric(algebra::minimal_model_c(model), algebra::minimal_model_weight(model, label));
  NullSolution out{n, s, model, label, params, {}, std::nullopt, {}, false, 0, {}};

  const ModuleQuotient quotient = algebra::primitive_singular_submodule(params, 2 * n);
  out.generators = quotient.generators;
  if (quotient.generators.empty()) {
    out.diagnostic = "no singular vectors at or below level " + std::to_string(2 * n);
    return out;
  }
  const PBWVector residue = algebra::submodule_reduce(candidate_vector(spec, params), quotient.generators);
  out.residue = residue;

  UPoly common;
  for (const auto& [p, coeff] : residue.terms()) {
    out.residue_kappa_degree = std::max(out.residue_kappa_degree, coeff.degree(Param::kappa));
    common = algebra::gcd(common, UPoly::from_param_poly(coeff, Param::kappa));
  }
  if (residue.is_zero()) {
    out.every_kappa = true;
    out.diagnostic = "candidate is null for every kappa";
    return out;
  }
  if (common.degree() == 0) {
    out.diagnostic = "residue has no common root in kappa";
    return out;
  }
  UPoly leftover = common;
  for (const Rational& root : common.rational_roots()) {
    out.roots.push_back({root, root.sign() >= 0, residue.substitute(Param::kappa, root)});
    leftover = leftover.divmod(UPoly(std::vector<Rational>{-root, Rational(1)})).first;
  }
  if (leftover.degree() > 0) {
    out.diagnostic = "irrational roots not represented: " + leftover.str("kappa");
  } else if (out.non_negative_roots().empty()) {
    out.diagnostic = "no non-negative solution";
  }
  return out;
}

MartingaleCheck martingale_generator_check(const CandidateSpec& spec, const ModuleQuotient& module) {
  if (!spec.kappa.is_constant()) {
    throw std::invalid_argument("martingale_generator_check: kappa must be numeric");
  }
  PBWVector residue = algebra::submodule_reduce(candidate_vector(spec, module.params), module.generators);
  const bool null = residue.is_zero();
  return {null, std::move(residue)};
}

}  // namespace slelab::bridge
