#include "slelab/algebra/verma.hpp"
#include "slelab/algebra/virasoro.hpp"
#include "slelab/bridge/cft_bridge.hpp"

#include <doctest.h>

using namespace slelab;
using algebra::Param;
using algebra::ParamPoly;
using algebra::Partition;
using algebra::PBWVector;
using algebra::Rational;
using algebra::VermaParams;

namespace {

const ParamPoly kKappa = ParamPoly::variable(Param::kappa);

bool singular_at(const bridge::CandidateSpec& spec, const VermaParams& params) {
  const PBWVector v = bridge::candidate_vector(spec, params);
  return algebra::act_raising(v, 1).is_zero() && algebra::act_raising(v, 2).is_zero();
}

}  // namespace

TEST_CASE("grade-1 candidate is the level-2 singular combination") {
  const auto params = VermaParams::symbolic();
  const auto v = bridge::candidate_vector(bridge::CandidateSpec::symbolic(1, 1), params);
  const PBWVector expected(2, params,
                           {{Partition{2}, ParamPoly(-2)}, {Partition{1, 1}, ParamPoly(Rational(1, 2)) * kKappa}});
  CHECK(v == expected);
  const auto v2 = bridge::candidate_vector(bridge::CandidateSpec::symbolic(1, 2), params);
  CHECK(v2.coefficient(Partition{2}) == ParamPoly(2));
}

TEST_CASE("closed-form obstruction equals L_1 applied to the candidate") {
  const auto params = VermaParams::symbolic();
  for (int n = 2; n <= 4; ++n) {
    for (int s = 1; s <= 2; ++s) {
      const auto spec = bridge::CandidateSpec::symbolic(n, s);
      const auto direct = algebra::act_raising(bridge::candidate_vector(spec, params), 1);
      CHECK(bridge::obstruction_L1(spec, params) == direct);
    }
  }
  CHECK_THROWS(bridge::obstruction_L1(bridge::CandidateSpec::symbolic(1, 1), params));
}

TEST_CASE("walk drift is Ito consistent") {
  for (int n = 1; n <= 4; ++n) {
    for (int s = 1; s <= 2; ++s) {
      const auto d = bridge::drift_from_walk(bridge::CandidateSpec::symbolic(n, s));
      CHECK(d.ito_consistent());
      CHECK(d.coeff_L_minus_n_squared == kKappa * ParamPoly(Rational(1, 2L * n * n)));
    }
  }
}

TEST_CASE("grade-1 singular solutions form the kappa family") {
  for (int s = 1; s <= 2; ++s) {
    const auto sol = bridge::solve_kappa_singular(1, s);
    if (s == 1) {
      REQUIRE(sol.kind == bridge::SingularSolution::Kind::family);
      for (const Rational& kappa : {Rational(2), Rational(8, 3), Rational(6), Rational(10)}) {
        const auto at = sol.family->at(kappa);
        const auto expected = algebra::kappa_parameterization(kappa);
        CHECK(at.c == expected.c);
        CHECK(at.delta == expected.delta);
        CHECK(singular_at(bridge::CandidateSpec::numeric(1, s, kappa), VermaParams::numeric(at.c, at.delta)));
      }
    }
  }
}

TEST_CASE("every reported singular solution is singular") {
  for (int n = 1; n <= 3; ++n) {
    for (int s = 1; s <= 2; ++s) {
      const auto sol = bridge::solve_kappa_singular(n, s);
      for (const auto& iso : sol.isolated) {
        if (iso.c && iso.delta) {
          CHECK(singular_at(bridge::CandidateSpec::numeric(n, s, iso.kappa), VermaParams::numeric(*iso.c, *iso.delta)));
        }
      }
    }
  }
}

TEST_CASE("Yang-Lee null vector at grade 2") {
  const auto sol = bridge::solve_kappa_null(2, 2, {5, 2}, {1, 1});
  CHECK(sol.non_negative_roots() == std::vector<Rational>{Rational(40)});
  CHECK(sol.negative_roots().empty());
  CHECK(sol.residue_kappa_degree <= 1);
  CHECK_FALSE(sol.every_kappa);
  for (const auto& root : sol.roots) {
    CHECK(root.certificate.is_zero());
  }
  const auto other_sign = bridge::solve_kappa_null(2, 1, {5, 2}, {1, 1});
  CHECK(other_sign.non_negative_roots().empty());
  CHECK(other_sign.negative_roots() == std::vector<Rational>{Rational(-40)});
}

TEST_CASE("no grade-2 null vector in the non-identity module") {
  const auto sol = bridge::solve_kappa_null(2, 2, {5, 2}, {1, 2});
  CHECK(sol.non_negative_roots().empty());
}

TEST_CASE("martingale check at kappa = 40") {
  const auto params = VermaParams::numeric(Rational(-22, 5), Rational(0));
  const auto module = algebra::primitive_singular_submodule(params, 4);
  CHECK(bridge::martingale_generator_check(bridge::CandidateSpec::numeric(2, 2, 40), module).null);
  CHECK_FALSE(bridge::martingale_generator_check(bridge::CandidateSpec::numeric(2, 2, 39), module).null);
  CHECK_FALSE(bridge::martingale_generator_check(bridge::CandidateSpec::numeric(2, 1, 40), module).null);
}

TEST_CASE("invalid candidate specs are rejected") {
  CHECK_THROWS(bridge::CandidateSpec::symbolic(0, 1).validate());
  CHECK_THROWS(bridge::CandidateSpec::symbolic(2, 3).validate());
}
