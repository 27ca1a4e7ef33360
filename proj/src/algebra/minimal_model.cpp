#include "slelab/algebra/minimal_model.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace slelab::algebra {

namespace {

void check_model(MinimalModel m) {
  if (!(m.p > m.p_prime && m.p_prime >= 2) || std::gcd(m.p, m.p_prime) != 1) {
    throw std::domain_error("minimal model needs coprime p > p' >= 2, got (" + std::to_string(m.p) +
                            ", " + std::to_string(m.p_prime) + ")");
  }
}

}  // namespace

Rational minimal_model_c(MinimalModel model) {
  check_model(model);
  const long diff = model.p - model.p_prime;
  return Rational(1) - Rational(6 * diff * diff, static_cast<long>(model.p) * model.p_prime);
}

Rational minimal_model_weight(MinimalModel model, KacLabel label) {
  check_model(model);
  if (label.r < 1 || label.r >= model.p_prime || label.s < 1 || label.s >= model.p) {
    throw std::domain_error("Kac label (" + std::to_string(label.r) + ", " + std::to_string(label.s) +
                            ") out of range");
  }
  const long a = static_cast<long>(label.r) * model.p - static_cast<long>(label.s) * model.p_prime;
  const long b = model.p - model.p_prime;
  return Rational(a * a - b * b, 4L * model.p * model.p_prime);
}

KappaParams kappa_parameterization(const Rational& kappa) {
  if (kappa.sign() <= 0) {
    throw std::domain_error("kappa_parameterization: kappa must be positive");
  }
  const Rational four_minus = Rational(4) - kappa;
  const Rational c = Rational(1) - Rational(3) * four_minus * four_minus / (Rational(2) * kappa);
  const Rational delta = (Rational(6) - kappa) / (Rational(2) * kappa);
  return {c, delta};
}

}  // namespace slelab::algebra
