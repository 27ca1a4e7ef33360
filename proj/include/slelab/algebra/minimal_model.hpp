#pragma once

#include "slelab/algebra/rational.hpp"

namespace slelab::algebra {

struct MinimalModel {
  int p;
  int p_prime;
};

struct KacLabel {
  int r;
  int s;
};

/// Central charge 1 - 6 (p - p')^2 / (p p'). Requires p > p' >= 2 coprime.
Rational minimal_model_c(MinimalModel model);

/// Weight ((r p - s p')^2 - (p - p')^2) / (4 p p') for 1 <= r < p',
/// 1 <= s < p.
Rational minimal_model_weight(MinimalModel model, KacLabel label);

struct KappaParams {
  Rational c;
  Rational delta;
};

/// c = 1 - 3 (4 - kappa)^2 / (2 kappa), delta = (6 - kappa) / (2 kappa);
/// the values for which (L_{-2} - kappa/4 L_{-1}^2)|delta> is singular.
KappaParams kappa_parameterization(const Rational& kappa);

}  // namespace slelab::algebra
