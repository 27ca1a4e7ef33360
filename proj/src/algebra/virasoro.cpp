#include "slelab/algebra/virasoro.hpp"

#include <stdexcept>

namespace slelab::algebra {

std::vector<CommutatorTerm> commutator(int m, int k) {
  std::vector<CommutatorTerm> out;
  if (m != k) {
    out.push_back({m + k, ParamPoly(Rational(m - k))});
  }
  if (m + k == 0) {
    const Rational factor = Rational(static_cast<long>(m) * (static_cast<long>(m) * m - 1), 12);
    if (!factor.is_zero()) {
      out.push_back({std::nullopt, ParamPoly(factor) * ParamPoly::variable(Param::c)});
    }
  }
  return out;
}

VermaAction::VermaAction(VermaParams params) : params_(std::move(params)) {}

const PBWVector::TermMap& VermaAction::apply(int m, const Partition& p) {
  const auto key = std::make_pair(m, p);
  if (auto it = cache_.find(key); it != cache_.end()) {
    return it->second;
  }
  PBWVector::TermMap result = compute(m, p);
  return cache_.emplace(key, std::move(result)).first->second;
}

PBWVector VermaAction::apply(int m, const PBWVector& v) {
  if (!(v.params() == params_)) {
    throw std::invalid_argument("VermaAction: vector belongs to a different module");
  }
  const int level = v.level() - m;
  if (level < 0) {
    return PBWVector(0, params_);
  }
  PBWVector out(level, params_);
  for (const auto& [p, coeff] : v.terms()) {
    for (const auto& [q, c2] : apply(m, p)) {
      out.add_term(q, coeff * c2);
    }
  }
  return out;
}

void VermaAction::accumulate(PBWVector::TermMap& into, const PBWVector::TermMap& terms,
                             const ParamPoly& scale) {
  for (const auto& [p, coeff] : terms) {
    ParamPoly add = coeff * scale;
    auto [it, inserted] = into.try_emplace(p, add);
    if (!inserted) {
      it->second += add;
      if (it->second.is_zero()) {
        into.erase(it);
      }
    }
  }
}

void VermaAction::lower_into(PBWVector::TermMap& into, int a, const PBWVector::TermMap& terms,
                             const ParamPoly& scale) {
  // `terms` may point into cache_; std::map nodes survive the insertions
  // made by the nested apply() calls.
  for (const auto& [p, coeff] : terms) {
    accumulate(into, apply(-a, p), coeff * scale);
  }
}

PBWVector::TermMap VermaAction::compute(int m, const Partition& p) {
  PBWVector::TermMap out;
  if (p.empty()) {
    if (m < 0) {
      out.emplace(Partition{-m}, ParamPoly(1L));
    } else if (m == 0 && !params_.delta.is_zero()) {
      out.emplace(Partition{}, params_.delta);
    }
    return out;
  }
  if (m == 0) {
    ParamPoly eigen = params_.delta + ParamPoly(Rational(p.level()));
    if (!eigen.is_zero()) {
      out.emplace(p, std::move(eigen));
    }
    return out;
  }
  const int a = p.front();
  const Partition rest = p.tail();
  if (m < 0) {
    const int k = -m;
    if (k >= a) {
      out.emplace(p.prepend(k), ParamPoly(1L));
      return out;
    }
    // L_{-k} L_{-a} = L_{-a} L_{-k} + (a - k) L_{-(a+k)}
    lower_into(out, a, apply(-k, rest), ParamPoly(1L));
    accumulate(out, apply(-(a + k), rest), ParamPoly(Rational(a - k)));
    return out;
  }
  // L_m L_{-a} = L_{-a} L_m + (m + a) L_{m-a} + (c/12) m (m^2 - 1) delta_{m,a}
  lower_into(out, a, apply(m, rest), ParamPoly(1L));
  accumulate(out, apply(m - a, rest), ParamPoly(Rational(m + a)));
  if (m == a) {
    const Rational factor(static_cast<long>(m) * (static_cast<long>(m) * m - 1), 12);
    PBWVector::TermMap single;
    single.emplace(rest, ParamPoly(1L));
    accumulate(out, single, ParamPoly(factor) * params_.c);
  }
  return out;
}

PBWVector act_lowering(const PBWVector& v, int k) {
  if (k < 1) {
    throw std::invalid_argument("act_lowering: k must be >= 1");
  }
  VermaAction action(v.params());
  return action.apply(-k, v);
}

PBWVector act_raising(const PBWVector& v, int k) {
  if (k < 1) {
    throw std::invalid_argument("act_raising: k must be >= 1");
  }
  VermaAction action(v.params());
  return action.apply(k, v);
}

}  // namespace slelab::algebra
