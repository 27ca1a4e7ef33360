#pragma once

#include "slelab/algebra/param_poly.hpp"
#include "slelab/algebra/pbw_vector.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace slelab::algebra {

/// One term of a commutator: coefficient * L_{generator}, or the central
/// term when `generator` is empty.
struct CommutatorTerm {
  std::optional<int> generator;
  ParamPoly coefficient;

  friend bool operator==(const CommutatorTerm&, const CommutatorTerm&) = default;
};

/// [L_m, L_k] = (m - k) L_{m+k} + (c/12) m (m^2 - 1) delta_{m+k,0}, with c
/// the symbolic central charge. Zero terms are omitted.
std::vector<CommutatorTerm> commutator(int m, int k);

/// Action of Virasoro modes on a Verma module, re-normal-ordered into the
/// PBW basis. Results for single monomials are memoized, so an instance is
/// meant to be reused for a batch of computations and not shared across
/// threads.
class VermaAction {
 public:
  explicit VermaAction(VermaParams params);

  const VermaParams& params() const { return params_; }

  /// L_m applied to the monomial |p>, for any integer m.
  const PBWVector::TermMap& apply(int m, const Partition& p);
  PBWVector apply(int m, const PBWVector& v);

 private:
  PBWVector::TermMap compute(int m, const Partition& p);
  void accumulate(PBWVector::TermMap& into, const PBWVector::TermMap& terms, const ParamPoly& scale);
  void lower_into(PBWVector::TermMap& into, int a, const PBWVector::TermMap& terms, const ParamPoly& scale);

  VermaParams params_;
  std::map<std::pair<int, Partition>, PBWVector::TermMap> cache_;
};

/// L_{-k} v, k >= 1. The level grows by k.
PBWVector act_lowering(const PBWVector& v, int k);

/// L_k v, k >= 1. The level drops by k; when k exceeds the level the result
/// is the zero vector (reported at level 0).
PBWVector act_raising(const PBWVector& v, int k);

}  // namespace slelab::algebra
