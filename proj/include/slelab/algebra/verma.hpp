#pragma once

#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/algebra/rational.hpp"

#include <span>
#include <vector>

namespace slelab::algebra {

/// Square matrix of polynomial entries, indexed by partitions_of(level).
struct GramMatrix {
  int level = 0;
  std::vector<Partition> basis;
  std::vector<std::vector<ParamPoly>> entries;
};

/// Shapovalov form at `level`: entry (lambda, mu) is
/// <h| L_{lambda_k} ... L_{lambda_1} L_{-mu_1} ... L_{-mu_k} |h>.
GramMatrix gram_matrix(int level, const VermaParams& params);

/// Determinant of the Gram matrix at a numeric (c, delta).
Rational gram_determinant(int level, const VermaParams& params);

/// Basis of the vectors at `level` annihilated by L_1 and L_2. Each vector
/// has coefficient 1 on its first nonzero basis partition and the set is in
/// reduced echelon form. Requires numeric params.
std::vector<PBWVector> find_singular_vectors(int level, const VermaParams& params);

/// All L_{-mu} g with |mu| = level - g.level(), in BasisOrder of mu.
std::vector<PBWVector> descendants(const PBWVector& generator, int level);

/// Residue of v modulo the span of the descendants of `generators` at v's
/// level. The descendant span must have rational coefficients; v may depend
/// on kappa. The residue is canonical: its support avoids every pivot
/// partition of the span.
PBWVector submodule_reduce(const PBWVector& v, std::span<const PBWVector> generators);

inline bool is_null(const PBWVector& v, std::span<const PBWVector> generators) {
  return submodule_reduce(v, generators).is_zero();
}

/// A Verma module together with an explicit list of submodule generators.
struct ModuleQuotient {
  VermaParams params;
  std::vector<PBWVector> generators;
};

/// Collects singular vectors level by level up to `max_level`, keeping only
/// those that are not already descendants of earlier ones.
ModuleQuotient primitive_singular_submodule(const VermaParams& params, int max_level);

}  // namespace slelab::algebra
