#include "slelab/algebra/verma.hpp"

#include "slelab/algebra/linalg.hpp"
#include "slelab/algebra/virasoro.hpp"

#include <map>
#include <stdexcept>

namespace slelab::algebra {

namespace {

Rational numeric_value(const ParamPoly& p, const char* context) {
  const auto value = p.as_rational();
  if (!value) {
    throw std::invalid_argument(std::string(context) + ": coefficient " + p.str() + " is not numeric");
  }
  return *value;
}

std::map<Partition, std::size_t, BasisOrder> index_of(const std::vector<Partition>& basis) {
  std::map<Partition, std::size_t, BasisOrder> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    idx.emplace(basis[i], i);
  }
  return idx;
}

}  // namespace

GramMatrix gram_matrix(int level, const VermaParams& params) {
  if (level < 1) {
    throw std::invalid_argument("gram_matrix: level must be >= 1");
  }
  GramMatrix g;
  g.level = level;
  g.basis = partitions_of(level);
  const std::size_t n = g.basis.size();
  g.entries.assign(n, std::vector<ParamPoly>(n));
  VermaAction action(params);
  for (std::size_t j = 0; j < n; ++j) {
    PBWVector ket(level, params);
    ket.add_term(g.basis[j], ParamPoly(1L));
    // Raising by lambda_1 first, then lambda_2, ... is the adjoint of
    // L_{-lambda_1} ... L_{-lambda_k}.
    for (std::size_t i = 0; i < n; ++i) {
      PBWVector state = ket;
      for (int part : g.basis[i].parts()) {
        state = action.apply(part, state);
      }
      g.entries[i][j] = state.coefficient(Partition{});
    }
  }
  return g;
}

Rational gram_determinant(int level, const VermaParams& params) {
  if (!params.is_numeric()) {
    throw std::invalid_argument("gram_determinant: params must be numeric");
  }
  const GramMatrix g = gram_matrix(level, params);
  RationalMatrix m(g.basis.size(), g.basis.size());
  for (std::size_t i = 0; i < g.basis.size(); ++i) {
    for (std::size_t j = 0; j < g.basis.size(); ++j) {
      m(i, j) = numeric_value(g.entries[i][j], "gram_determinant");
    }
  }
  return determinant(std::move(m));
}

std::vector<PBWVector> find_singular_vectors(int level, const VermaParams& params) {
  if (level < 1) {
    throw std::invalid_argument("find_singular_vectors: level must be >= 1");
  }
  if (!params.is_numeric()) {
    throw std::invalid_argument("find_singular_vectors: params must be numeric");
  }
  const auto basis = partitions_of(level);
  const auto below1 = partitions_of(level - 1);
  const auto below2 = level >= 2 ? partitions_of(level - 2) : std::vector<Partition>{};
  const auto idx1 = index_of(below1);
  const auto idx2 = index_of(below2);

  RationalMatrix eq(below1.size() + below2.size(), basis.size());
  VermaAction action(params);
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (const auto& [p, coeff] : action.apply(1, basis[j])) {
      eq(idx1.at(p), j) = numeric_value(coeff, "find_singular_vectors");
    }
    if (level >= 2) {
      for (const auto& [p, coeff] : action.apply(2, basis[j])) {
        eq(below1.size() + idx2.at(p), j) = numeric_value(coeff, "find_singular_vectors");
      }
    }
  }
  std::vector<PBWVector> out;
  for (const auto& sol : nullspace(eq)) {
    PBWVector v(level, params);
    for (std::size_t j = 0; j < basis.size(); ++j) {
      v.add_term(basis[j], ParamPoly(sol[j]));
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<PBWVector> descendants(const PBWVector& generator, int level) {
  const int gap = level - generator.level();
  if (gap < 0) {
    return {};
  }
  VermaAction action(generator.params());
  std::vector<PBWVector> out;
  for (const Partition& mu : partitions_of(gap)) {
    PBWVector v = generator;
    const auto parts = mu.parts();
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
      v = action.apply(-*it, v);
    }
    out.push_back(std::move(v));
  }
  return out;
}

PBWVector submodule_reduce(const PBWVector& v, std::span<const PBWVector> generators) {
  const auto basis = partitions_of(v.level());
  const auto idx = index_of(basis);
  RationalMatrix span(0, basis.size());
  for (const PBWVector& g : generators) {
    if (!(g.params() == v.params())) {
      throw std::invalid_argument("submodule_reduce: generator belongs to a different module");
    }
    if (g.level() > v.level()) {
      continue;
    }
    for (const PBWVector& d : descendants(g, v.level())) {
      std::vector<Rational> row(basis.size(), Rational(0));
      for (const auto& [p, coeff] : d.terms()) {
        row[idx.at(p)] = numeric_value(coeff, "submodule_reduce");
      }
      span.append_row(row);
    }
  }
  PBWVector residue = v;
  if (span.rows() == 0) {
    return residue;
  }
  const RowEchelon rref = reduced_row_echelon(std::move(span));
  for (std::size_t r = 0; r < rref.pivots.size(); ++r) {
    const ParamPoly lead = residue.coefficient(basis[rref.pivots[r]]);
    if (lead.is_zero()) {
      continue;
    }
    PBWVector row(v.level(), v.params());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      row.add_term(basis[c], ParamPoly(rref.matrix(r, c)));
    }
    residue -= row * lead;
  }
  return residue;
}

ModuleQuotient primitive_singular_submodule(const VermaParams& params, int max_level) {
  ModuleQuotient q{params, {}};
  for (int level = 1; level <= max_level; ++level) {
    for (const PBWVector& sv : find_singular_vectors(level, params)) {
      if (!is_null(sv, q.generators)) {
        q.generators.push_back(sv);
      }
    }
  }
  return q;
}

}  // namespace slelab::algebra
