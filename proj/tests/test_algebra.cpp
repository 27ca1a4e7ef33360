#include "slelab/algebra/linalg.hpp"
#include "slelab/algebra/minimal_model.hpp"
#include "slelab/algebra/param_poly.hpp"
#include "slelab/algebra/partition.hpp"
#include "slelab/algebra/pbw_vector.hpp"
#include "slelab/algebra/rational.hpp"
#include "slelab/algebra/upoly.hpp"
#include "slelab/algebra/verma.hpp"
#include "slelab/algebra/virasoro.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <vector>

using namespace slelab::algebra;

namespace {

const ParamPoly kKappa = ParamPoly::variable(Param::kappa);
const ParamPoly kC = ParamPoly::variable(Param::c);
const ParamPoly kDelta = ParamPoly::variable(Param::delta);

// Independent normal-ordering oracle: words of modes acting on |h>,
// rewritten with the commutator until every word is a non-decreasing run of
// negative modes (L_{-a} L_{-b} ... with a >= b).
using Word = std::vector<int>;

std::map<Partition, ParamPoly, BasisOrder> oracle_normal_order(const Word& start) {
  std::map<Word, ParamPoly> pending{{start, ParamPoly(1)}};
  std::map<Partition, ParamPoly, BasisOrder> done;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Word w = node.key();
    const ParamPoly coeff = node.mapped();
    if (coeff.is_zero()) {
      continue;
    }
    auto push = [&pending](const Word& word, const ParamPoly& c) {
      auto [it, inserted] = pending.emplace(word, c);
      if (!inserted) {
        it->second += c;
      }
    };
    if (!w.empty() && w.back() >= 0) {
      if (w.back() == 0) {
        push(Word(w.begin(), w.end() - 1), coeff * kDelta);
      }
      continue;
    }
    std::size_t bad = w.size();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] > w[i + 1]) {
        bad = i;
        break;
      }
    }
    if (bad == w.size()) {
      std::vector<int> parts;
      for (int m : w) {
        parts.push_back(-m);
      }
      auto [it, inserted] = done.emplace(Partition(parts), coeff);
      if (!inserted) {
        it->second += coeff;
      }
      continue;
    }
    const int a = w[bad];
    const int b = w[bad + 1];
    Word swapped = w;
    std::swap(swapped[bad], swapped[bad + 1]);
    push(swapped, coeff);
    Word merged(w.begin(), w.begin() + static_cast<long>(bad));
    merged.push_back(a + b);
    merged.insert(merged.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
    push(merged, coeff * ParamPoly(a - b));
    if (a + b == 0) {
      Word dropped(w.begin(), w.begin() + static_cast<long>(bad));
      dropped.insert(dropped.end(), w.begin() + static_cast<long>(bad) + 2, w.end());
      push(dropped, coeff * kC * ParamPoly(Rational(static_cast<long>(a) * (a * a - 1), 12)));
    }
  }
  std::erase_if(done, [](const auto& kv) { return kv.second.is_zero(); });
  return done;
}

PBWVector engine_apply_word(const Word& w, const VermaParams& params) {
  VermaAction action(params);
  PBWVector v = PBWVector::highest_weight(params);
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    v = action.apply(*it, v);
  }
  return v;
}

// Commutator as a map generator -> coefficient, with key nullopt for the centre.
using Combo = std::map<std::optional<int>, ParamPoly>;

Combo bracket(int m, int k) {
  Combo out;
  for (const auto& t : commutator(m, k)) {
    out[t.generator] += t.coefficient;
  }
  return out;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("-10/4").str() == "-5/2");
  CHECK(Rational::parse("7").str() == "7");
  CHECK(Rational(0, 5).str() == "0");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("polynomial text round trip") {
  const ParamPoly p = ParamPoly(2) - ParamPoly(Rational(1, 8)) * kKappa + kC * kDelta.pow(2);
  CHECK(ParamPoly::parse(p.str()) == p);
  CHECK(ParamPoly::parse("2 - 1/8*kappa + c*delta^2") == p);
  CHECK(ParamPoly::parse("-5/3") == ParamPoly(Rational(-5, 3)));
  CHECK(p.substitute(Param::kappa, Rational(16)).substitute(Param::c, Rational(0)) == ParamPoly(0));
  CHECK_THROWS(ParamPoly::parse("2 +"));
}

TEST_CASE("univariate roots and gcd") {
  // (x - 40)(3x + 2)(x^2 + 1)
  const UPoly x = UPoly::x();
  const UPoly f = (x - UPoly(40)) * (UPoly(3) * x + UPoly(2)) * (x * x + UPoly(1));
  CHECK(f.rational_roots() == std::vector<Rational>{Rational(-2, 3), Rational(40)});
  const UPoly g = (x - UPoly(40)) * (x - UPoly(1));
  CHECK(gcd(f, g) == x - UPoly(40));
  const auto [q, r] = f.divmod(g);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
}

TEST_CASE("partition order and counts") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4[0] == Partition{4});
  CHECK(p4[1] == Partition{3, 1});
  CHECK(p4[2] == Partition{2, 2});
  CHECK(p4[3] == Partition{2, 1, 1});
  CHECK(p4[4] == Partition{1, 1, 1, 1});
  const std::vector<std::size_t> counts{1, 1, 2, 3, 5, 7, 11, 15, 22};
  for (int n = 0; n < 9; ++n) {
    CHECK(partitions_of(n).size() == counts[static_cast<std::size_t>(n)]);
  }
  CHECK_THROWS(Partition({1, 2}));
}

TEST_CASE("nullspace and determinant") {
  RationalMatrix m(2, 3);
  m(0, 0) = 1;
  m(0, 1) = 2;
  m(0, 2) = 3;
  m(1, 0) = 2;
  m(1, 1) = 4;
  m(1, 2) = 6;
  const auto ns = nullspace(m);
  CHECK(ns.size() == 2);
  for (const auto& v : ns) {
    CHECK(v[0] + Rational(2) * v[1] + Rational(3) * v[2] == Rational(0));
  }
  RationalMatrix sq(2, 2);
  sq(0, 0) = Rational(1, 2);
  sq(0, 1) = 3;
  sq(1, 0) = 5;
  sq(1, 1) = 7;
  CHECK(determinant(sq) == Rational(7, 2) - Rational(15));
}

TEST_CASE("commutator antisymmetry and Jacobi identity") {
  for (int m = -4; m <= 4; ++m) {
    for (int k = -4; k <= 4; ++k) {
      Combo ab = bracket(m, k);
      for (const auto& [g, c] : bracket(k, m)) {
        ab[g] += c;
      }
      for (const auto& [g, c] : ab) {
        CHECK(c.is_zero());
      }
    }
  }
  // [[a,b],c] + [[b,c],a] + [[c,a],b] = 0; central terms commute with everything
  auto nested = [](int a, int b, int c) {
    Combo out;
    for (const auto& [g, coeff] : bracket(a, b)) {
      if (!g) {
        continue;
      }
      for (const auto& [h, inner] : bracket(*g, c)) {
        out[h] += coeff * inner;
      }
    }
    return out;
  };
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) {
      for (int c = -3; c <= 3; ++c) {
        Combo sum = nested(a, b, c);
        for (const auto& [g, v] : nested(b, c, a)) {
          sum[g] += v;
        }
        for (const auto& [g, v] : nested(c, a, b)) {
          sum[g] += v;
        }
        for (const auto& [g, v] : sum) {
          CHECK(v.is_zero());
        }
      }
    }
  }
}

TEST_CASE("lowering examples") {
  const auto params = VermaParams::symbolic();
  const PBWVector l2(2, params, {{Partition{2}, ParamPoly(1)}});
  const PBWVector expected(3, params, {{Partition{2, 1}, ParamPoly(1)}, {Partition{3}, ParamPoly(1)}});
  CHECK(act_lowering(l2, 1) == expected);
  // L_1 L_{-1}|h> = 2 delta |h>
  const PBWVector l1(1, params, {{Partition{1}, ParamPoly(1)}});
  CHECK(act_raising(l1, 1) == PBWVector(0, params, {{Partition{}, ParamPoly(2) * kDelta}}));
  // L_2 L_{-2}|h> = (4 delta + c/2)|h>
  CHECK(act_raising(l2, 2).coefficient(Partition{}) == ParamPoly(4) * kDelta + ParamPoly(Rational(1, 2)) * kC);
  CHECK(act_raising(l1, 3).is_zero());
}

TEST_CASE("engine agrees with the word-rewriting oracle") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> mode(-4, 3);
  std::uniform_int_distribution<int> length(1, 5);
  const auto params = VermaParams::symbolic();
  int compared = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Word w(static_cast<std::size_t>(length(rng)));
    for (int& m : w) {
      m = mode(rng);
    }
    int level = 0;
    bool valid = true;
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      level -= *it;
      valid = valid && level >= 0;
    }
    const auto oracle = oracle_normal_order(w);
    if (!valid) {
      // an intermediate level below 0 means the word annihilates |h>
      CHECK(oracle.empty());
      continue;
    }
    const PBWVector got = engine_apply_word(w, params);
    CHECK(got.terms().size() == oracle.size());
    for (const auto& [p, coeff] : oracle) {
      CHECK(got.coefficient(p) == coeff);
    }
    ++compared;
  }
  CHECK(compared > 100);
}

TEST_CASE("symbolic Gram matrix at level 2") {
  const auto g = gram_matrix(2, VermaParams::symbolic());
  REQUIRE(g.basis.size() == 2);
  CHECK(g.entries[0][0] == ParamPoly(Rational(1, 2)) * kC + ParamPoly(4) * kDelta);
  CHECK(g.entries[0][1] == ParamPoly(6) * kDelta);
  CHECK(g.entries[1][0] == ParamPoly(6) * kDelta);
  CHECK(g.entries[1][1] == ParamPoly(4) * kDelta + ParamPoly(8) * kDelta.pow(2));
  CHECK(gram_matrix(1, VermaParams::numeric(0, 0)).entries[0][0] == ParamPoly(0));
}

TEST_CASE("Gram matrices are symmetric and satisfy adjointness up to level 5") {
  const auto params = VermaParams::numeric(Rational(-22, 5), Rational(1, 3));
  for (int level = 1; level <= 5; ++level) {
    const auto g = gram_matrix(level, params);
    const std::size_t dim = g.basis.size();
    for (std::size_t i = 0; i < dim; ++i) {
      for (std::size_t j = 0; j < dim; ++j) {
        CHECK(g.entries[i][j] == g.entries[j][i]);
      }
    }
    // <L_{-k} u, v> = <u, L_k v> for u at level - k
    for (int k = 1; k <= level; ++k) {
      const auto lower_basis = partitions_of(level - k);
      // <h|h> = 1 at level 0
      const auto lower_entry = [&](std::size_t a, std::size_t b) {
        return level == k ? ParamPoly(1) : gram_matrix(level - k, params).entries[a][b];
      };
      for (std::size_t a = 0; a < lower_basis.size(); ++a) {
        const PBWVector u(level - k, params, {{lower_basis[a], ParamPoly(1)}});
        const PBWVector lu = act_lowering(u, k);
        for (std::size_t b = 0; b < dim; ++b) {
          const PBWVector v(level, params, {{g.basis[b], ParamPoly(1)}});
          const PBWVector kv = act_raising(v, k);
          ParamPoly lhs;
          for (const auto& [p, coeff] : lu.terms()) {
            const auto idx = static_cast<std::size_t>(std::find(g.basis.begin(), g.basis.end(), p) - g.basis.begin());
            lhs += coeff * g.entries[idx][b];
          }
          ParamPoly rhs;
          for (const auto& [p, coeff] : kv.terms()) {
            const auto idx = static_cast<std::size_t>(std::find(lower_basis.begin(), lower_basis.end(), p) -
                                                      lower_basis.begin());
            rhs += coeff * lower_entry(a, idx);
          }
          CHECK(lhs == rhs);
        }
      }
    }
  }
}

TEST_CASE("level-2 Kac determinant") {
  // det = 2 delta (16 delta^2 + 2 (c - 5) delta + c)
  std::mt19937 rng(5);
  for (int i = 0; i < 10; ++i) {
    const Rational c(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    const Rational d(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 7));
    const Rational expected = Rational(2) * d * (Rational(16) * d * d + Rational(2) * (c - Rational(5)) * d + c);
    CHECK(gram_determinant(2, VermaParams::numeric(c, d)) == expected);
  }
}

TEST_CASE("vanishing Gram determinant matches existence of singular vectors") {
  std::vector<VermaParams> cases{VermaParams::numeric(Rational(-22, 5), 0),
                                 VermaParams::numeric(Rational(-22, 5), Rational(-1, 5)),
                                 VermaParams::numeric(Rational(1, 2), Rational(1, 16)),
                                 VermaParams::numeric(Rational(1, 2), Rational(1, 2)),
                                 VermaParams::numeric(Rational(3, 7), Rational(2, 9)),
                                 VermaParams::numeric(Rational(0), Rational(1, 3))};
  for (const auto& params : cases) {
    bool seen = false;
    for (int level = 1; level <= 5; ++level) {
      seen = seen || !find_singular_vectors(level, params).empty();
      CHECK((gram_determinant(level, params).is_zero()) == seen);
    }
  }
}

TEST_CASE("singular vectors are annihilated by all raising modes") {
  const auto params = VermaParams::numeric(Rational(-22, 5), 0);
  const auto v4 = find_singular_vectors(4, params);
  REQUIRE(v4.size() == 1);
  for (int k = 1; k <= 4; ++k) {
    CHECK(act_raising(v4[0], k).is_zero());
  }
  const std::vector<Rational> expected{1, Rational(5, 27), Rational(-5, 3), Rational(125, 27), Rational(-125, 108)};
  const auto basis = partitions_of(4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    CHECK(v4[0].coefficient(basis[i]) == ParamPoly(expected[i]));
  }
  // Ising: Delta_{2,1} = 1/2 at c = 1/2 has a level-2 singular vector
  CHECK(find_singular_vectors(2, VermaParams::numeric(Rational(1, 2), Rational(1, 2))).size() == 1);
}

TEST_CASE("submodule reduction") {
  const auto params = VermaParams::numeric(Rational(-22, 5), 0);
  const auto module = primitive_singular_submodule(params, 4);
  REQUIRE(module.generators.size() == 2);
  const PBWVector nullv(4, params, {{Partition{4}, ParamPoly(1)}, {Partition{2, 2}, ParamPoly(Rational(-5, 3))}});
  CHECK(is_null(nullv, module.generators));
  const PBWVector other(4, params, {{Partition{4}, ParamPoly(1)}, {Partition{2, 2}, ParamPoly(Rational(-4, 3))}});
  CHECK_FALSE(is_null(other, module.generators));
  // a kappa-dependent vector reduces coefficientwise
  const PBWVector kv(4, params, {{Partition{4}, kKappa}, {Partition{2, 2}, ParamPoly(Rational(-5, 3)) * kKappa}});
  CHECK(submodule_reduce(kv, module.generators).is_zero());
}

TEST_CASE("minimal model tables") {
  CHECK(minimal_model_c({5, 2}) == Rational(-22, 5));
  CHECK(minimal_model_c({4, 3}) == Rational(1, 2));
  CHECK(minimal_model_weight({5, 2}, {1, 1}) == Rational(0));
  CHECK(minimal_model_weight({5, 2}, {1, 2}) == Rational(-1, 5));
  CHECK(minimal_model_weight({4, 3}, {2, 1}) == Rational(1, 2));
  CHECK(minimal_model_weight({4, 3}, {1, 2}) == Rational(1, 16));
  for (const MinimalModel m : {MinimalModel{5, 2}, MinimalModel{4, 3}, MinimalModel{7, 5}}) {
    for (int r = 1; r < m.p_prime; ++r) {
      for (int s = 1; s < m.p; ++s) {
        CHECK(minimal_model_weight(m, {r, s}) == minimal_model_weight(m, {m.p_prime - r, m.p - s}));
      }
    }
  }
  CHECK_THROWS(minimal_model_c({4, 2}));
  CHECK_THROWS(minimal_model_weight({5, 2}, {2, 1}));
}

TEST_CASE("kappa parameterization") {
  const auto at6 = kappa_parameterization(6);
  CHECK(at6.c == Rational(0));
  CHECK(at6.delta == Rational(0));
  const auto at10 = kappa_parameterization(10);
  CHECK(at10.c == Rational(-22, 5));
  CHECK(at10.delta == Rational(-1, 5));
  // duality kappa <-> 16/kappa preserves c
  CHECK(kappa_parameterization(Rational(8, 5)).c == at10.c);
  CHECK_THROWS(kappa_parameterization(0));
}

TEST_CASE("level-2 vector is singular along the kappa family for random rational kappa") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 20; ++i) {
    const long q = 1 + static_cast<long>(rng() % 40);
    const Rational kappa(1 + static_cast<long>(rng() % static_cast<unsigned long>(20 * q)), q);
    const auto kp = kappa_parameterization(kappa);
    const auto params = VermaParams::numeric(kp.c, kp.delta);
    const PBWVector v(2, params, {{Partition{2}, ParamPoly(1)}, {Partition{1, 1}, ParamPoly(-kappa / Rational(4))}});
    CHECK(act_raising(v, 1).is_zero());
    CHECK(act_raising(v, 2).is_zero());
    // and it is not singular off the family
    const auto off = VermaParams::numeric(kp.c, kp.delta + Rational(1));
    const PBWVector w(2, off, {{Partition{2}, ParamPoly(1)}, {Partition{1, 1}, ParamPoly(-kappa / Rational(4))}});
    CHECK_FALSE(act_raising(w, 1).is_zero());
  }
}
