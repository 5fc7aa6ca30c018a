#include <doctest.h>

#include <random>

#include "compatlie/families.hpp"
#include "compatlie/structure.hpp"
#include "oracles.hpp"

using namespace compatlie;

namespace {

QVec unit(int n, int i) {
  QVec v(n, Rational(0));
  v[i - 1] = Rational(1);
  return v;
}

Subspace coords(int n, std::initializer_list<int> idx) {
  std::vector<QVec> rows;
  for (int i : idx) rows.push_back(unit(n, i));
  return Subspace::span(n, rows);
}

}  // namespace

TEST_CASE("the 7-dimensional example: series, ideals, special failure") {
  CompatAlgebra L = make_example7();
  SeriesResult lcs = lower_central_series(L);
  CHECK(lcs.dims() == std::vector<int>{7, 5, 4, 4});
  CHECK(lcs.terms[1] == coords(7, {2, 4, 5, 6, 7}));
  CHECK(lcs.terms[2] == coords(7, {2, 4, 6, 7}));
  CHECK_FALSE(is_nilpotent(L));
  CHECK(is_solvable(L));

  Subspace i1 = coords(7, {1, 2, 4, 5, 6, 7});
  Subspace i2 = coords(7, {2, 3, 4, 5, 6, 7});
  CHECK(is_ideal(L, i1));
  CHECK(is_ideal(L, i2));
  CHECK(ideal_is_nilpotent(L, i1));
  CHECK(ideal_is_nilpotent(L, i2));
  CHECK(subspace_sum(i1, i2) == Subspace::full(7));

  Subspace prod = commutator_subspace(L, i2, i2);
  CHECK(prod == coords(7, {2, 6, 7}));
  CHECK(commutator_subspace_single(L, 2, prod, Subspace::full(7)) == coords(7, {2, 4, 6}));
  CHECK_FALSE(is_ideal(L, prod));
  CHECK_FALSE(is_special_ideal_against(L, i2, {i2}));
}

TEST_CASE("commutator with the zero subspace") {
  CompatAlgebra L = make_example7();
  CHECK(commutator_subspace(L, Subspace(7), Subspace::full(7)).is_zero());
}

TEST_CASE("abelian algebra") {
  CompatAlgebra a(4, BracketTensor(4), BracketTensor(4));
  CHECK(is_nilpotent(a));
  CHECK(nilindex(a) == 1);
  CHECK(center(a) == Subspace::full(4));
  CHECK(is_ideal(a, coords(4, {2})));
}

TEST_CASE("L_s series dims (filiform decay)") {
  CompatAlgebra a = make_Ls(SeriesSpec({3, 3}));
  // frozen from an independent series computation
  CHECK(lower_central_series(a).dims() == std::vector<int>{7, 5, 4, 3, 2, 1, 0});
  CHECK(is_nilpotent(a));
  CHECK(nilindex(a) == 6);
}

TEST_CASE("centers") {
  CompatAlgebra l7(7, make_Ln(7), BracketTensor(7));
  Subspace z = center(l7);
  CHECK(z == coords(7, {7}));
  // independent verification: each center vector commutes with every basis vector
  for (int r = 0; r < z.dim(); ++r) {
    SVec x(7);
    for (int c = 0; c < 7; ++c) x[c] = Scalar(z.basis_vector(r)[c]);
    for (int j = 1; j <= 7; ++j) {
      SVec ej(7, Scalar(0));
      ej[j - 1] = Scalar(1);
      for (const auto& v : l7.bracket1.apply(x, ej)) CHECK(v.is_zero());
    }
  }
  // Z(example7) = Z(g1) \cap Z(g2) = span{e5}
  CHECK(center(make_example7()) == coords(7, {5}));
}

TEST_CASE("ideal generation and whole/zero ideals") {
  CompatAlgebra L = make_example7();
  CHECK(is_ideal(L, Subspace::full(7)));
  CHECK(is_ideal(L, Subspace(7)));
  Subspace gen = ideal_generated_by(L, {unit(7, 1)});
  CHECK(is_ideal(L, gen));
  CHECK(gen.contains(unit(7, 1)));
}

TEST_CASE("special ideals") {
  CompatAlgebra L = make_example7();
  Subspace whole = Subspace::full(7);
  CHECK(is_special_ideal_against(L, whole, default_witness_family(L, whole, 0)));
  CHECK(is_special_ideal_against(L, Subspace(7), default_witness_family(L, Subspace(7), 0)));
  Subspace i2 = coords(7, {2, 3, 4, 5, 6, 7});
  CHECK_FALSE(is_special_nilpotent_ideal(L, i2));
}

TEST_CASE("series ideal-bound property [C^i, C^j] in C^{i+j}") {
  for (const CompatAlgebra& a : {lr_pair(8), lw_pair(8), make_Ls(SeriesSpec({2, 2, 2}))}) {
    SeriesResult s = lower_central_series(a);
    int depth = int(s.terms.size()) - 1;
    for (int i = 0; i <= depth; ++i)
      for (int j = 0; j <= depth; ++j) {
        if (i + j > depth) continue;
        Subspace prod = commutator_subspace(a, s.terms[i], s.terms[j]);
        CHECK(s.terms[i + j].contains(prod));
      }
  }
}

TEST_CASE("nilpotent implies nonzero center; quotient by center preserves nilpotency") {
  for (const CompatAlgebra& a :
       {lr_pair(7), lw_pair(9), make_Ls(SeriesSpec({3, 3})), make_existcc_N()}) {
    REQUIRE(is_nilpotent(a));
    Subspace z = center(a);
    CHECK(z.dim() > 0);
    CompatAlgebra q = quotient_algebra(a, z);
    CHECK(q.dim == a.dim - z.dim());
    CHECK(is_nilpotent(q));
  }
  // and the converse direction on a non-nilpotent algebra
  CompatAlgebra L = make_example7();
  CHECK_FALSE(is_nilpotent(quotient_algebra(L, center(L))));
}

TEST_CASE("sum of special nilpotent ideals is special nilpotent") {
  // corpus instances
  for (const CompatAlgebra& a : {lr_pair(7), make_Ls(SeriesSpec({2, 3}))}) {
    SeriesResult s = lower_central_series(a);
    // C^1 and C^2 are special nilpotent; so must be their sum (= C^1)
    REQUIRE(is_special_nilpotent_ideal(a, s.terms[1]));
    REQUIRE(is_special_nilpotent_ideal(a, s.terms[2]));
    CHECK(is_special_nilpotent_ideal(a, subspace_sum(s.terms[1], s.terms[2])));
  }
  // randomized ideals in small compatible algebras
  std::mt19937_64 rng(2024);
  CompatAlgebra a = make_Ls(SeriesSpec({2, 2}));
  for (int trial = 0; trial < 10; ++trial) {
    QVec v(a.dim), w(a.dim);
    for (auto& x : v) x = oracle::random_rational(rng, 2, 1);
    for (auto& x : w) x = oracle::random_rational(rng, 2, 1);
    Subspace i1 = ideal_generated_by(a, {v});
    Subspace i2 = ideal_generated_by(a, {w});
    if (!is_special_nilpotent_ideal(a, i1) || !is_special_nilpotent_ideal(a, i2)) continue;
    CHECK(is_special_nilpotent_ideal(a, subspace_sum(i1, i2)));
  }
}

TEST_CASE("verify_nilradical on the existcc extension") {
  CompatAlgebra r = make_existcc_R().substituted({{"a1", Poly(Rational(1))},
                                                  {"a2", Poly(Rational(-2, 3))},
                                                  {"a3", Poly(Rational(5))},
                                                  {"a4", Poly(Rational(0))}});
  REQUIRE(r.is_parameter_free());
  CHECK(is_solvable(r));
  CHECK_FALSE(is_nilpotent(r));
  Subspace n = coords(8, {1, 2, 3, 4, 5, 6, 7});
  CHECK(verify_nilradical(r, n));
}

TEST_CASE("a nilpotent algebra is its own nilradical") {
  CompatAlgebra a = make_Ls(SeriesSpec({3, 3}));
  CHECK(verify_nilradical(a, Subspace::full(a.dim)));
}

TEST_CASE("structure operations reject parametric algebras") {
  CompatAlgebra f1 = make_F1();
  CHECK_THROWS_AS(lower_central_series(f1), precondition_error);
  CHECK_THROWS_AS(center(f1), precondition_error);
}
