#include <doctest.h>

#include <random>

#include "compatlie/cohomology.hpp"
#include "compatlie/families.hpp"
#include "compatlie/structure.hpp"
#include "oracles.hpp"

using namespace compatlie;

namespace {

TwoCochain psi_R(int n) {
  TwoCochain c(n);
  for (int i = 3; i <= n - 2; ++i) c.add_term(2, i, i + 2, Scalar(1));
  return c;
}

TwoCochain psi_W(int n) { return make_Wn(n) - make_Ln(n); }

}  // namespace

TEST_CASE("circle product: Jacobi via circle, both directions") {
  BracketTensor mu = make_Ln(7);
  CHECK(circle(mu, mu).is_zero());

  // a non-Lie antisymmetric tensor has circle(t,t) != 0
  BracketTensor bad(3);
  bad.add_term(1, 2, 1, Scalar(1));
  bad.add_term(1, 3, 2, Scalar(1));
  CHECK_FALSE(circle(bad, bad).is_zero());

  // random small tensors: circle(t,t) = 0 iff check_jacobi holds
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<int> idx(1, 4), coef(-2, 2);
  for (int trial = 0; trial < 80; ++trial) {
    BracketTensor t(4);
    for (int p = 0; p < 4; ++p) {
      int i = idx(rng), j = idx(rng), k = idx(rng);
      if (i != j) t.add_term(i, j, k, Scalar(coef(rng)));
    }
    CHECK(circle(t, t).is_zero() == check_jacobi(t).holds);
  }
}

TEST_CASE("circle is bilinear") {
  std::mt19937_64 rng(9);
  std::uniform_int_distribution<int> idx(1, 4), coef(-2, 2);
  auto random_tensor = [&]() {
    BracketTensor t(4);
    for (int p = 0; p < 3; ++p) {
      int i = idx(rng), j = idx(rng), k = idx(rng);
      if (i != j) t.add_term(i, j, k, Scalar(coef(rng)));
    }
    return t;
  };
  for (int trial = 0; trial < 20; ++trial) {
    BracketTensor f = random_tensor(), g = random_tensor(), h = random_tensor();
    TriResidual lhs = circle(f, g + h);
    TriResidual rhs = circle(f, g);
    rhs += circle(f, h);
    for (int i = 1; i <= 4; ++i)
      for (int j = i + 1; j <= 4; ++j)
        for (int k = j + 1; k <= 4; ++k) CHECK(lhs.at(i, j, k) == rhs.at(i, j, k));
  }
}

TEST_CASE("Psi_R and Psi_W circle relations at n = 10") {
  CHECK(circle(psi_R(10), psi_R(10)).is_zero());
  CHECK(circle(psi_W(10), psi_W(10)).is_zero());
  CHECK_FALSE(sym_circle(psi_R(10), psi_W(10)).is_zero());
}

TEST_CASE("adapted cocycles Psi_{k,r}") {
  TwoCochain p14 = make_psi(7, 1, 4);
  CHECK(terms_to_svec(p14.product(1, 2), 7)[3] == Scalar(1));  // Psi(e_1,e_2) = e_4
  CHECK(is_lie_2cocycle(make_Ln(7), p14));

  // the zero cochain and the bracket itself are cocycles
  CHECK(is_lie_2cocycle(make_Ln(7), TwoCochain(7)));
  CHECK(is_lie_2cocycle(make_Ln(7), make_Ln(7)));

  // index-set gate
  CHECK_THROWS_AS(make_psi(7, 2, 5), error);
  auto d7 = delta_set(7);
  CHECK(std::find(d7.begin(), d7.end(), std::make_pair(3, 7)) != d7.end());

  // vanishing outside 1 <= i <= k < j <= n
  for (auto [k, r] : delta_set(9)) {
    TwoCochain psi = make_psi(9, k, r);
    for (int i = 1; i <= 9; ++i)
      for (int j = i + 1; j <= 9; ++j)
        if (!(i <= k && k < j)) CHECK(psi.product(i, j).empty());
    // normalization Psi(e_k, e_{k+1}) = e_r
    SVec v = terms_to_svec(psi.product(k, k + 1), 9);
    for (int c = 1; c <= 9; ++c) CHECK(v[c - 1] == (c == r ? Scalar(1) : Scalar(0)));
  }
}

TEST_CASE("full cocycle suite over the admissible set, n <= 11") {
  for (int n = 4; n <= 11; ++n) {
    BracketTensor ln = make_Ln(n);
    for (auto [k, r] : delta_set(n)) CHECK(is_lie_2cocycle(ln, make_psi(n, k, r)));
  }
}

TEST_CASE("cocycle condition equals degree-2 truncation of the deformed Jacobi residual") {
  // residual(g + t phi) = t * dphi + t^2 circle(phi,phi) as polynomials in t
  BracketTensor g = make_Ln(6);
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> idx(1, 6), coef(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    TwoCochain phi(6);
    for (int p = 0; p < 4; ++p) {
      int i = idx(rng), j = idx(rng), k = idx(rng);
      if (i != j) phi.add_term(i, j, k, Scalar(coef(rng)));
    }
    Scalar t = Scalar::parameter("t");
    TriResidual deformed = jacobiator(g + phi.scaled(t));
    TriResidual dphi = sym_circle(g, phi);
    TriResidual phi2 = circle(phi, phi);
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k) {
          SVec lhs = terms_to_svec(deformed.at(i, j, k), 6);
          SVec d1 = terms_to_svec(dphi.at(i, j, k), 6);
          SVec d2 = terms_to_svec(phi2.at(i, j, k), 6);
          for (int c = 0; c < 6; ++c) CHECK(lhs[c] == t * d1[c] + t * t * d2[c]);
        }
    CHECK(is_lie_2cocycle(g, phi) == dphi.is_zero());
  }
}

TEST_CASE("compatible cocycle pairs") {
  CompatAlgebra a = lr_pair(8);
  // the pair of brackets is a cocycle pair over itself
  CHECK(compat_2cocycle_pair(a, a.bracket1, a.bracket2));
  CHECK(compat_2cocycle_pair(a, TwoCochain(8), TwoCochain(8)));

  // linear combinations with formal weights
  Scalar l1 = Scalar::parameter("l1"), l2 = Scalar::parameter("l2");
  Scalar m1 = Scalar::parameter("m1"), m2 = Scalar::parameter("m2");
  TwoCochain phi = a.bracket1.scaled(l1) + a.bracket2.scaled(l2);
  TwoCochain psi = a.bracket1.scaled(m1) + a.bracket2.scaled(m2);
  CHECK(compat_2cocycle_pair(a, phi, psi));
}

TEST_CASE("(beta, -beta) is a cocycle pair of the collapsed model pair") {
  // L_s = (alpha, beta); the sum pair (alpha + beta, 0) deforms back by (-beta, beta)
  CompatAlgebra ls = make_Ls(SeriesSpec({2, 2}));
  BracketTensor alpha = ls.bracket1, beta = ls.bracket2;
  CompatAlgebra collapsed(ls.dim, alpha + beta, BracketTensor(ls.dim));
  collapsed.basis_labels = ls.basis_labels;
  CHECK(compat_2cocycle_pair(collapsed, beta, -beta));
  CHECK(compat_2cocycle_pair(collapsed, -beta, beta));

  // the deformation at t = 1 recovers L_s; with formal t it stays compatible
  CompatAlgebra at1 = linear_deformation(collapsed, -beta, beta, Scalar(1));
  CHECK(at1.bracket1 == ls.bracket1);
  CHECK(at1.bracket2 == ls.bracket2);
  CompatAlgebra formal = linear_deformation(collapsed, -beta, beta, Scalar::parameter("t"));
  CHECK(check_compatibility(formal).holds);
}

TEST_CASE("linear deformation of the model filiform by an adapted cocycle") {
  // L_7 as the pair (mu0, 0) deformed by (Psi_{1,4}, 0) with formal t
  CompatAlgebra l(7, make_Ln(7), BracketTensor(7));
  TwoCochain psi = make_psi(7, 1, 4);
  REQUIRE(circle(psi, psi).is_zero());
  CompatAlgebra deformed = linear_deformation(l, psi, TwoCochain(7), Scalar::parameter("t"));
  CHECK(check_compatibility(deformed).holds);
  CHECK(check_jacobi(deformed.bracket1).holds);

  // t = 0 returns the algebra unchanged
  CompatAlgebra same = linear_deformation(l, psi, TwoCochain(7), Scalar(0));
  CHECK(same.bracket1 == l.bracket1);
  CHECK(same.bracket2 == l.bracket2);

  // a non-cocycle pair is rejected
  TwoCochain junk(7);
  junk.add_term(2, 3, 2, Scalar(1));
  CHECK_THROWS_AS(linear_deformation(l, junk, TwoCochain(7), Scalar(1)), precondition_error);
}

TEST_CASE("pencil nilindex bound") {
  CompatAlgebra a = lr_pair(7);
  int k = nilindex(a);
  CHECK(pencil_nilindex_bound(a, Rational(1), Rational(0), Rational(0), Rational(1)) == k);
  CHECK(pencil_nilindex_bound(a, Rational(1), Rational(1), Rational(0), Rational(0)) <= k);
  CHECK(pencil_nilindex_bound(a, Rational(1), Rational(1), Rational(0), Rational(0)) == 6);
  CHECK(pencil_nilindex_bound(a, Rational(0), Rational(0), Rational(0), Rational(0)) == 1);
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 20; ++trial) {
    CHECK(pencil_nilindex_bound(a, oracle::random_rational(rng, 3, 2),
                                oracle::random_rational(rng, 3, 2),
                                oracle::random_rational(rng, 3, 2),
                                oracle::random_rational(rng, 3, 2)) <= k);
  }
  CHECK_THROWS_AS(
      pencil_nilindex_bound(make_example7(), Rational(1), Rational(0), Rational(0), Rational(1)),
      precondition_error);
}

TEST_CASE("cocycle space dimensions are consistent with the adapted basis") {
  // dim Z^2(L_n) at small n at least accounts for the adapted cocycles plus
  // coboundaries; here we pin the computed values as regression anchors
  Subspace z6 = lie_2cocycle_space(make_Ln(6));
  Subspace z7 = lie_2cocycle_space(make_Ln(7));
  for (auto [k, r] : delta_set(7)) {
    TwoCochain psi = make_psi(7, k, r);
    QVec flat(7 * 7 * 6 / 2, Rational(0));
    int idx = 0;
    for (int i = 1; i <= 7; ++i)
      for (int j = i + 1; j <= 7; ++j) {
        SVec col = terms_to_svec(psi.product(i, j), 7);
        for (int c = 0; c < 7; ++c) flat[idx * 7 + c] = col[c].rat();
        ++idx;
      }
    CHECK(z7.contains(flat));
  }
  CHECK(z6.dim() > 0);
  // the compatible pair's joint space contains (b1, b2) itself
  CompatAlgebra a = lr_pair(5);
  Subspace zc = compat_2cocycle_space(a);
  QVec joint(2 * 5 * 5 * 4 / 2, Rational(0));
  int idx = 0;
  int block = 5 * 4 / 2 * 5;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j) {
      SVec c1 = terms_to_svec(a.bracket1.product(i, j), 5);
      SVec c2 = terms_to_svec(a.bracket2.product(i, j), 5);
      for (int c = 0; c < 5; ++c) {
        joint[idx * 5 + c] = c1[c].rat();
        joint[block + idx * 5 + c] = c2[c].rat();
      }
      ++idx;
    }
  CHECK(zc.contains(joint));
}
