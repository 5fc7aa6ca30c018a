#include <doctest.h>

#include <random>

#include "compatlie/linalg.hpp"
#include "oracles.hpp"

using namespace compatlie;

namespace {

MatrixQ mat(const std::vector<std::vector<long>>& rows) {
  MatrixQ m(int(rows.size()), rows.empty() ? 0 : int(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = Rational(rows[r][c]);
  return m;
}

QVec qv(const std::vector<long>& v) {
  QVec out;
  for (long x : v) out.push_back(Rational(x));
  return out;
}

}  // namespace

TEST_CASE("rref examples") {
  auto [id2, rk2] = rref(MatrixQ::identity(2));
  CHECK(id2 == MatrixQ::identity(2));
  CHECK(rk2 == 2);

  auto [m, rk] = rref(mat({{1, 2}, {2, 4}}));
  CHECK(rk == 1);
  CHECK(m == mat({{1, 2}, {0, 0}}));

  auto [z, rkz] = rref(MatrixQ(3, 3));
  CHECK(rkz == 0);
  CHECK(z.is_zero());
}

TEST_CASE("kernel examples") {
  CHECK(kernel(MatrixQ::identity(4)).dim() == 0);
  CHECK(kernel(MatrixQ(2, 3)) == Subspace::full(3));

  Subspace k = kernel(mat({{1, 1, 0}}));
  CHECK(k.dim() == 2);
  CHECK(k.contains(qv({1, -1, 0})));
  CHECK(k.contains(qv({0, 0, 1})));
  CHECK_FALSE(k.contains(qv({1, 0, 0})));
}

TEST_CASE("subspace lattice examples") {
  Subspace a = Subspace::span(2, {qv({1, 0})});
  Subspace b = Subspace::span(2, {qv({0, 1})});
  CHECK(subspace_sum(a, b) == Subspace::full(2));

  Subspace v = Subspace::span(3, {qv({1, 2, 3}), qv({0, 1, 1})});
  CHECK(subspace_intersect(v, v) == v);

  Subspace p = Subspace::span(3, {qv({1, 0, 0}), qv({0, 1, 0})});
  Subspace q = Subspace::span(3, {qv({0, 1, 0}), qv({0, 0, 1})});
  CHECK(subspace_intersect(p, q) == Subspace::span(3, {qv({0, 1, 0})}));
}

TEST_CASE("rank-nullity and modular law on random matrices") {
  std::mt19937_64 rng(4242);
  std::uniform_int_distribution<int> dims(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    int r = dims(rng), c = dims(rng);
    MatrixQ m(r, c);
    std::vector<std::vector<Rational>> copy(r, std::vector<Rational>(c));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) {
        m.at(i, j) = oracle::random_rational(rng, 4, 3);
        copy[i][j] = m.at(i, j);
      }
    int rk = rank(m);
    CHECK(rk == oracle::rank_of(copy));
    CHECK(kernel(m).dim() + rk == c);
  }
  for (int trial = 0; trial < 100; ++trial) {
    int n = dims(rng);
    auto random_space = [&](int gens) {
      std::vector<QVec> v;
      for (int g = 0; g < gens; ++g) {
        QVec w(n);
        for (auto& x : w) x = oracle::random_rational(rng, 3, 2);
        v.push_back(w);
      }
      return Subspace::span(n, v);
    };
    Subspace a = random_space(dims(rng)), b = random_space(dims(rng));
    CHECK(a.dim() + b.dim() ==
          subspace_sum(a, b).dim() + subspace_intersect(a, b).dim());
    CHECK(subspace_sum(a, b).contains(a));
    CHECK(a.contains(subspace_intersect(a, b)));
  }
}

TEST_CASE("rref idempotence and canonical equality") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    MatrixQ m(4, 5);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 5; ++j) m.at(i, j) = oracle::random_rational(rng, 5, 3);
    auto [r1, k1] = rref(m);
    auto [r2, k2] = rref(r1);
    CHECK(r1 == r2);
    CHECK(k1 == k2);
  }
  // equal spans give byte-identical bases
  Subspace s1 = Subspace::span(3, {qv({1, 1, 0}), qv({0, 2, 2})});
  Subspace s2 = Subspace::span(3, {qv({2, 2, 0}), qv({1, 2, 1}), qv({3, 4, 1})});
  CHECK(s1 == s2);
}

TEST_CASE("ambient dimension mismatch is an error") {
  Subspace a = Subspace::full(2), b = Subspace::full(3);
  CHECK_THROWS_AS(subspace_sum(a, b), error);
  CHECK_THROWS_AS(subspace_intersect(a, b), error);
  CHECK_THROWS_AS(a.contains(qv({1, 0, 0})), error);
}
