#ifndef COMPATLIE_TESTS_ORACLES_HPP
#define COMPATLIE_TESTS_ORACLES_HPP

// Brute-force reference implementations, independent of the library's
// structure-constant composition paths. Used to freeze expected values.

#include <random>
#include <vector>

#include "compatlie/algebra.hpp"

namespace compatlie::oracle {

/// J(x,y,z) by three nested bracket_apply calls on coordinate vectors.
inline SVec jacobiator_at(const BracketTensor& t, int i, int j, int k) {
  int n = t.dim();
  auto basis = [n](int u) {
    SVec v(n, Scalar(0));
    v[u - 1] = Scalar(1);
    return v;
  };
  SVec x = basis(i), y = basis(j), z = basis(k);
  SVec acc(n, Scalar(0));
  auto add = [&acc, n](const SVec& v) {
    for (int c = 0; c < n; ++c) acc[c] += v[c];
  };
  add(t.apply(t.apply(x, y), z));
  add(t.apply(t.apply(y, z), x));
  add(t.apply(t.apply(z, x), y));
  return acc;
}

/// L(x,y,z) of the compatibility proposition, by nested applies.
inline SVec mixed_at(const CompatAlgebra& a, int i, int j, int k) {
  int n = a.dim;
  auto basis = [n](int u) {
    SVec v(n, Scalar(0));
    v[u - 1] = Scalar(1);
    return v;
  };
  SVec x = basis(i), y = basis(j), z = basis(k);
  SVec acc(n, Scalar(0));
  auto add = [&acc, n](const SVec& v) {
    for (int c = 0; c < n; ++c) acc[c] += v[c];
  };
  const BracketTensor &b1 = a.bracket1, &b2 = a.bracket2;
  add(b2.apply(b1.apply(x, y), z));
  add(b2.apply(b1.apply(y, z), x));
  add(b2.apply(b1.apply(z, x), y));
  add(b1.apply(b2.apply(x, y), z));
  add(b1.apply(b2.apply(y, z), x));
  add(b1.apply(b2.apply(z, x), y));
  return acc;
}

/// Rank by plain fraction-preserving elimination, written independently of
/// linalg::rref.
inline int rank_of(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t sel = row;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[sel], rows[row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col].is_zero()) continue;
      Rational f = rows[r][col] / rows[row][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

inline Rational random_rational(std::mt19937_64& rng, int num_range = 9, int den_range = 5) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return Rational(num(rng), den(rng));
}

inline SVec random_svec(std::mt19937_64& rng, int n) {
  SVec v(n);
  for (auto& x : v) x = Scalar(random_rational(rng));
  return v;
}

}  // namespace compatlie::oracle

#endif
