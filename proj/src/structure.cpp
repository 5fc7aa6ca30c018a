#include "compatlie/structure.hpp"

#include <random>

namespace compatlie {

namespace {

void require_parameter_free(const CompatAlgebra& a) {
  if (!a.is_parameter_free())
    throw precondition_error("operation requires a parameter-free algebra; substitute first");
}

QVec apply_rational(const BracketTensor& b, const QVec& x, const QVec& y) {
  int n = b.dim();
  QVec out(n, Rational(0));
  for (const auto& [ij, terms] : b.stored()) {
    auto [i, j] = ij;
    Rational w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : terms) out[k - 1] += w * c.rat();
  }
  return out;
}

bool vec_is_zero(const QVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

std::vector<int> SeriesResult::dims() const {
  std::vector<int> d;
  d.reserve(terms.size());
  for (const auto& t : terms) d.push_back(t.dim());
  return d;
}

Subspace commutator_subspace(const CompatAlgebra& a, const Subspace& s, const Subspace& t) {
  require_parameter_free(a);
  if (s.ambient_dim() != a.dim || t.ambient_dim() != a.dim)
    throw error("ambient-dimension mismatch");
  std::vector<QVec> gens;
  for (int u = 0; u < s.dim(); ++u) {
    QVec sv = s.basis_vector(u);
    for (int v = 0; v < t.dim(); ++v) {
      QVec tv = t.basis_vector(v);
      for (const BracketTensor* b : {&a.bracket1, &a.bracket2}) {
        QVec w = apply_rational(*b, sv, tv);
        if (!vec_is_zero(w)) gens.push_back(std::move(w));
      }
    }
  }
  return Subspace::span(a.dim, gens);
}

Subspace commutator_subspace_single(const CompatAlgebra& a, int which, const Subspace& s,
                                    const Subspace& t) {
  require_parameter_free(a);
  const BracketTensor& b = which == 1 ? a.bracket1 : a.bracket2;
  std::vector<QVec> gens;
  for (int u = 0; u < s.dim(); ++u)
    for (int v = 0; v < t.dim(); ++v) {
      QVec w = apply_rational(b, s.basis_vector(u), t.basis_vector(v));
      if (!vec_is_zero(w)) gens.push_back(std::move(w));
    }
  return Subspace::span(a.dim, gens);
}

namespace {

SeriesResult run_series(const CompatAlgebra& a, bool derived) {
  SeriesResult res;
  Subspace whole = Subspace::full(a.dim);
  res.terms.push_back(whole);
  if (whole.is_zero()) {
    res.stabilized = true;
    res.nilindex = 0;
    return res;
  }
  for (;;) {
    const Subspace& prev = res.terms.back();
    Subspace next = derived ? commutator_subspace(a, prev, prev)
                            : commutator_subspace(a, whole, prev);
    if (next == prev) {
      res.terms.push_back(next);  // repeated once to witness stabilization
      res.stabilized = true;
      break;
    }
    res.terms.push_back(next);
    if (next.is_zero()) {
      res.stabilized = true;
      res.nilindex = int(res.terms.size()) - 1;
      break;
    }
  }
  return res;
}

}  // namespace

SeriesResult lower_central_series(const CompatAlgebra& a) { return run_series(a, false); }
SeriesResult derived_series(const CompatAlgebra& a) { return run_series(a, true); }

bool is_nilpotent(const CompatAlgebra& a) {
  return lower_central_series(a).terms.back().is_zero();
}

bool is_solvable(const CompatAlgebra& a) { return derived_series(a).terms.back().is_zero(); }

int nilindex(const CompatAlgebra& a) {
  SeriesResult s = lower_central_series(a);
  if (!s.nilindex) throw error("nilindex of a non-nilpotent algebra");
  return *s.nilindex;
}

Subspace center(const CompatAlgebra& a) {
  require_parameter_free(a);
  int n = a.dim;
  // stack the maps x -> [x, e_j] for all j and both brackets
  MatrixQ sys(2 * n * n, n);
  int row = 0;
  for (const BracketTensor* b : {&a.bracket1, &a.bracket2}) {
    for (int j = 1; j <= n; ++j) {
      for (int i = 1; i <= n; ++i) {
        for (const auto& [k, c] : b->product(i, j)) sys.at(row + k - 1, i - 1) += c.rat();
      }
      row += n;
    }
  }
  return kernel(sys);
}

bool is_ideal(const CompatAlgebra& a, const Subspace& s) {
  require_parameter_free(a);
  QVec basis_j(a.dim, Rational(0));
  for (int u = 0; u < s.dim(); ++u) {
    QVec sv = s.basis_vector(u);
    for (int j = 1; j <= a.dim; ++j) {
      basis_j.assign(a.dim, Rational(0));
      basis_j[j - 1] = Rational(1);
      for (const BracketTensor* b : {&a.bracket1, &a.bracket2}) {
        QVec w = apply_rational(*b, sv, basis_j);
        if (!vec_is_zero(w) && !s.contains(w)) return false;
      }
    }
  }
  return true;
}

bool is_subalgebra(const CompatAlgebra& a, const Subspace& s) {
  require_parameter_free(a);
  for (int u = 0; u < s.dim(); ++u)
    for (int v = u + 1; v < s.dim(); ++v)
      for (const BracketTensor* b : {&a.bracket1, &a.bracket2}) {
        QVec w = apply_rational(*b, s.basis_vector(u), s.basis_vector(v));
        if (!vec_is_zero(w) && !s.contains(w)) return false;
      }
  return true;
}

Subspace ideal_generated_by(const CompatAlgebra& a, const std::vector<QVec>& vectors) {
  require_parameter_free(a);
  Subspace current = Subspace::span(a.dim, vectors);
  for (;;) {
    Subspace grown = subspace_sum(current, commutator_subspace(a, current, Subspace::full(a.dim)));
    if (grown == current) return current;
    current = grown;
  }
}

bool ideal_is_nilpotent(const CompatAlgebra& a, const Subspace& ideal) {
  Subspace cur = ideal;
  for (;;) {
    Subspace next = commutator_subspace(a, ideal, cur);
    if (next.is_zero()) return true;
    if (next == cur) return false;
    cur = next;
  }
}

bool is_special_ideal_against(const CompatAlgebra& a, const Subspace& ideal,
                              const std::vector<Subspace>& witnesses) {
  if (!is_ideal(a, ideal)) throw precondition_error("special-ideal check requires an ideal");
  for (const auto& w : witnesses) {
    if (!is_ideal(a, w)) throw precondition_error("special-ideal witness is not an ideal");
    Subspace prod = commutator_subspace(a, ideal, w);
    if (!is_ideal(a, prod)) return false;
  }
  return true;
}

std::vector<Subspace> default_witness_family(const CompatAlgebra& a, const Subspace& ideal,
                                             std::uint64_t seed, int random_count) {
  std::vector<Subspace> family;
  auto push_unique = [&family](const Subspace& s) {
    for (const auto& f : family)
      if (f == s) return;
    family.push_back(s);
  };
  push_unique(Subspace::full(a.dim));
  for (const auto& t : lower_central_series(a).terms) push_unique(t);
  for (const auto& t : derived_series(a).terms) push_unique(t);
  push_unique(ideal);
  push_unique(center(a));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-3, 3);
  for (int r = 0; r < random_count; ++r) {
    QVec v(a.dim);
    for (auto& x : v) x = Rational(entry(rng));
    if (vec_is_zero(v)) continue;
    push_unique(ideal_generated_by(a, {v}));
  }
  return family;
}

bool is_special_nilpotent_ideal(const CompatAlgebra& a, const Subspace& ideal,
                                std::uint64_t seed) {
  if (!is_ideal(a, ideal)) throw precondition_error("special-ideal check requires an ideal");
  if (!ideal_is_nilpotent(a, ideal)) return false;
  return is_special_ideal_against(a, ideal, default_witness_family(a, ideal, seed));
}

std::vector<int> complement_coordinates(const Subspace& s) {
  std::vector<bool> pivot(s.ambient_dim(), false);
  for (int r = 0; r < s.dim(); ++r) {
    QVec v = s.basis_vector(r);
    for (int c = 0; c < s.ambient_dim(); ++c) {
      if (!v[c].is_zero()) {
        pivot[c] = true;
        break;
      }
    }
  }
  std::vector<int> coords;
  for (int c = 0; c < s.ambient_dim(); ++c)
    if (!pivot[c]) coords.push_back(c + 1);
  return coords;
}

namespace {

bool subspace_series_nilpotent(const CompatAlgebra& a, const Subspace& s) {
  Subspace cur = s;
  for (;;) {
    Subspace next = commutator_subspace(a, s, cur);
    if (next.is_zero()) return true;
    if (next == cur) return false;
    cur = next;
  }
}

}  // namespace

bool verify_nilradical(const CompatAlgebra& a, const Subspace& n, std::uint64_t seed) {
  if (!is_solvable(a)) throw precondition_error("nilradical verification requires a solvable algebra");
  if (!is_special_nilpotent_ideal(a, n, seed)) return false;
  for (int c : complement_coordinates(n)) {
    QVec x(a.dim, Rational(0));
    x[c - 1] = Rational(1);
    std::vector<QVec> gens;
    for (int r = 0; r < n.dim(); ++r) gens.push_back(n.basis_vector(r));
    gens.push_back(x);
    Subspace sub = Subspace::span(a.dim, gens);
    if (subspace_series_nilpotent(a, sub)) return false;
  }
  return true;
}

CompatAlgebra quotient_algebra(const CompatAlgebra& a, const Subspace& z) {
  require_parameter_free(a);
  if (!is_ideal(a, z)) throw precondition_error("quotient requires an ideal");
  std::vector<int> comp = complement_coordinates(z);
  int m = int(comp.size());

  // reduce v modulo z, then read off complement coordinates
  auto project = [&](QVec v) {
    for (int r = 0; r < z.dim(); ++r) {
      QVec b = z.basis_vector(r);
      int col = 0;
      while (col < a.dim && b[col].is_zero()) ++col;
      if (col < a.dim && !v[col].is_zero()) {
        Rational f = v[col];
        for (int c = col; c < a.dim; ++c) v[c] -= f * b[c];
      }
    }
    QVec out(m);
    for (int u = 0; u < m; ++u) out[u] = v[comp[u] - 1];
    return out;
  };

  BracketTensor b1(m), b2(m);
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      QVec x(a.dim, Rational(0)), y(a.dim, Rational(0));
      x[comp[u] - 1] = Rational(1);
      y[comp[v] - 1] = Rational(1);
      QVec p1 = project(apply_rational(a.bracket1, x, y));
      QVec p2 = project(apply_rational(a.bracket2, x, y));
      b1.set_product(u + 1, v + 1, qvec_to_terms(p1));
      b2.set_product(u + 1, v + 1, qvec_to_terms(p2));
    }
  }
  CompatAlgebra q(m, b1, b2);
  for (int u = 0; u < m; ++u) q.basis_labels[u] = a.label(comp[u]);
  return q;
}

}  // namespace compatlie
