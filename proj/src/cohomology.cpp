#include "compatlie/cohomology.hpp"

#include "compatlie/structure.hpp"

namespace compatlie {

bool is_lie_2cocycle(const BracketTensor& g, const TwoCochain& phi) {
  if (!check_jacobi(g).holds)
    throw precondition_error("cocycle test requires a Lie bracket");
  return sym_circle(g, phi).is_zero();
}

std::vector<std::pair<int, int>> delta_set(int n) {
  std::vector<std::pair<int, int>> d;
  for (int k = 1; k <= n - 1; ++k)
    for (int r = 2 * k + 2; r <= n; ++r) d.emplace_back(k, r);
  if (n % 2 == 1) d.emplace_back((n - 1) / 2, n);
  return d;
}

namespace {

Rational binomial(int a, int b) {
  if (b < 0 || b > a) return Rational(0);
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), a, b);
  return Rational(r, mpz_class(1));
}

}  // namespace

TwoCochain make_psi(int n, int k, int r) {
  auto d = delta_set(n);
  if (std::find(d.begin(), d.end(), std::make_pair(k, r)) == d.end())
    throw error("(k,r) outside the admissible index set");
  TwoCochain psi(n);
  for (int i = 1; i <= k; ++i) {
    for (int j = k + 1; j <= n; ++j) {
      Rational c = binomial(j - k - 1, k - i);
      if (c.is_zero()) continue;
      if ((k - i) % 2 == 1) c = -c;
      int idx = i + j + r - 2 * k - 1;
      if (idx >= 1 && idx <= n) psi.add_term(i, j, idx, Scalar(c));
    }
  }
  return psi;
}

bool compat_2cocycle_pair(const CompatAlgebra& a, const TwoCochain& phi, const TwoCochain& psi) {
  if (!is_lie_2cocycle(a.bracket1, phi) || !is_lie_2cocycle(a.bracket2, psi)) return false;
  TriResidual mixed = sym_circle(a.bracket1, psi);
  mixed += sym_circle(a.bracket2, phi);
  return mixed.is_zero();
}

namespace {

// cochain coordinates: pair index p over i<j (lexicographic), coordinate k;
// flat index = p * n + (k-1)
int pair_index(int i, int j, int n) {
  // position of (i,j), i<j, in lexicographic order
  return (i - 1) * n - (i * (i - 1)) / 2 + (j - i - 1);
}

int cochain_dim(int n) { return n * n * (n - 1) / 2; }

// rows of the linear system "sym_circle(g, phi) = 0" in phi-coordinates,
// with a column offset for paired systems
void append_cocycle_rows(const BracketTensor& g, int col_offset, int total_cols,
                         std::vector<QVec>* rows) {
  int n = g.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        std::vector<QVec> block(n, QVec(total_cols, Rational(0)));
        const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          int a = t[0], b = t[1], c = t[2];
          // g(phi(a,b), c): phi(a,b) = sum_m phi[ab][m] e_m
          {
            int sgn = a < b ? 1 : -1;
            int lo = std::min(a, b), hi = std::max(a, b);
            int p = pair_index(lo, hi, n);
            for (int m = 1; m <= n; ++m)
              for (const auto& [v, w] : g.product(m, c))
                block[v - 1][col_offset + p * n + (m - 1)] += Rational(sgn) * w.rat();
          }
          // phi(g(a,b), c): g(a,b) = sum_m c_ab^m e_m, phi(m, c) coordinates
          for (const auto& [m, w] : g.product(a, b)) {
            if (m == c) continue;
            int sgn = m < c ? 1 : -1;
            int lo = std::min(m, c), hi = std::max(m, c);
            int p = pair_index(lo, hi, n);
            for (int v = 1; v <= n; ++v)
              block[v - 1][col_offset + p * n + (v - 1)] += Rational(sgn) * w.rat();
          }
        }
        for (auto& row : block) rows->push_back(std::move(row));
      }
}

}  // namespace

Subspace lie_2cocycle_space(const BracketTensor& g) {
  if (!g.is_parameter_free())
    throw precondition_error("cocycle space requires a parameter-free bracket");
  int n = g.dim();
  std::vector<QVec> rows;
  append_cocycle_rows(g, 0, cochain_dim(n), &rows);
  if (rows.empty()) return Subspace::full(cochain_dim(n));
  return kernel(MatrixQ::from_rows(rows, cochain_dim(n)));
}

Subspace compat_2cocycle_space(const CompatAlgebra& a) {
  if (!a.is_parameter_free())
    throw precondition_error("cocycle space requires a parameter-free algebra");
  int n = a.dim;
  int cd = cochain_dim(n);
  std::vector<QVec> rows;
  // dphi = 0 w.r.t. bracket1 (phi block), dpsi = 0 w.r.t. bracket2 (psi block)
  append_cocycle_rows(a.bracket1, 0, 2 * cd, &rows);
  {
    std::vector<QVec> psi_rows;
    append_cocycle_rows(a.bracket2, cd, 2 * cd, &psi_rows);
    for (auto& r : psi_rows) rows.push_back(std::move(r));
  }
  // mixed condition: sym_circle(b1, psi) + sym_circle(b2, phi) = 0
  {
    std::vector<QVec> m1, m2;
    append_cocycle_rows(a.bracket1, cd, 2 * cd, &m1);  // psi against bracket1
    append_cocycle_rows(a.bracket2, 0, 2 * cd, &m2);   // phi against bracket2
    if (m1.size() != m2.size()) throw error("internal: mixed cocycle row mismatch");
    for (std::size_t r = 0; r < m1.size(); ++r) {
      QVec row(2 * cd, Rational(0));
      for (int c = 0; c < 2 * cd; ++c) row[c] = m1[r][c] + m2[r][c];
      rows.push_back(std::move(row));
    }
  }
  return kernel(MatrixQ::from_rows(rows, 2 * cd));
}

CompatAlgebra linear_deformation(const CompatAlgebra& a, const TwoCochain& phi,
                                 const TwoCochain& psi, const Scalar& t) {
  if (!compat_2cocycle_pair(a, phi, psi))
    throw precondition_error("(phi, psi) is not a compatible 2-cocycle pair");
  CompatAlgebra r = a;
  r.bracket1 = a.bracket1 + phi.scaled(t);
  r.bracket2 = a.bracket2 + psi.scaled(t);
  for (const auto& name : t.parameters())
    if (std::find(r.parameters.begin(), r.parameters.end(), name) == r.parameters.end())
      r.parameters.push_back(name);
  return r;
}

int pencil_nilindex_bound(const CompatAlgebra& a, const Rational& l1, const Rational& l2,
                          const Rational& m1, const Rational& m2) {
  if (!is_nilpotent(a)) throw precondition_error("pencil nilindex requires a nilpotent algebra");
  CompatAlgebra p = a;
  p.bracket1 = pencil_combine(Scalar(l1), a.bracket1, Scalar(l2), a.bracket2);
  p.bracket2 = pencil_combine(Scalar(m1), a.bracket1, Scalar(m2), a.bracket2);
  int bound = nilindex(a);
  int got = nilindex(p);
  if (got > bound) throw error("internal: pencil nilindex exceeds the original");
  return got;
}

}  // namespace compatlie
