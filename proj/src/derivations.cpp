#include "compatlie/derivations.hpp"

namespace compatlie {

namespace {

void require_parameter_free(const BracketTensor& t) {
  if (!t.is_parameter_free())
    throw precondition_error("derivation solving requires a parameter-free bracket");
}

/// Rows of the Leibniz linear system for one bracket, in n^2 unknowns
/// m[u][v] (row-major: index u*n + v), where d(e_v) = sum_u m[u][v] e_u.
void append_leibniz_rows(const BracketTensor& t, std::vector<QVec>* rows) {
  int n = t.dim();
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      Terms prod = t.product(i, j);
      // one equation per output coordinate v:
      //   sum_k c_ij^k m[v][k] - sum_u (m[u][i] c_uj^v + m[u][j] c_iu^v) = 0
      std::vector<QVec> block(n, QVec(n * n, Rational(0)));
      for (const auto& [k, c] : prod)
        for (int v = 1; v <= n; ++v) block[v - 1][(v - 1) * n + (k - 1)] += c.rat();
      for (int u = 1; u <= n; ++u) {
        for (const auto& [v, c] : t.product(u, j)) block[v - 1][(u - 1) * n + (i - 1)] -= c.rat();
        for (const auto& [v, c] : t.product(i, u)) block[v - 1][(u - 1) * n + (j - 1)] -= c.rat();
      }
      for (auto& row : block) rows->push_back(std::move(row));
    }
  }
}

std::vector<MatrixQ> unflatten(const Subspace& s, int n) {
  std::vector<MatrixQ> mats;
  for (int r = 0; r < s.dim(); ++r) {
    QVec v = s.basis_vector(r);
    MatrixQ m(n, n);
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) m.at(u, w) = v[u * n + w];
    mats.push_back(std::move(m));
  }
  return mats;
}

DerivationSpace from_subspace(int n, const Subspace& s) {
  DerivationSpace d;
  d.dim = n;
  d.space = s;
  d.basis = unflatten(s, n);
  return d;
}

}  // namespace

bool DerivationSpace::contains(const MatrixQ& m) const {
  return space.contains(m.flattened());
}

bool leibniz_holds(const BracketTensor& t, const MatrixQ& d) {
  int n = t.dim();
  SMatrix ds = SMatrix::from_rational(d);
  for (int i = 1; i <= n; ++i) {
    SVec ei(n, Scalar(0)), di(n, Scalar(0));
    ei[i - 1] = Scalar(1);
    for (int u = 0; u < n; ++u) di[u] = Scalar(d.at(u, i - 1));
    for (int j = i + 1; j <= n; ++j) {
      SVec ej(n, Scalar(0)), dj(n, Scalar(0));
      ej[j - 1] = Scalar(1);
      for (int u = 0; u < n; ++u) dj[u] = Scalar(d.at(u, j - 1));
      SVec lhs = ds.apply(t.apply(ei, ej));
      SVec rhs = t.apply(di, ej);
      SVec rhs2 = t.apply(ei, dj);
      for (int u = 0; u < n; ++u)
        if (!(lhs[u] - rhs[u] - rhs2[u]).is_zero()) return false;
    }
  }
  return true;
}

DerivationSpace derivation_space(const BracketTensor& t) {
  require_parameter_free(t);
  int n = t.dim();
  std::vector<QVec> rows;
  append_leibniz_rows(t, &rows);
  DerivationSpace d = from_subspace(n, kernel(MatrixQ::from_rows(rows, n * n)));
  for (const auto& m : d.basis)
    if (!leibniz_holds(t, m)) throw error("internal: solved derivation fails Leibniz recheck");
  return d;
}

DerivationSpace compat_derivation_space(const CompatAlgebra& a) {
  require_parameter_free(a.bracket1);
  require_parameter_free(a.bracket2);
  int n = a.dim;
  std::vector<QVec> rows;
  append_leibniz_rows(a.bracket1, &rows);
  append_leibniz_rows(a.bracket2, &rows);
  DerivationSpace d = from_subspace(n, kernel(MatrixQ::from_rows(rows, n * n)));
  for (const auto& m : d.basis)
    if (!leibniz_holds(a.bracket1, m) || !leibniz_holds(a.bracket2, m))
      throw error("internal: solved derivation fails Leibniz recheck");
  return d;
}

DerivationSpace diagonal_derivations(const DerivationSpace& space) {
  int n = space.dim;
  std::vector<QVec> diag;
  for (int i = 0; i < n; ++i) {
    QVec v(n * n, Rational(0));
    v[i * n + i] = Rational(1);
    diag.push_back(std::move(v));
  }
  return from_subspace(n, subspace_intersect(space.space, Subspace::span(n * n, diag)));
}

bool matrix_is_nilpotent(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw error("nilpotency of non-square matrix");
  MatrixQ p = m;
  for (int i = 1; i < m.rows(); ++i) {
    if (p.is_zero()) return true;
    p = p * m;
  }
  return p.is_zero();
}

bool space_is_nil(const DerivationSpace& space) {
  int n = space.dim;
  if (space.size() == 0) return true;
  SMatrix generic(n, n);
  for (int b = 0; b < space.size(); ++b) {
    Scalar p = Scalar::parameter("snp" + std::to_string(b + 1));
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v) {
        const Rational& c = space.basis[b].at(u, v);
        if (!c.is_zero()) generic.at(u, v) += p * Scalar(c);
      }
  }
  std::vector<Scalar> cp = char_poly(generic);
  for (int k = 0; k < n; ++k)
    if (!cp[k].is_zero()) return false;
  return true;
}

namespace {

// dense univariate polynomial over Q, coefficient of x^i at index i
using UPoly = std::vector<Rational>;

void trim(UPoly* p) {
  while (!p->empty() && p->back().is_zero()) p->pop_back();
}

UPoly derivative(const UPoly& p) {
  UPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Rational(long(i)));
  trim(&d);
  return d;
}

UPoly remainder(UPoly a, const UPoly& b) {
  trim(&a);
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(&a);
  }
  return a;
}

UPoly quotient(UPoly a, const UPoly& b) {
  trim(&a);
  if (a.size() < b.size()) return {};
  UPoly q(a.size() - b.size() + 1, Rational(0));
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(&a);
  }
  return q;
}

UPoly gcd(UPoly a, UPoly b) {
  trim(&a);
  trim(&b);
  while (!b.empty()) {
    UPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (auto& c : a) c /= lead;
  }
  return a;
}

}  // namespace

bool matrix_is_semisimple(const MatrixQ& m) {
  if (m.rows() != m.cols()) throw error("semisimplicity of non-square matrix");
  int n = m.rows();
  std::vector<Scalar> cs = char_poly(SMatrix::from_rational(m));
  UPoly cp(n + 1);
  for (int i = 0; i <= n; ++i) cp[i] = cs[i].rat();
  UPoly g = gcd(cp, derivative(cp));
  UPoly radical = quotient(cp, g);  // squarefree part
  // semisimple over Q iff the squarefree part annihilates the matrix
  MatrixQ acc(n, n);
  MatrixQ power = MatrixQ::identity(n);
  for (std::size_t i = 0; i < radical.size(); ++i) {
    if (!radical[i].is_zero()) acc = acc + power.scaled(radical[i]);
    if (i + 1 < radical.size()) power = power * m;
  }
  return acc.is_zero();
}

DerivationSpace inner_derivations(const BracketTensor& t) {
  require_parameter_free(t);
  int n = t.dim();
  std::vector<QVec> rows;
  for (int i = 1; i <= n; ++i) {
    MatrixQ ad = t.adjoint_matrix_of_basis(i);
    if (!ad.is_zero()) rows.push_back(ad.flattened());
  }
  return from_subspace(n, Subspace::span(n * n, rows));
}

int outer_dimension(const BracketTensor& t) {
  return derivation_space(t).size() - inner_derivations(t).size();
}

}  // namespace compatlie
