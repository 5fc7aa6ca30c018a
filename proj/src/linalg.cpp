#include "compatlie/linalg.hpp"

namespace compatlie {

MatrixQ MatrixQ::identity(int n) {
  MatrixQ m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

MatrixQ MatrixQ::from_rows(const std::vector<QVec>& rows, int cols) {
  MatrixQ m(int(rows.size()), cols);
  for (int r = 0; r < int(rows.size()); ++r) {
    if (int(rows[r].size()) != cols) throw error("row length mismatch");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

QVec MatrixQ::row(int r) const {
  QVec v(cols_);
  for (int c = 0; c < cols_; ++c) v[c] = at(r, c);
  return v;
}

QVec MatrixQ::apply(const QVec& x) const {
  if (int(x.size()) != cols_) throw error("matrix-vector dimension mismatch");
  QVec y(rows_);
  for (int r = 0; r < rows_; ++r) {
    Rational s(0);
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

MatrixQ MatrixQ::transposed() const {
  MatrixQ t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool MatrixQ::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
  if (a.cols_ != b.rows_) throw error("matrix product dimension mismatch");
  MatrixQ c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum dimension mismatch");
  MatrixQ c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
  return c;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum dimension mismatch");
  MatrixQ c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
  return c;
}

MatrixQ MatrixQ::scaled(const Rational& c) const {
  MatrixQ m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

std::pair<MatrixQ, int> rref(const MatrixQ& input) {
  MatrixQ m = input;
  int rows = m.rows(), cols = m.cols();
  int pivot_row = 0;
  for (int col = 0; col < cols && pivot_row < rows; ++col) {
    int sel = -1;
    for (int r = pivot_row; r < rows; ++r) {
      if (!m.at(r, col).is_zero()) {
        sel = r;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int c = 0; c < cols; ++c) std::swap(m.at(sel, c), m.at(pivot_row, c));
    Rational inv = m.at(pivot_row, col).inverse();
    for (int c = col; c < cols; ++c) m.at(pivot_row, c) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == pivot_row || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (int c = col; c < cols; ++c) m.at(r, c) -= f * m.at(pivot_row, c);
    }
    ++pivot_row;
  }
  return {m, pivot_row};
}

int rank(const MatrixQ& m) { return rref(m).second; }

Subspace kernel(const MatrixQ& m) {
  auto [r, rk] = rref(m);
  int cols = m.cols();
  std::vector<int> pivot_col(rk);
  std::vector<bool> is_pivot(cols, false);
  for (int row = 0, col = 0; row < rk; ++row) {
    while (col < cols && r.at(row, col).is_zero()) ++col;
    pivot_col[row] = col;
    is_pivot[col] = true;
  }
  std::vector<QVec> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    QVec v(cols, Rational(0));
    v[free] = Rational(1);
    for (int row = 0; row < rk; ++row) v[pivot_col[row]] = -r.at(row, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(cols, basis);
}

Subspace Subspace::span(int ambient_dim, const std::vector<QVec>& vectors) {
  Subspace s(ambient_dim);
  if (vectors.empty()) return s;
  auto [r, rk] = rref(MatrixQ::from_rows(vectors, ambient_dim));
  MatrixQ basis(rk, ambient_dim);
  for (int i = 0; i < rk; ++i)
    for (int c = 0; c < ambient_dim; ++c) basis.at(i, c) = r.at(i, c);
  s.basis_ = basis;
  return s;
}

Subspace Subspace::full(int ambient_dim) {
  Subspace s(ambient_dim);
  s.basis_ = MatrixQ::identity(ambient_dim);
  return s;
}

bool Subspace::contains(const QVec& v) const {
  if (int(v.size()) != ambient_) throw error("ambient-dimension mismatch");
  // reduce v against the RREF basis and test for zero remainder
  QVec w = v;
  for (int r = 0; r < basis_.rows(); ++r) {
    int col = 0;
    while (col < ambient_ && basis_.at(r, col).is_zero()) ++col;
    if (col == ambient_) continue;
    if (!w[col].is_zero()) {
      Rational f = w[col];
      for (int c = col; c < ambient_; ++c) w[c] -= f * basis_.at(r, c);
    }
  }
  for (const auto& x : w)
    if (!x.is_zero()) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw error("ambient-dimension mismatch");
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_vector(i))) return false;
  return true;
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw error("ambient-dimension mismatch");
  std::vector<QVec> rows;
  for (int i = 0; i < a.dim(); ++i) rows.push_back(a.basis_vector(i));
  for (int i = 0; i < b.dim(); ++i) rows.push_back(b.basis_vector(i));
  return Subspace::span(a.ambient_, rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_ != b.ambient_) throw error("ambient-dimension mismatch");
  // kernel of the stacked system: columns are a-basis and b-basis vectors;
  // a kernel element (s, t) gives sum(s_i a_i) = sum(t_j b_j) in the intersection
  int da = a.dim(), db = b.dim(), n = a.ambient_;
  if (da == 0 || db == 0) return Subspace(n);
  MatrixQ stacked(n, da + db);
  for (int c = 0; c < da; ++c)
    for (int r = 0; r < n; ++r) stacked.at(r, c) = a.basis_.at(c, r);
  for (int c = 0; c < db; ++c)
    for (int r = 0; r < n; ++r) stacked.at(r, da + c) = -b.basis_.at(c, r);
  Subspace null = kernel(stacked);
  std::vector<QVec> gens;
  for (int i = 0; i < null.dim(); ++i) {
    QVec coeffs = null.basis_vector(i);
    QVec v(n, Rational(0));
    for (int j = 0; j < da; ++j)
      for (int c = 0; c < n; ++c) v[c] += coeffs[j] * a.basis_.at(j, c);
    gens.push_back(std::move(v));
  }
  return Subspace::span(n, gens);
}

bool subspace_contains(const Subspace& s, const QVec& v) { return s.contains(v); }

}  // namespace compatlie
