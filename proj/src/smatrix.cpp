#include "compatlie/smatrix.hpp"

namespace compatlie {

SMatrix SMatrix::identity(int n) {
  SMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

SMatrix SMatrix::from_rational(const MatrixQ& q) {
  SMatrix m(q.rows(), q.cols());
  for (int r = 0; r < q.rows(); ++r)
    for (int c = 0; c < q.cols(); ++c) m.at(r, c) = Scalar(q.at(r, c));
  return m;
}

std::vector<Scalar> SMatrix::apply(const std::vector<Scalar>& x) const {
  if (int(x.size()) != cols_) throw error("matrix-vector dimension mismatch");
  std::vector<Scalar> y(rows_, Scalar(0));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (!at(r, c).is_zero() && !x[c].is_zero()) y[r] += at(r, c) * x[c];
  return y;
}

SMatrix SMatrix::scaled(const Scalar& c) const {
  SMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < e_.size(); ++i) m.e_[i] = e_[i] * c;
  return m;
}

SMatrix operator*(const SMatrix& a, const SMatrix& b) {
  if (a.cols_ != b.rows_) throw error("matrix product dimension mismatch");
  SMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j)
        if (!b.at(k, j).is_zero()) c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

SMatrix operator+(const SMatrix& a, const SMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum dimension mismatch");
  SMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] + b.e_[i];
  return c;
}

SMatrix operator-(const SMatrix& a, const SMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw error("matrix sum dimension mismatch");
  SMatrix c(a.rows_, a.cols_);
  for (std::size_t i = 0; i < a.e_.size(); ++i) c.e_[i] = a.e_[i] - b.e_[i];
  return c;
}

Scalar SMatrix::trace() const {
  if (rows_ != cols_) throw error("trace of non-square matrix");
  Scalar t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

bool SMatrix::is_zero() const {
  for (const auto& x : e_)
    if (!x.is_zero()) return false;
  return true;
}

bool SMatrix::is_parameter_free() const {
  for (const auto& x : e_)
    if (!x.is_rational()) return false;
  return true;
}

MatrixQ SMatrix::to_rational() const {
  MatrixQ m(rows_, cols_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) m.at(r, c) = at(r, c).rat();
  return m;
}

std::vector<Scalar> char_poly(const SMatrix& a) {
  if (a.rows() != a.cols()) throw error("characteristic polynomial of non-square matrix");
  int n = a.rows();
  // det(xI - A) = x^n - c1 x^(n-1) - c2 x^(n-2) - ... - cn
  // M1 = A, ck = tr(Mk)/k, M(k+1) = A(Mk - ck I)
  std::vector<Scalar> cs(n + 1, Scalar(0));
  cs[n] = Scalar(1);
  SMatrix m = a;
  std::vector<Scalar> c(n + 1, Scalar(0));
  for (int k = 1; k <= n; ++k) {
    c[k] = m.trace().divided_by(Rational(k));
    if (k < n) {
      SMatrix adj = m;
      for (int i = 0; i < n; ++i) adj.at(i, i) -= c[k];
      m = a * adj;
    }
  }
  for (int k = 1; k <= n; ++k) cs[n - k] = -c[k];
  return cs;
}

}  // namespace compatlie
