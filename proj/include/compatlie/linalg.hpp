#ifndef COMPATLIE_LINALG_HPP
#define COMPATLIE_LINALG_HPP

#include <utility>
#include <vector>

#include "compatlie/rational.hpp"

namespace compatlie {

using QVec = std::vector<Rational>;

/// Dense matrix over Q, row-major.
class MatrixQ {
 public:
  MatrixQ() : rows_(0), cols_(0) {}
  MatrixQ(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
  static MatrixQ identity(int n);
  static MatrixQ from_rows(const std::vector<QVec>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rational& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

  QVec row(int r) const;
  QVec apply(const QVec& x) const;  // matrix * column vector
  MatrixQ transposed() const;
  bool is_zero() const;
  QVec flattened() const { return e_; }

  friend MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
  friend MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
  MatrixQ scaled(const Rational& c) const;
  friend bool operator==(const MatrixQ& a, const MatrixQ& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  int rows_, cols_;
  std::vector<Rational> e_;
};

/// Reduced row echelon form with exact Gauss-Jordan elimination.
/// Pivot rule: columns left to right, first nonzero row top to bottom.
std::pair<MatrixQ, int> rref(const MatrixQ& m);
int rank(const MatrixQ& m);

/// Canonical subspace of Q^ambient: basis rows in RREF, zero rows dropped.
/// Two subspaces are equal iff their canonical bases are identical.
class Subspace {
 public:
  explicit Subspace(int ambient_dim = 0) : ambient_(ambient_dim), basis_(0, ambient_dim) {}
  static Subspace span(int ambient_dim, const std::vector<QVec>& vectors);
  static Subspace full(int ambient_dim);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  QVec basis_vector(int i) const { return basis_.row(i); }
  const MatrixQ& basis() const { return basis_; }

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  friend Subspace subspace_sum(const Subspace& a, const Subspace& b);
  friend Subspace subspace_intersect(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  int ambient_;
  MatrixQ basis_;
};

/// Canonical basis of the right null space {x : m x = 0}.
Subspace kernel(const MatrixQ& m);

bool subspace_contains(const Subspace& s, const QVec& v);

}  // namespace compatlie

#endif
