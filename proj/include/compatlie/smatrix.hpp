#ifndef COMPATLIE_SMATRIX_HPP
#define COMPATLIE_SMATRIX_HPP

#include <vector>

#include "compatlie/linalg.hpp"
#include "compatlie/scalar.hpp"

namespace compatlie {

/// Dense matrix over Scalar (rational or polynomial entries), row-major.
class SMatrix {
 public:
  SMatrix() : rows_(0), cols_(0) {}
  SMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(std::size_t(rows) * cols) {}
  static SMatrix identity(int n);
  static SMatrix from_rational(const MatrixQ& m);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& at(int r, int c) { return e_[std::size_t(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return e_[std::size_t(r) * cols_ + c]; }

  std::vector<Scalar> apply(const std::vector<Scalar>& x) const;
  SMatrix scaled(const Scalar& c) const;
  friend SMatrix operator*(const SMatrix& a, const SMatrix& b);
  friend SMatrix operator+(const SMatrix& a, const SMatrix& b);
  friend SMatrix operator-(const SMatrix& a, const SMatrix& b);
  Scalar trace() const;
  bool is_zero() const;
  bool is_parameter_free() const;
  MatrixQ to_rational() const;  // throws on parametric entries

 private:
  int rows_, cols_;
  std::vector<Scalar> e_;
};

/// Characteristic polynomial coefficients by the Faddeev-LeVerrier trace
/// recursion: returns (c_0 .. c_n) with det(xI - A) = sum c_k x^k, c_n = 1.
std::vector<Scalar> char_poly(const SMatrix& a);

}  // namespace compatlie

#endif
