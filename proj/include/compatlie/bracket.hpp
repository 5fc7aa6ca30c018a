#ifndef COMPATLIE_BRACKET_HPP
#define COMPATLIE_BRACKET_HPP

#include <map>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "compatlie/linalg.hpp"
#include "compatlie/scalar.hpp"

namespace compatlie {

using SVec = std::vector<Scalar>;
/// Sparse coordinate list: (basis index, coefficient), indices 1-based,
/// strictly increasing, no zero coefficients.
using Terms = std::vector<std::pair<int, Scalar>>;

Terms terms_add(const Terms& a, const Terms& b);
Terms terms_negate(const Terms& a);
Terms terms_scale(const Terms& a, const Scalar& c);
QVec terms_to_qvec(const Terms& t, int dim);  // throws on parametric coefficients
Terms qvec_to_terms(const QVec& v);
SVec terms_to_svec(const Terms& t, int dim);
Terms svec_to_terms(const SVec& v);

/// Antisymmetric bilinear map on a dim-dimensional space, stored as
/// structure constants for i < j only; (j,i) values are the negation.
/// Doubles as a 2-cochain with adjoint values.
class BracketTensor {
 public:
  explicit BracketTensor(int dim = 0) : dim_(dim) {}

  int dim() const { return dim_; }
  bool is_zero() const { return c_.empty(); }

  /// Accumulates c * e_k into the product of (e_i, e_j); i != j, any order.
  void add_term(int i, int j, int k, const Scalar& c);
  void set_product(int i, int j, Terms terms);

  /// Signed product of basis vectors (e_i, e_j); empty when i == j.
  Terms product(int i, int j) const;
  /// Bilinear evaluation on coordinate vectors.
  SVec apply(const SVec& x, const SVec& y) const;

  const std::map<std::pair<int, int>, Terms>& stored() const { return c_; }

  BracketTensor operator-() const;
  friend BracketTensor operator+(const BracketTensor& a, const BracketTensor& b);
  friend BracketTensor operator-(const BracketTensor& a, const BracketTensor& b);
  BracketTensor scaled(const Scalar& c) const;
  friend bool operator==(const BracketTensor& a, const BracketTensor& b) {
    return a.dim_ == b.dim_ && a.c_ == b.c_;
  }
  friend bool operator!=(const BracketTensor& a, const BracketTensor& b) { return !(a == b); }

  std::set<std::string> parameters() const;
  bool is_parameter_free() const { return parameters().empty(); }
  BracketTensor substitute(const std::map<std::string, Poly>& assignment) const;

  /// Matrix of y -> (e_x-combination, y) in rational coordinates.
  MatrixQ adjoint_matrix(const QVec& x) const;
  MatrixQ adjoint_matrix_of_basis(int i) const;

  /// Reindex into a larger space (identity embedding).
  BracketTensor embedded(int new_dim) const;

 private:
  int dim_;
  std::map<std::pair<int, int>, Terms> c_;
};

/// Trilinear alternating residual, stored on i < j < k triples.
class TriResidual {
 public:
  explicit TriResidual(int dim = 0) : dim_(dim) {}
  int dim() const { return dim_; }
  bool is_zero() const { return r_.empty(); }
  void add(int i, int j, int k, int coord, const Scalar& c);
  Terms at(int i, int j, int k) const;
  const std::map<std::tuple<int, int, int>, Terms>& entries() const { return r_; }
  TriResidual& operator+=(const TriResidual& o);

 private:
  int dim_;
  std::map<std::tuple<int, int, int>, Terms> r_;
};

/// circle(f, g)(x,y,z) = f(g(x,y),z) + f(g(y,z),x) + f(g(z,x),y).
TriResidual circle(const BracketTensor& f, const BracketTensor& g);
/// circle(f,g) + circle(g,f); for two Lie brackets this is the mixed Jacobi residual.
TriResidual sym_circle(const BracketTensor& f, const BracketTensor& g);
/// Jacobi residual J = circle(t, t).
TriResidual jacobiator(const BracketTensor& t);

/// lambda1 * b1 + lambda2 * b2 with Scalar (possibly formal) weights.
BracketTensor pencil_combine(const Scalar& l1, const BracketTensor& b1, const Scalar& l2,
                             const BracketTensor& b2);

}  // namespace compatlie

#endif
