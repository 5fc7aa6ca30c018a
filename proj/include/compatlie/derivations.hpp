#ifndef COMPATLIE_DERIVATIONS_HPP
#define COMPATLIE_DERIVATIONS_HPP

#include <vector>

#include "compatlie/algebra.hpp"
#include "compatlie/smatrix.hpp"

namespace compatlie {

/// Solution space of the Leibniz system, as a canonical subspace of matrix
/// space (row-major flattening) plus the unflattened basis matrices.
struct DerivationSpace {
  int dim = 0;               // ambient algebra dimension
  Subspace space;            // subspace of Q^(dim*dim)
  std::vector<MatrixQ> basis;

  int size() const { return space.dim(); }
  bool contains(const MatrixQ& m) const;
};

/// Derivations of a single bracket: d[x,y] = [dx,y] + [x,dy].
DerivationSpace derivation_space(const BracketTensor& t);

/// Derivations of the dialgebra: derivations of both brackets.
DerivationSpace compat_derivation_space(const CompatAlgebra& a);

/// Intersection with the diagonal-matrix subspace; the maximal torus of
/// diagonal derivations in the given basis.
DerivationSpace diagonal_derivations(const DerivationSpace& space);

bool matrix_is_nilpotent(const MatrixQ& m);

/// True iff every element of the space is nilpotent, certified by the
/// generic element: all sub-leading coefficients of its characteristic
/// polynomial vanish identically.
bool space_is_nil(const DerivationSpace& space);

/// Semisimplicity over Q via a squarefree minimal-polynomial test.
bool matrix_is_semisimple(const MatrixQ& m);

/// Span of the adjoint operators ad_x of the bracket.
DerivationSpace inner_derivations(const BracketTensor& t);
int outer_dimension(const BracketTensor& t);

/// Re-verifies the Leibniz identity for every basis matrix; used after
/// solving and in tests.
bool leibniz_holds(const BracketTensor& t, const MatrixQ& d);

}  // namespace compatlie

#endif
