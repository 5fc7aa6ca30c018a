#ifndef COMPATLIE_COHOMOLOGY_HPP
#define COMPATLIE_COHOMOLOGY_HPP

#include <utility>
#include <vector>

#include "compatlie/algebra.hpp"

namespace compatlie {

/// 2-cochains with adjoint values share the antisymmetric storage of brackets.
using TwoCochain = BracketTensor;

/// dphi = 0 in the circle-product form: sym_circle(g, phi) vanishes.
/// Requires g to satisfy Jacobi.
bool is_lie_2cocycle(const BracketTensor& g, const TwoCochain& phi);

/// Index pairs (k, r) with 1 <= k <= n-1 and 2k+1 < r <= n, plus
/// ((n-1)/2, n) when n is odd.
std::vector<std::pair<int, int>> delta_set(int n);

/// The adapted cocycle with Psi(e_k, e_{k+1}) = e_r on the n-dimensional
/// model filiform algebra:
///   Psi(e_i, e_j) = (-1)^(k-i) C(j-k-1, k-i) e_{i+j+r-2k-1},  1<=i<=k<j<=n.
TwoCochain make_psi(int n, int k, int r);

/// Both components are Lie 2-cocycles of their brackets and the twelve-term
/// mixed condition sym_circle(b1, psi) + sym_circle(b2, phi) vanishes.
bool compat_2cocycle_pair(const CompatAlgebra& a, const TwoCochain& phi, const TwoCochain& psi);

/// Z^2 of a single Lie bracket as a subspace of cochain coordinate space
/// (flattened over i<j pairs and output coordinates).
Subspace lie_2cocycle_space(const BracketTensor& g);
/// Z^2_CL of a compatible pair: joint coordinates (phi, psi).
Subspace compat_2cocycle_space(const CompatAlgebra& a);

/// (b1 + t phi, b2 + t psi); requires (phi, psi) to be a compatible
/// 2-cocycle pair of a.
CompatAlgebra linear_deformation(const CompatAlgebra& a, const TwoCochain& phi,
                                 const TwoCochain& psi, const Scalar& t);

/// Nilindex of (l1 b1 + l2 b2, m1 b1 + m2 b2); requires a nilpotent.
/// The result never exceeds the nilindex of a.
int pencil_nilindex_bound(const CompatAlgebra& a, const Rational& l1, const Rational& l2,
                          const Rational& m1, const Rational& m2);

}  // namespace compatlie

#endif
