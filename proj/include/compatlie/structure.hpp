#ifndef COMPATLIE_STRUCTURE_HPP
#define COMPATLIE_STRUCTURE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "compatlie/algebra.hpp"

namespace compatlie {

/// A descending series of subspaces. terms[0] is the whole algebra; the last
/// term repeats its predecessor once to witness stabilization.
struct SeriesResult {
  std::vector<Subspace> terms;
  bool stabilized = false;
  std::optional<int> nilindex;  // first k with terms[k] = 0, when reached
  std::vector<int> dims() const;
};

/// Span of [s,t]_1 and [s,t]_2 over basis pairs of S and T.
Subspace commutator_subspace(const CompatAlgebra& a, const Subspace& s, const Subspace& t);
/// Same but for a single chosen bracket (1 or 2).
Subspace commutator_subspace_single(const CompatAlgebra& a, int which, const Subspace& s,
                                    const Subspace& t);

SeriesResult lower_central_series(const CompatAlgebra& a);
SeriesResult derived_series(const CompatAlgebra& a);
bool is_nilpotent(const CompatAlgebra& a);
bool is_solvable(const CompatAlgebra& a);
/// min k with C^k = 0; throws when not nilpotent.
int nilindex(const CompatAlgebra& a);

/// Z(g) = Z(g_1) intersect Z(g_2).
Subspace center(const CompatAlgebra& a);

bool is_ideal(const CompatAlgebra& a, const Subspace& s);
Subspace ideal_generated_by(const CompatAlgebra& a, const std::vector<QVec>& vectors);
bool is_subalgebra(const CompatAlgebra& a, const Subspace& s);

/// Restricted descending central series of an ideal (double-bracket products
/// inside I), and its nilpotency.
bool ideal_is_nilpotent(const CompatAlgebra& a, const Subspace& ideal);

/// [[I, J]] ideal test against an explicit witness family.
bool is_special_ideal_against(const CompatAlgebra& a, const Subspace& ideal,
                              const std::vector<Subspace>& witnesses);

/// The default witness family: the algebra, all lower-central and derived
/// terms, the ideal itself, the center, plus `random_count` seeded randomly
/// generated ideals.
std::vector<Subspace> default_witness_family(const CompatAlgebra& a, const Subspace& ideal,
                                             std::uint64_t seed, int random_count = 25);

bool is_special_nilpotent_ideal(const CompatAlgebra& a, const Subspace& ideal,
                                std::uint64_t seed = 0);

/// Certifies N as the special nilradical of a solvable algebra: N must be a
/// special nilpotent ideal and N + span{x} non-nilpotent for every RREF
/// complement basis vector x.
bool verify_nilradical(const CompatAlgebra& a, const Subspace& n, std::uint64_t seed = 0);

/// Quotient algebra a / z for an ideal z, on the RREF-pivot complement basis.
CompatAlgebra quotient_algebra(const CompatAlgebra& a, const Subspace& z);

/// Coordinate vectors (1-based positions) of the RREF complement of s.
std::vector<int> complement_coordinates(const Subspace& s);

}  // namespace compatlie

#endif
