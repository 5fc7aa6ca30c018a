#ifndef COMPATLIE_EXTENSIONS_HPP
#define COMPATLIE_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "compatlie/algebra.hpp"
#include "compatlie/derivations.hpp"
#include "compatlie/smatrix.hpp"

namespace compatlie {

/// One adjoined generator acting on the base through the two brackets:
/// act1/act2 are the matrices of ad_z = bracket(z, .) restricted to the base.
struct ExtensionGenerator {
  std::string label;
  SMatrix act1;
  SMatrix act2;
};

/// Semidirect-product data: base plus generators, with optional bracket
/// tables among the generators (values in the extended space; default zero).
struct ExtensionSpec {
  CompatAlgebra base;
  std::vector<ExtensionGenerator> generators;
  // products among generators, keyed by generator positions (gi < gj),
  // values as Terms in the extended (n + r)-dimensional index space
  std::map<std::pair<int, int>, Terms> gen_bracket1;
  std::map<std::pair<int, int>, Terms> gen_bracket2;
};

/// The extension conditions, per generator z:
///   (1) act1 is a derivation of bracket1,
///   (2) act2 is a derivation of bracket2,
///   (3) act1{x,y} - {act1 x,y} - {x,act1 y}
///       + act2[x,y] - [act2 x,y] - [x,act2 y] = 0 on base pairs.
IdentityReport check_extension_conditions(const ExtensionSpec& spec);

/// Assembles the (n + r)-dimensional algebra; requires the extension
/// conditions and full compatibility of the result (throws with the
/// offending data otherwise). The base embeds as the first n coordinates.
CompatAlgebra build_semidirect(const ExtensionSpec& spec);

/// Torus-type extension: generators x_i act by d_i through bracket1 only,
/// generators y_j act by d'_j through bracket2 only, all products among the
/// new generators zero. The d's must lie in the diagonal torus of the
/// compatible derivation space and each list must be linearly independent.
/// The result is verified compatible, solvable, with special nilradical the
/// base.
CompatAlgebra torus_extension(const CompatAlgebra& base, const std::vector<MatrixQ>& d,
                              const std::vector<MatrixQ>& d_prime, std::uint64_t seed = 0);

enum class GenericBase { LR, LW };

/// The paper-shaped generic extension: rank 1 adjoins one generator acting
/// by the derivation-shaped ansatz of the corresponding proof; rank 2 uses
/// the normalized non-nilpotent two-generator ansatz with fully generic
/// second-bracket actions. Returns the parametric algebra and the extracted
/// constraint set.
std::pair<CompatAlgebra, ConstraintSet> generic_extension(GenericBase base, int n, int r);

/// Recognizes lr_pair(n) / lw_pair(n) bases.
std::optional<GenericBase> detect_generic_base(const CompatAlgebra& base);

/// Certificate for a nonexistence probe: the reduction is inconsistent and
/// the paper's displayed obstruction appears among the contradictions.
struct NonexistenceCertificate {
  ConstraintSet reduced;
  std::vector<Constraint> contradictions;  // provenance order
};

NonexistenceCertificate nonexistence_probe(GenericBase base, int n);

}  // namespace compatlie

#endif
