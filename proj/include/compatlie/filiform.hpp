#ifndef COMPATLIE_FILIFORM_HPP
#define COMPATLIE_FILIFORM_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "compatlie/algebra.hpp"
#include "compatlie/families.hpp"
#include "compatlie/structure.hpp"

namespace compatlie {

/// Nilpotent of dimension n+1 with the slowest central-series decay:
/// dim C^i = n - i for 1 <= i <= n.
bool is_filiform(const CompatAlgebra& a);

/// Chain basis (e_0, ..., e_n) with e_{i+1} produced from e_i by the block's
/// bracket, blocks alternating between the brackets.
struct AdaptedBasis {
  std::vector<QVec> vectors;  // e_0 first, then the chain e_1..e_n
  SeriesSpec series;
  bool swapped = false;  // brackets were swapped before the construction
  std::uint64_t seed_used = 0;
};

/// Builds an adapted basis by seeded random choice of (e_0, e_1) in a
/// complement of C^1, with exact verification of the block pattern and a
/// bounded retry budget. Throws with the seed on budget exhaustion.
AdaptedBasis adapted_basis(const CompatAlgebra& a, std::uint64_t seed = 0, int retry_budget = 64);

/// Associated graded algebra over the lower-central filtration, on a
/// homogeneous basis ordered by degree. Also returns the degree of each new
/// basis vector.
struct GradedAlgebra {
  CompatAlgebra algebra;
  std::vector<int> degrees;  // per new basis position
};
GradedAlgebra associated_graded(const CompatAlgebra& a);

/// The homogeneous-basis relations on gr L for bracket1:
/// a chain X_0, .., X_{n_1+1} with [X_0,X_i] = X_{i+1}, [X_1,X_2] = 0,
/// [X_i,X_j] = 0 off the antidiagonal, [X_i,X_{n1+1-i}] = (-1)^i alpha and
/// alpha = 0 for odd n_1.
struct HomogeneousBasisReport {
  bool ok = false;
  int n1 = 0;
  Rational alpha;
  std::string failure;
};
HomogeneousBasisReport homogeneous_basis_relations(const CompatAlgebra& graded,
                                                   std::uint64_t seed = 0);

/// Mechanization of the 7-dimensional naturally-graded classification:
/// symbolic compatibility of the two displayed families and reduction of the
/// generic graded ansatz, including the delta and lambda branch analyses.
struct Graded7Report {
  bool f1_compatible = false;
  bool f2_compatible = false;  // computed truth for the displayed table
  std::string f2_failure;
  bool constraints_displayed_found = false;  // the proof's (1)-(8)
  std::vector<std::string> missing_constraints;
  bool delta1_inconsistent = false;
  bool delta1_chain_matches = false;  // a24 -> 1, a15 -> -2, contradiction at the delta*a15 equation
  ConstraintSet::Status delta0_status = ConstraintSet::Status::open;
  bool delta0_gives_f1 = false;       // only a01..a04 stay free
  bool lambda_nonzero_branch_empty = false;
  bool matches_displayed_classification() const {
    return f1_compatible && f2_compatible && constraints_displayed_found &&
           delta1_inconsistent && delta1_chain_matches && !lambda_nonzero_branch_empty;
  }
};
Graded7Report verify_graded_7dim_classification();

/// The generic graded ansatz of that proof (delta and a_{ij} formal).
CompatAlgebra graded7_ansatz();

}  // namespace compatlie

#endif
