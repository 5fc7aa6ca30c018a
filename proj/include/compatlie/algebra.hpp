#ifndef COMPATLIE_ALGEBRA_HPP
#define COMPATLIE_ALGEBRA_HPP

#include <string>
#include <vector>

#include "compatlie/bracket.hpp"
#include "compatlie/constraints.hpp"

namespace compatlie {

/// A vector space with two bracket tensors on a common basis.
struct CompatAlgebra {
  int dim = 0;
  std::vector<std::string> basis_labels;  // one per basis vector, 1-based positions
  BracketTensor bracket1;
  BracketTensor bracket2;
  std::vector<std::string> parameters;  // declared, ordered

  CompatAlgebra() = default;
  CompatAlgebra(int dim, BracketTensor b1, BracketTensor b2,
                std::vector<std::string> params = {});

  const std::string& label(int i) const { return basis_labels[i - 1]; }
  bool is_parameter_free() const;
  CompatAlgebra substituted(const std::map<std::string, Poly>& assignment) const;
  CompatAlgebra with_swapped_brackets() const;

  /// Checks every Scalar only uses declared parameters; throws otherwise.
  void validate() const;

  friend bool operator==(const CompatAlgebra& a, const CompatAlgebra& b);
};

std::vector<std::string> default_labels(int dim, int start_index = 1);

struct Witness {
  int i, j, k;      // offending triple
  int coord;        // offending coordinate
  Scalar residual;  // residual coefficient there
  std::string tag;  // optional sub-identity tag
};

/// Outcome of an identity check; holds iff no witnesses. At most
/// `max_witnesses` are retained (the total count is still exact).
struct IdentityReport {
  bool holds = true;
  std::vector<Witness> witnesses;
  std::size_t violation_count = 0;
  static constexpr std::size_t kDefaultMaxWitnesses = 32;
};

IdentityReport report_from_residual(const TriResidual& r,
                                    std::size_t max_witnesses = IdentityReport::kDefaultMaxWitnesses);

SVec bracket_apply(const BracketTensor& t, const SVec& x, const SVec& y);

IdentityReport check_jacobi(const BracketTensor& t,
                            std::size_t max_witnesses = IdentityReport::kDefaultMaxWitnesses);

/// Mixed Jacobi residual L(x,y,z) of Proposition 2.1:
/// the bracket2-of-bracket1 cyclic sum plus the bracket1-of-bracket2 one.
TriResidual mixed_jacobiator(const CompatAlgebra& a);

struct precondition_error : error {
  explicit precondition_error(const std::string& what) : error(what) {}
};

/// Requires both brackets to satisfy Jacobi (throws precondition_error naming
/// the offender otherwise), then checks the mixed identity.
IdentityReport check_compatibility(const CompatAlgebra& a,
                                   std::size_t max_witnesses = IdentityReport::kDefaultMaxWitnesses);

/// True iff both Jacobi identities and the mixed identity hold.
bool is_compatible(const CompatAlgebra& a);

BracketTensor pencil(const CompatAlgebra& a, const Scalar& l1, const Scalar& l2);

/// Matrix of y -> bracket(x, y) in the chosen bracket (1 or 2); x rational.
MatrixQ adjoint_operator(const CompatAlgebra& a, int which, const QVec& x);

/// Every coefficient of both Jacobi residuals and the mixed residual, as
/// polynomial equations, deduplicated up to scale. Mixed-identity equations
/// are stored in the orientation the paper's proof tables use (the negated
/// Proposition-2.1 residual), so reduced constants match the displayed
/// obstruction terms.
ConstraintSet extract_constraints(const CompatAlgebra& a);

}  // namespace compatlie

#endif
