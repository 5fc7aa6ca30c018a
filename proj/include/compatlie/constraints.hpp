#ifndef COMPATLIE_CONSTRAINTS_HPP
#define COMPATLIE_CONSTRAINTS_HPP

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compatlie/poly.hpp"

namespace compatlie {

/// Where a polynomial equation came from: which identity, which basis
/// triple, which coordinate of the residual.
struct Provenance {
  enum class Kind { jacobi1, jacobi2, mixed };
  Kind kind = Kind::mixed;
  int i = 0, j = 0, k = 0;  // basis triple, 1-based
  int coord = 0;            // residual coordinate, 1-based
  std::string str(const std::vector<std::string>& labels = {}) const;
  friend bool operator<(const Provenance& a, const Provenance& b);
  friend bool operator==(const Provenance& a, const Provenance& b);
};

struct Constraint {
  Poly eq;  // the equation eq = 0
  Provenance prov;
};

struct AssignmentStep {
  std::string param;
  Poly value;
  Provenance from;
};

/// A finite set of polynomial equations in the declared parameters,
/// with a reduction status.
class ConstraintSet {
 public:
  enum class Status { open, solved, inconsistent };

  ConstraintSet() = default;
  explicit ConstraintSet(std::vector<Constraint> eqs) : eqs_(std::move(eqs)) {}

  /// Appends, deduplicating up to a nonzero rational factor. Zero equations
  /// are dropped.
  void add(const Poly& eq, const Provenance& prov);

  const std::vector<Constraint>& equations() const { return eqs_; }
  bool empty() const { return eqs_.empty(); }
  std::size_t size() const { return eqs_.size(); }

  /// Up-to-scale membership of an equation.
  bool contains_up_to_scale(const Poly& eq) const;
  std::optional<Constraint> find_by_provenance(const Provenance& p) const;

  Status status() const { return status_; }
  const std::vector<AssignmentStep>& assignments() const { return assignments_; }
  /// All equations that reduced to a nonzero constant, provenance order.
  const std::vector<Constraint>& contradictions() const { return contradictions_; }
  /// First contradiction in provenance order, when inconsistent.
  const Constraint& witness() const;

 private:
  friend ConstraintSet reduce_constraints(const ConstraintSet&, const std::set<std::string>&);
  std::vector<Constraint> eqs_;
  Status status_ = Status::open;
  std::vector<AssignmentStep> assignments_;
  std::vector<Constraint> contradictions_;
};

/// Repeatedly solves equations that are linear in a single parameter with a
/// rational coefficient and substitutes the solution everywhere. Parameters
/// in `assume_nonzero` may additionally be cancelled as common factors, and
/// an equation forcing one of them to vanish counts as a contradiction.
/// Terminates with status solved (no equations left), inconsistent (an
/// equation reduced to a nonzero constant), or open.
ConstraintSet reduce_constraints(const ConstraintSet& c,
                                 const std::set<std::string>& assume_nonzero = {});

}  // namespace compatlie

#endif
