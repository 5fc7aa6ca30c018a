#include "compatlie/algebra.hpp"

namespace compatlie {

CompatAlgebra::CompatAlgebra(int dim_, BracketTensor b1, BracketTensor b2,
                             std::vector<std::string> params)
    : dim(dim_),
      basis_labels(default_labels(dim_)),
      bracket1(std::move(b1)),
      bracket2(std::move(b2)),
      parameters(std::move(params)) {
  if (bracket1.dim() != dim || bracket2.dim() != dim)
    throw error("bracket dimension does not match algebra dimension");
}

std::vector<std::string> default_labels(int dim, int start_index) {
  std::vector<std::string> labels;
  labels.reserve(dim);
  for (int i = 0; i < dim; ++i) labels.push_back("e" + std::to_string(start_index + i));
  return labels;
}

bool CompatAlgebra::is_parameter_free() const {
  return bracket1.is_parameter_free() && bracket2.is_parameter_free();
}

CompatAlgebra CompatAlgebra::substituted(const std::map<std::string, Poly>& assignment) const {
  CompatAlgebra r = *this;
  r.bracket1 = bracket1.substitute(assignment);
  r.bracket2 = bracket2.substitute(assignment);
  std::vector<std::string> remaining;
  for (const auto& p : parameters) {
    auto it = assignment.find(p);
    if (it == assignment.end()) {
      remaining.push_back(p);
    } else {
      for (const auto& n : it->second.parameters())
        if (std::find(remaining.begin(), remaining.end(), n) == remaining.end())
          remaining.push_back(n);
    }
  }
  r.parameters = remaining;
  return r;
}

CompatAlgebra CompatAlgebra::with_swapped_brackets() const {
  CompatAlgebra r = *this;
  std::swap(r.bracket1, r.bracket2);
  return r;
}

void CompatAlgebra::validate() const {
  std::set<std::string> declared(parameters.begin(), parameters.end());
  for (const auto* b : {&bracket1, &bracket2})
    for (const auto& name : b->parameters())
      if (!declared.count(name)) throw error("undeclared parameter: " + name);
  if (int(basis_labels.size()) != dim) throw error("basis label count does not match dimension");
}

bool operator==(const CompatAlgebra& a, const CompatAlgebra& b) {
  return a.dim == b.dim && a.basis_labels == b.basis_labels && a.bracket1 == b.bracket1 &&
         a.bracket2 == b.bracket2 && a.parameters == b.parameters;
}

IdentityReport report_from_residual(const TriResidual& r, std::size_t max_witnesses) {
  IdentityReport rep;
  for (const auto& [ijk, terms] : r.entries()) {
    auto [i, j, k] = ijk;
    for (const auto& [coord, c] : terms) {
      ++rep.violation_count;
      if (rep.witnesses.size() < max_witnesses)
        rep.witnesses.push_back(Witness{i, j, k, coord, c, ""});
    }
  }
  rep.holds = rep.violation_count == 0;
  return rep;
}

SVec bracket_apply(const BracketTensor& t, const SVec& x, const SVec& y) {
  return t.apply(x, y);
}

IdentityReport check_jacobi(const BracketTensor& t, std::size_t max_witnesses) {
  return report_from_residual(jacobiator(t), max_witnesses);
}

TriResidual mixed_jacobiator(const CompatAlgebra& a) {
  return sym_circle(a.bracket1, a.bracket2);
}

IdentityReport check_compatibility(const CompatAlgebra& a, std::size_t max_witnesses) {
  if (!check_jacobi(a.bracket1).holds)
    throw precondition_error("bracket1 does not satisfy the Jacobi identity");
  if (!check_jacobi(a.bracket2).holds)
    throw precondition_error("bracket2 does not satisfy the Jacobi identity");
  return report_from_residual(mixed_jacobiator(a), max_witnesses);
}

bool is_compatible(const CompatAlgebra& a) {
  return check_jacobi(a.bracket1).holds && check_jacobi(a.bracket2).holds &&
         mixed_jacobiator(a).is_zero();
}

BracketTensor pencil(const CompatAlgebra& a, const Scalar& l1, const Scalar& l2) {
  return pencil_combine(l1, a.bracket1, l2, a.bracket2);
}

MatrixQ adjoint_operator(const CompatAlgebra& a, int which, const QVec& x) {
  if (which != 1 && which != 2) throw error("bracket selector must be 1 or 2");
  const BracketTensor& b = which == 1 ? a.bracket1 : a.bracket2;
  return b.adjoint_matrix(x);
}

ConstraintSet extract_constraints(const CompatAlgebra& a) {
  ConstraintSet cs;
  auto collect = [&cs](const TriResidual& r, Provenance::Kind kind, bool negate) {
    for (const auto& [ijk, terms] : r.entries()) {
      auto [i, j, k] = ijk;
      for (const auto& [coord, c] : terms) {
        Poly p = c.poly();
        cs.add(negate ? -p : p, Provenance{kind, i, j, k, coord});
      }
    }
  };
  collect(jacobiator(a.bracket1), Provenance::Kind::jacobi1, false);
  collect(jacobiator(a.bracket2), Provenance::Kind::jacobi2, false);
  collect(mixed_jacobiator(a), Provenance::Kind::mixed, true);
  return cs;
}

}  // namespace compatlie
