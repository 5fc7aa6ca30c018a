#include "compatlie/constraints.hpp"

#include <algorithm>

namespace compatlie {

namespace {

std::string kind_name(Provenance::Kind k) {
  switch (k) {
    case Provenance::Kind::jacobi1: return "J1";
    case Provenance::Kind::jacobi2: return "J2";
    case Provenance::Kind::mixed: return "L";
  }
  return "?";
}

std::string index_label(int i, const std::vector<std::string>& labels) {
  if (i >= 1 && i <= int(labels.size())) return labels[i - 1];
  return "e" + std::to_string(i);
}

/// Scale to leading coefficient 1; canonical representative of the ray.
Poly monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.divided_by(p.leading_coefficient());
}

}  // namespace

std::string Provenance::str(const std::vector<std::string>& labels) const {
  return kind_name(kind) + "(" + index_label(i, labels) + "," + index_label(j, labels) + "," +
         index_label(k, labels) + ")." + index_label(coord, labels);
}

bool operator<(const Provenance& a, const Provenance& b) {
  return std::tie(a.kind, a.i, a.j, a.k, a.coord) < std::tie(b.kind, b.i, b.j, b.k, b.coord);
}

bool operator==(const Provenance& a, const Provenance& b) {
  return std::tie(a.kind, a.i, a.j, a.k, a.coord) == std::tie(b.kind, b.i, b.j, b.k, b.coord);
}

void ConstraintSet::add(const Poly& eq, const Provenance& prov) {
  if (eq.is_zero()) return;
  Poly key = monic(eq);
  for (const auto& c : eqs_)
    if (monic(c.eq) == key) return;
  eqs_.push_back(Constraint{eq, prov});
}

bool ConstraintSet::contains_up_to_scale(const Poly& eq) const {
  if (eq.is_zero()) return false;
  Poly key = monic(eq);
  for (const auto& c : eqs_)
    if (monic(c.eq) == key) return true;
  return false;
}

std::optional<Constraint> ConstraintSet::find_by_provenance(const Provenance& p) const {
  for (const auto& c : eqs_)
    if (c.prov == p) return c;
  return std::nullopt;
}

const Constraint& ConstraintSet::witness() const {
  if (status_ != Status::inconsistent || contradictions_.empty())
    throw error("witness requested from a consistent constraint set");
  return contradictions_.front();
}

ConstraintSet reduce_constraints(const ConstraintSet& input,
                                 const std::set<std::string>& assume_nonzero) {
  ConstraintSet out;
  std::vector<Constraint> eqs = input.equations();
  std::sort(eqs.begin(), eqs.end(),
            [](const Constraint& a, const Constraint& b) { return a.prov < b.prov; });

  auto substitute_all = [&eqs](const std::string& param, const Poly& value) {
    std::map<std::string, Poly> a{{param, value}};
    for (auto& c : eqs) c.eq = c.eq.substitute(a);
  };

  bool changed = true;
  while (changed) {
    changed = false;
    // cancel assumed-nonzero common factors first, so hidden linear equations surface
    for (auto& c : eqs) {
      bool again = true;
      while (again && !c.eq.is_zero()) {
        again = false;
        for (const auto& p : assume_nonzero) {
          Poly q;
          if (c.eq.divide_by_parameter(p, &q)) {
            c.eq = q;
            again = true;
            break;
          }
        }
      }
    }
    for (auto& c : eqs) {
      if (c.eq.is_zero() || c.eq.is_constant()) continue;
      // choose the grlex-largest parameter occurring linearly with a rational coefficient
      auto params = c.eq.parameters();
      for (auto it = params.rbegin(); it != params.rend(); ++it) {
        if (assume_nonzero.count(*it)) continue;  // keep branch parameters
        Rational coeff;
        Poly rest;
        if (!c.eq.split_linear(*it, &coeff, &rest)) continue;
        Poly value = (-rest).divided_by(coeff);
        out.assignments_.push_back(AssignmentStep{*it, value, c.prov});
        substitute_all(*it, value);
        changed = true;
        break;
      }
      if (changed) break;
    }
  }

  for (const auto& c : eqs) {
    if (c.eq.is_zero()) continue;
    bool constant = c.eq.is_constant();
    if (!constant && !assume_nonzero.empty()) {
      // an equation reducing to (nonzero assumed) parameter = 0 is a contradiction
      auto params = c.eq.parameters();
      if (params.size() == 1 && assume_nonzero.count(*params.begin())) {
        Rational coeff;
        Poly rest;
        if (c.eq.split_linear(*params.begin(), &coeff, &rest) && rest.is_zero()) constant = true;
      }
    }
    if (constant)
      out.contradictions_.push_back(c);
    else
      out.eqs_.push_back(c);
  }

  std::sort(out.contradictions_.begin(), out.contradictions_.end(),
            [](const Constraint& a, const Constraint& b) { return a.prov < b.prov; });

  if (!out.contradictions_.empty())
    out.status_ = ConstraintSet::Status::inconsistent;
  else if (out.eqs_.empty())
    out.status_ = ConstraintSet::Status::solved;
  else
    out.status_ = ConstraintSet::Status::open;
  return out;
}

}  // namespace compatlie
