#ifndef COMPATLIE_SCALAR_HPP
#define COMPATLIE_SCALAR_HPP

#include <map>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "compatlie/poly.hpp"
#include "compatlie/rational.hpp"

namespace compatlie {

/// Exact field/ring element: a rational or a polynomial in declared
/// parameters. A polynomial that collapses to a constant normalizes to the
/// rational alternative, so equal values compare equal structurally.
class Scalar {
 public:
  Scalar() : v_(Rational(0)) {}
  Scalar(long n) : v_(Rational(n)) {}  // NOLINT: implicit integer literals
  Scalar(const Rational& r) : v_(r) {}  // NOLINT
  Scalar(const Poly& p) { assign(p); }  // NOLINT
  static Scalar parameter(const std::string& name) { return Scalar(Poly::parameter(name)); }

  bool is_rational() const { return std::holds_alternative<Rational>(v_); }
  bool is_zero() const;
  bool is_one() const { return is_rational() && rat().is_one(); }

  /// Throws unless the value is rational.
  const Rational& rat() const;
  /// View as a polynomial regardless of alternative.
  Poly poly() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  Scalar divided_by(const Rational& c) const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  std::set<std::string> parameters() const;
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;
  Scalar substitute(const std::map<std::string, Poly>& assignment) const;

  std::string str() const;

 private:
  void assign(const Poly& p);
  std::variant<Rational, Poly> v_;
};

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
bool scalar_is_zero(const Scalar& a);
Rational scalar_substitute(const Scalar& a, const std::map<std::string, Rational>& assignment);

/// Thrown by the coefficient-expression parser with a 1-based column.
struct parse_error : error {
  parse_error(const std::string& what, std::size_t column)
      : error(what + " (column " + std::to_string(column) + ")"), column(column) {}
  std::size_t column;
};

/// Coefficient-expression grammar: integer and p/q literals, parameter
/// identifiers, + - * and ^ with nonnegative integer exponents, parentheses.
/// Whitespace insignificant.
Scalar parse_scalar(const std::string& text);

/// Canonical rendering; parse_scalar(scalar_str(s)) == s.
std::string scalar_str(const Scalar& s);

}  // namespace compatlie

#endif
