#ifndef COMPATLIE_POLY_HPP
#define COMPATLIE_POLY_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "compatlie/rational.hpp"

namespace compatlie {

/// Monomial = parameter name -> positive exponent. No zero exponents stored;
/// the empty map is the unit monomial.
using Monomial = std::map<std::string, int>;

int monomial_degree(const Monomial& m);

/// Graded lexicographic order: total degree first, then, walking parameter
/// names in ascending order, the higher exponent on the earlier name wins.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Q, canonical: no zero coefficients,
/// terms keyed by monomial under a fixed total order.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, MonomialOrder>;

  Poly() = default;
  explicit Poly(const Rational& c) {
    if (!c.is_zero()) terms_[Monomial{}] = c;
  }
  static Poly parameter(const std::string& name, int exponent = 1);
  static Poly term(const Monomial& m, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  Rational constant_term() const;
  int degree() const { return terms_.empty() ? -1 : monomial_degree(terms_.rbegin()->first); }
  std::size_t term_count() const { return terms_.size(); }

  /// Leading term in the graded-lex order (largest monomial).
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;

  void add_term(const Monomial& m, const Rational& c);

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }
  Poly scaled(const Rational& c) const;
  Poly divided_by(const Rational& c) const { return scaled(c.inverse()); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  std::set<std::string> parameters() const;
  bool depends_on(const std::string& name) const;

  /// Exact evaluation; throws naming the first unassigned parameter.
  Rational evaluate(const std::map<std::string, Rational>& assignment) const;
  /// Parallel substitution of polynomials for parameters (missing names stay).
  Poly substitute(const std::map<std::string, Poly>& assignment) const;

  /// Writes p as c*x + rest with rest free of x, if p is linear in x.
  /// Returns false when x occurs nonlinearly or with a non-constant coefficient.
  bool split_linear(const std::string& x, Rational* coeff, Poly* rest) const;

  /// Divides by the parameter x if every term contains it; false otherwise.
  bool divide_by_parameter(const std::string& x, Poly* quotient) const;

  const TermMap& terms() const { return terms_; }
  std::string str() const;

 private:
  TermMap terms_;
};

}  // namespace compatlie

#endif
