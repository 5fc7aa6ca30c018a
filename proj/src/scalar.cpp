#include "compatlie/scalar.hpp"

#include <cctype>
#include <sstream>

namespace compatlie {

// ---------------------------------------------------------------- Rational

Rational Rational::parse(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(mpz_class(text), mpz_class(1));
    mpz_class num(text.substr(0, slash));
    mpz_class den(text.substr(slash + 1));
    return Rational(num, den);
  } catch (const std::invalid_argument&) {
    throw error("malformed rational literal: " + text);
  }
}

// ------------------------------------------------------------------- Poly

int monomial_degree(const Monomial& m) {
  int d = 0;
  for (const auto& [name, e] : m) d += e;
  return d;
}

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
  int da = monomial_degree(a), db = monomial_degree(b);
  if (da != db) return da < db;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (ia->first != ib->first) {
      // the earlier name with a positive exponent makes the monomial larger
      return ia->first > ib->first ? true : false;
    }
    if (ia->second != ib->second) return ia->second < ib->second;
    ++ia;
    ++ib;
  }
  return false;  // equal degree, identical prefixes, same length => equal
}

Poly Poly::parameter(const std::string& name, int exponent) {
  Poly p;
  if (exponent < 0) throw error("negative exponent");
  if (exponent == 0) return Poly(Rational(1));
  p.terms_[Monomial{{name, exponent}}] = Rational(1);
  return p;
}

Poly Poly::term(const Monomial& m, const Rational& c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

Rational Poly::constant_term() const {
  auto it = terms_.find(Monomial{});
  return it == terms_.end() ? Rational(0) : it->second;
}

const Monomial& Poly::leading_monomial() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  return terms_.rbegin()->first;
}

const Rational& Poly::leading_coefficient() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  return terms_.rbegin()->second;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly Poly::operator-() const {
  Poly r;
  for (const auto& [m, c] : terms_) r.terms_[m] = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Monomial m = ma;
      for (const auto& [name, e] : mb) m[name] += e;
      r.add_term(m, ca * cb);
    }
  }
  return r;
}

Poly Poly::scaled(const Rational& c) const {
  Poly r;
  if (c.is_zero()) return r;
  for (const auto& [m, co] : terms_) r.terms_[m] = co * c;
  return r;
}

std::set<std::string> Poly::parameters() const {
  std::set<std::string> names;
  for (const auto& [m, c] : terms_)
    for (const auto& [name, e] : m) names.insert(name);
  return names;
}

bool Poly::depends_on(const std::string& name) const {
  for (const auto& [m, c] : terms_)
    if (m.count(name)) return true;
  return false;
}

Rational Poly::evaluate(const std::map<std::string, Rational>& assignment) const {
  Rational total(0);
  for (const auto& [m, c] : terms_) {
    Rational v = c;
    for (const auto& [name, e] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) throw error("unassigned parameter: " + name);
      for (int i = 0; i < e; ++i) v *= it->second;
    }
    total += v;
  }
  return total;
}

Poly Poly::substitute(const std::map<std::string, Poly>& assignment) const {
  Poly total;
  for (const auto& [m, c] : terms_) {
    Poly v(c);
    for (const auto& [name, e] : m) {
      auto it = assignment.find(name);
      if (it == assignment.end()) {
        v *= Poly::parameter(name, e);
      } else {
        for (int i = 0; i < e; ++i) v *= it->second;
      }
    }
    total += v;
  }
  return total;
}

bool Poly::split_linear(const std::string& x, Rational* coeff, Poly* rest) const {
  Rational c(0);
  Poly r;
  for (const auto& [m, co] : terms_) {
    auto it = m.find(x);
    if (it == m.end()) {
      r.add_term(m, co);
    } else if (it->second == 1 && m.size() == 1) {
      c += co;
    } else {
      return false;  // x^2, or x times other parameters
    }
  }
  if (c.is_zero()) return false;
  *coeff = c;
  *rest = r;
  return true;
}

bool Poly::divide_by_parameter(const std::string& x, Poly* quotient) const {
  Poly q;
  for (const auto& [m, co] : terms_) {
    auto it = m.find(x);
    if (it == m.end()) return false;
    Monomial reduced = m;
    if (it->second == 1)
      reduced.erase(x);
    else
      reduced[x] = it->second - 1;
    q.add_term(reduced, co);
  }
  *quotient = q;
  return true;
}

namespace {

std::string monomial_str(const Monomial& m) {
  std::string out;
  for (const auto& [name, e] : m) {
    if (!out.empty()) out += "*";
    out += name;
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

}  // namespace

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // descending graded-lex, leading term first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Rational a = c;
    if (out.empty()) {
      if (a.sign() < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += a.sign() < 0 ? " - " : " + ";
      if (a.sign() < 0) a = -a;
    }
    std::string ms = monomial_str(m);
    if (ms.empty()) {
      out += a.str();
    } else if (a.is_one()) {
      out += ms;
    } else {
      out += a.str() + "*" + ms;
    }
  }
  return out;
}

// ------------------------------------------------------------------ Scalar

void Scalar::assign(const Poly& p) {
  if (p.is_constant())
    v_ = p.constant_term();
  else
    v_ = p;
}

bool Scalar::is_zero() const {
  return is_rational() ? rat().is_zero() : false;  // nonconstant Poly is never zero
}

const Rational& Scalar::rat() const {
  if (!is_rational()) throw error("parametric scalar where a rational is required");
  return std::get<Rational>(v_);
}

Poly Scalar::poly() const {
  if (is_rational()) return Poly(std::get<Rational>(v_));
  return std::get<Poly>(v_);
}

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(-std::get<Rational>(v_));
  return Scalar(-std::get<Poly>(v_));
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    v_ = std::get<Rational>(v_) + std::get<Rational>(o.v_);
  } else {
    assign(poly() + o.poly());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_rational() && o.is_rational()) {
    v_ = std::get<Rational>(v_) * std::get<Rational>(o.v_);
  } else {
    assign(poly() * o.poly());
  }
  return *this;
}

Scalar Scalar::divided_by(const Rational& c) const {
  if (is_rational()) return Scalar(rat() / c);
  return Scalar(std::get<Poly>(v_).divided_by(c));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.is_rational() != b.is_rational()) return false;
  if (a.is_rational()) return std::get<Rational>(a.v_) == std::get<Rational>(b.v_);
  return std::get<Poly>(a.v_) == std::get<Poly>(b.v_);
}

std::set<std::string> Scalar::parameters() const {
  if (is_rational()) return {};
  return std::get<Poly>(v_).parameters();
}

Rational Scalar::evaluate(const std::map<std::string, Rational>& assignment) const {
  if (is_rational()) return std::get<Rational>(v_);
  return std::get<Poly>(v_).evaluate(assignment);
}

Scalar Scalar::substitute(const std::map<std::string, Poly>& assignment) const {
  if (is_rational()) return *this;
  return Scalar(std::get<Poly>(v_).substitute(assignment));
}

std::string Scalar::str() const {
  if (is_rational()) return std::get<Rational>(v_).str();
  return std::get<Poly>(v_).str();
}

Scalar scalar_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar scalar_mul(const Scalar& a, const Scalar& b) { return a * b; }
bool scalar_is_zero(const Scalar& a) { return a.is_zero(); }

Rational scalar_substitute(const Scalar& a, const std::map<std::string, Rational>& assignment) {
  return a.evaluate(assignment);
}

// ------------------------------------------------------------------ parser

namespace {

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ('^' uint)?
// atom   := rational | identifier | '(' expr ')'
class ExprParser {
 public:
  explicit ExprParser(const std::string& s) : s_(s) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  Poly expr() {
    skip_ws();
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        Poly q = term();
        if (c == '+')
          p += q;
        else
          p -= q;
      } else {
        return p;
      }
    }
  }

  Poly term() {
    Poly p = factor();
    for (;;) {
      skip_ws();
      if (peek() == '*') {
        ++pos_;
        p *= factor();
      } else {
        return p;
      }
    }
  }

  Poly factor() {
    skip_ws();
    if (peek() == '-') {
      ++pos_;
      return -factor();
    }
    Poly base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == start) fail("expected nonnegative integer exponent after '^'");
      int e = std::stoi(s_.substr(start, pos_ - start));
      Poly p(Rational(1));
      for (int i = 0; i < e; ++i) p *= base;
      return p;
    }
    return base;
  }

  Poly atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly p = expr();
      skip_ws();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(rational_literal());
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return Poly::parameter(s_.substr(start, pos_ - start));
    }
    fail(c == '\0' ? "unexpected end of expression" : std::string("unexpected character '") + c + "'");
    return Poly();  // unreachable
  }

  Rational rational_literal() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::string num = s_.substr(start, pos_ - start);
    std::size_t save = pos_;
    skip_ws();
    if (peek() == '/') {
      ++pos_;
      skip_ws();
      std::size_t dstart = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ == dstart) fail("expected integer after '/'");
      std::string den = s_.substr(dstart, pos_ - dstart);
      if (mpz_class(den) == 0) fail("zero denominator");
      return Rational(mpz_class(num), mpz_class(den));
    }
    pos_ = save;
    return Rational(mpz_class(num), mpz_class(1));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw parse_error(msg, pos_ + 1); }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

Scalar parse_scalar(const std::string& text) { return Scalar(ExprParser(text).parse()); }

std::string scalar_str(const Scalar& s) { return s.str(); }

}  // namespace compatlie
