#include "compatlie/bracket.hpp"

#include <algorithm>

namespace compatlie {

Terms terms_add(const Terms& a, const Terms& b) {
  Terms out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.push_back(b[j++]);
    } else {
      Scalar s = a[i].second + b[j].second;
      if (!s.is_zero()) out.emplace_back(a[i].first, std::move(s));
      ++i;
      ++j;
    }
  }
  return out;
}

Terms terms_negate(const Terms& a) {
  Terms out;
  out.reserve(a.size());
  for (const auto& [k, c] : a) out.emplace_back(k, -c);
  return out;
}

Terms terms_scale(const Terms& a, const Scalar& c) {
  Terms out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [k, v] : a) {
    Scalar s = v * c;
    if (!s.is_zero()) out.emplace_back(k, std::move(s));
  }
  return out;
}

QVec terms_to_qvec(const Terms& t, int dim) {
  QVec v(dim, Rational(0));
  for (const auto& [k, c] : t) v[k - 1] = c.rat();
  return v;
}

Terms qvec_to_terms(const QVec& v) {
  Terms t;
  for (int k = 1; k <= int(v.size()); ++k)
    if (!v[k - 1].is_zero()) t.emplace_back(k, Scalar(v[k - 1]));
  return t;
}

SVec terms_to_svec(const Terms& t, int dim) {
  SVec v(dim, Scalar(0));
  for (const auto& [k, c] : t) v[k - 1] = c;
  return v;
}

Terms svec_to_terms(const SVec& v) {
  Terms t;
  for (int k = 1; k <= int(v.size()); ++k)
    if (!v[k - 1].is_zero()) t.emplace_back(k, v[k - 1]);
  return t;
}

void BracketTensor::add_term(int i, int j, int k, const Scalar& c) {
  if (i < 1 || j < 1 || k < 1 || i > dim_ || j > dim_ || k > dim_)
    throw error("bracket index out of range");
  if (i == j) throw error("bracket product of a basis vector with itself");
  if (c.is_zero()) return;
  Scalar v = c;
  if (i > j) {
    std::swap(i, j);
    v = -v;
  }
  Terms& t = c_[{i, j}];
  t = terms_add(t, Terms{{k, v}});
  if (t.empty()) c_.erase({i, j});
}

void BracketTensor::set_product(int i, int j, Terms terms) {
  for (const auto& [k, c] : terms) add_term(i, j, k, c);
}

Terms BracketTensor::product(int i, int j) const {
  if (i == j) return {};
  bool flip = i > j;
  if (flip) std::swap(i, j);
  auto it = c_.find({i, j});
  if (it == c_.end()) return {};
  return flip ? terms_negate(it->second) : it->second;
}

SVec BracketTensor::apply(const SVec& x, const SVec& y) const {
  if (int(x.size()) != dim_ || int(y.size()) != dim_) throw error("bracket apply dimension mismatch");
  SVec out(dim_, Scalar(0));
  for (const auto& [ij, terms] : c_) {
    auto [i, j] = ij;
    Scalar w = x[i - 1] * y[j - 1] - x[j - 1] * y[i - 1];
    if (w.is_zero()) continue;
    for (const auto& [k, c] : terms) out[k - 1] += w * c;
  }
  return out;
}

BracketTensor BracketTensor::operator-() const {
  BracketTensor r(dim_);
  for (const auto& [ij, terms] : c_) r.c_[ij] = terms_negate(terms);
  return r;
}

BracketTensor operator+(const BracketTensor& a, const BracketTensor& b) {
  if (a.dim_ != b.dim_) throw error("bracket sum dimension mismatch");
  BracketTensor r(a.dim_);
  r.c_ = a.c_;
  for (const auto& [ij, terms] : b.c_) {
    Terms& t = r.c_[ij];
    t = terms_add(t, terms);
    if (t.empty()) r.c_.erase(ij);
  }
  return r;
}

BracketTensor operator-(const BracketTensor& a, const BracketTensor& b) { return a + (-b); }

BracketTensor BracketTensor::scaled(const Scalar& c) const {
  BracketTensor r(dim_);
  if (c.is_zero()) return r;
  for (const auto& [ij, terms] : c_) {
    Terms t = terms_scale(terms, c);
    if (!t.empty()) r.c_[ij] = std::move(t);
  }
  return r;
}

std::set<std::string> BracketTensor::parameters() const {
  std::set<std::string> names;
  for (const auto& [ij, terms] : c_)
    for (const auto& [k, c] : terms)
      for (const auto& n : c.parameters()) names.insert(n);
  return names;
}

BracketTensor BracketTensor::substitute(const std::map<std::string, Poly>& assignment) const {
  BracketTensor r(dim_);
  for (const auto& [ij, terms] : c_)
    for (const auto& [k, c] : terms) r.add_term(ij.first, ij.second, k, c.substitute(assignment));
  return r;
}

MatrixQ BracketTensor::adjoint_matrix(const QVec& x) const {
  if (int(x.size()) != dim_) throw error("adjoint dimension mismatch");
  MatrixQ m(dim_, dim_);
  for (const auto& [ij, terms] : c_) {
    auto [i, j] = ij;
    // column j gets x_i * c, column i gets -x_j * c
    for (const auto& [k, c] : terms) {
      Rational cr = c.rat();
      if (!x[i - 1].is_zero()) m.at(k - 1, j - 1) += x[i - 1] * cr;
      if (!x[j - 1].is_zero()) m.at(k - 1, i - 1) -= x[j - 1] * cr;
    }
  }
  return m;
}

MatrixQ BracketTensor::adjoint_matrix_of_basis(int i) const {
  QVec x(dim_, Rational(0));
  x[i - 1] = Rational(1);
  return adjoint_matrix(x);
}

BracketTensor BracketTensor::embedded(int new_dim) const {
  if (new_dim < dim_) throw error("embedding into smaller space");
  BracketTensor r(new_dim);
  r.c_ = c_;
  return r;
}

void TriResidual::add(int i, int j, int k, int coord, const Scalar& c) {
  if (c.is_zero()) return;
  Terms& t = r_[{i, j, k}];
  t = terms_add(t, Terms{{coord, c}});
  if (t.empty()) r_.erase({i, j, k});
}

Terms TriResidual::at(int i, int j, int k) const {
  auto it = r_.find({i, j, k});
  return it == r_.end() ? Terms{} : it->second;
}

TriResidual& TriResidual::operator+=(const TriResidual& o) {
  if (o.dim_ != dim_) throw error("residual dimension mismatch");
  for (const auto& [ijk, terms] : o.r_) {
    Terms& t = r_[ijk];
    t = terms_add(t, terms);
    if (t.empty()) r_.erase(ijk);
  }
  return *this;
}

TriResidual circle(const BracketTensor& f, const BracketTensor& g) {
  if (f.dim() != g.dim()) throw error("circle dimension mismatch");
  int n = f.dim();
  TriResidual res(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        Terms acc;
        const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : cyc) {
          for (const auto& [m, v] : g.product(t[0], t[1])) {
            Terms outer = terms_scale(f.product(m, t[2]), v);
            acc = terms_add(acc, outer);
          }
        }
        for (const auto& [coord, c] : acc) res.add(i, j, k, coord, c);
      }
  return res;
}

TriResidual sym_circle(const BracketTensor& f, const BracketTensor& g) {
  TriResidual r = circle(f, g);
  r += circle(g, f);
  return r;
}

TriResidual jacobiator(const BracketTensor& t) { return circle(t, t); }

BracketTensor pencil_combine(const Scalar& l1, const BracketTensor& b1, const Scalar& l2,
                             const BracketTensor& b2) {
  if (b1.dim() != b2.dim()) throw error("pencil dimension mismatch");
  return b1.scaled(l1) + b2.scaled(l2);
}

}  // namespace compatlie
