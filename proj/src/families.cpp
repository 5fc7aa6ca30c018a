#include "compatlie/families.hpp"

#include <algorithm>

namespace compatlie {

namespace {

Rational factorial(int k) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), k);
  return Rational(r, mpz_class(1));
}

Scalar param(const std::string& name) { return Scalar::parameter(name); }

}  // namespace

BracketTensor make_Ln(int n) {
  if (n < 4) throw error("L_n needs n >= 4");
  BracketTensor b(n);
  for (int i = 2; i <= n - 1; ++i) b.add_term(1, i, i + 1, Scalar(1));
  return b;
}

BracketTensor make_Rn(int n) {
  if (n < 4) throw error("R_n needs n >= 4");
  BracketTensor b = make_Ln(n);
  for (int i = 3; i <= n - 2; ++i) b.add_term(2, i, i + 2, Scalar(1));
  return b;
}

BracketTensor make_Wn(int n) {
  if (n < 7) throw error("W_n needs n >= 7");
  BracketTensor b(n);
  for (int i = 2; i <= n - 1; ++i) b.add_term(1, i, i + 1, Scalar(1));
  for (int i = 2; i <= n - 2; ++i)
    for (int j = i + 1; j <= n - 2; ++j) {
      if (i + j > n) continue;
      Rational c = Rational(6 * (j - i)) * factorial(i - 2) * factorial(j - 2) /
                   factorial(i + j - 2);
      b.add_term(i, j, i + j, Scalar(c));
    }
  return b;
}

CompatAlgebra lr_pair(int n) { return CompatAlgebra(n, make_Ln(n), make_Rn(n)); }
CompatAlgebra lw_pair(int n) { return CompatAlgebra(n, make_Ln(n), make_Wn(n)); }
CompatAlgebra rw_pair(int n) { return CompatAlgebra(n, make_Rn(n), make_Wn(n)); }

SeriesSpec::SeriesSpec(std::vector<int> v) : values(std::move(v)) {
  if (values.empty()) throw error("series must have at least one block");
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] < 0) throw error("series blocks must be nonnegative");
    if (values[i] == 0 && i != 0) throw error("only the first block may be zero");
  }
  if (total() < 1) throw error("series total must be at least 1");
}

int SeriesSpec::total() const {
  int n = 0;
  for (int v : values) n += v;
  return n;
}

std::vector<int> SeriesSpec::cumulative() const {
  std::vector<int> c{0};
  for (int v : values) c.push_back(c.back() + v);
  return c;
}

std::string SeriesSpec::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(values[i]);
  }
  return out + ")";
}

CompatAlgebra make_Ls(const SeriesSpec& s) {
  int n = s.total();
  auto nbar = s.cumulative();
  BracketTensor b1(n + 1), b2(n + 1);
  // label e_t is stored at index t+1
  for (std::size_t block = 1; block < nbar.size(); ++block) {
    BracketTensor& b = block % 2 == 1 ? b1 : b2;
    for (int i = nbar[block - 1] + 1; i <= nbar[block]; ++i) {
      if (i + 1 > n) continue;  // the top product leaves the space
      b.add_term(1, i + 1, i + 2, Scalar(1));
    }
  }
  CompatAlgebra a(n + 1, b1, b2);
  a.basis_labels = default_labels(n + 1, 0);
  return a;
}

CompatAlgebra make_example7() {
  BracketTensor b1(7), b2(7);
  b1.add_term(1, 2, 4, Scalar(1));
  b1.add_term(1, 3, 5, Scalar(1));
  b1.add_term(2, 3, 6, Scalar(1));
  b1.add_term(4, 3, 7, Scalar(1));
  b1.add_term(1, 6, 7, Scalar(1));
  b2.add_term(6, 1, 2, Scalar(1));
  b2.add_term(1, 7, 4, Scalar(1));
  b2.add_term(3, 4, 2, Scalar(1));
  b2.add_term(7, 3, 6, Scalar(1));
  return CompatAlgebra(7, b1, b2);
}

CompatAlgebra make_existcc_N() {
  const int n = 7;
  BracketTensor b1(n), b2(n);
  for (int i = 2; i <= n - 1; ++i) b1.add_term(i, 1, i + 1, Scalar(1));
  for (int i = 3; i <= n - 2; ++i) b1.add_term(i, 2, i + 2, Scalar(1));
  b2.add_term(2, 1, n - 1, Scalar(1));
  b2.add_term(3, 1, n, Scalar(-1));
  return CompatAlgebra(n, b1, b2);
}

CompatAlgebra make_existcc_R() {
  const int n = 7, x = 8;
  BracketTensor b1(8), b2(8);
  for (int i = 2; i <= 6; ++i) b1.add_term(i, 1, i + 1, Scalar(1));
  for (int i = 3; i <= 5; ++i) b1.add_term(i, 2, i + 2, Scalar(1));
  for (int i = 1; i <= 7; ++i) b1.add_term(i, x, i, Scalar(i));
  b2.add_term(2, 1, 6, Scalar(1));
  b2.add_term(1, 3, 7, Scalar(1));
  b2.add_term(1, x, 6, param("a1"));
  b2.add_term(1, x, 7, param("a2"));
  b2.add_term(2, x, 6, param("a3"));
  b2.add_term(2, x, 7, param("a4"));
  b2.add_term(3, x, 6, Scalar(-3));
  b2.add_term(3, x, 7, param("a3"));
  CompatAlgebra a(8, b1, b2, {"a1", "a2", "a3", "a4"});
  a.basis_labels[7] = "x";
  return a;
}

CompatAlgebra make_F1() {
  // labels X_0..X_6 at indices 1..7
  BracketTensor b1(7), b2(7);
  for (int i = 1; i <= 4; ++i) b1.add_term(1, i + 1, i + 2, Scalar(1));
  const char* names[4] = {"al1", "al2", "al3", "al4"};
  for (int i = 1; i <= 4; ++i) b2.add_term(1, i + 1, i + 2, param(names[i - 1]));
  b2.add_term(1, 6, 7, Scalar(1));
  CompatAlgebra a(7, b1, b2, {"al1", "al2", "al3", "al4"});
  a.basis_labels = {"X0", "X1", "X2", "X3", "X4", "X5", "X6"};
  return a;
}

CompatAlgebra make_F2() {
  BracketTensor b1(7), b2(7);
  for (int i = 1; i <= 4; ++i) b1.add_term(1, i + 1, i + 2, Scalar(1));
  Scalar al = param("al"), be = param("be"), la = param("la");
  b2.add_term(1, 2, 3, al);
  b2.add_term(1, 3, 4, be);
  b2.add_term(1, 4, 5, be);
  b2.add_term(1, 5, 6, al);
  b2.add_term(1, 6, 7, Scalar(1));
  b2.add_term(2, 3, 4, la);
  b2.add_term(2, 4, 5, la);
  b2.add_term(3, 4, 6, la);
  CompatAlgebra a(7, b1, b2, {"al", "be", "la"});
  a.basis_labels = {"X0", "X1", "X2", "X3", "X4", "X5", "X6"};
  return a;
}

namespace {

Scalar table_param(const std::string& name, const std::map<std::string, Rational>& params,
                   std::vector<std::string>* names) {
  if (std::find(names->begin(), names->end(), name) == names->end()) names->push_back(name);
  auto it = params.find(name);
  if (it != params.end()) return Scalar(it->second);
  return Scalar::parameter(name);
}

}  // namespace

std::vector<std::string> theorem_table_parameters(TheoremTable id, int n) {
  return make_extension_table(id, n, {}).parameters;
}

CompatAlgebra make_extension_table(TheoremTable id, int n,
                                   const std::map<std::string, Rational>& params) {
  if (n < 7) throw error("extension tables need n >= 7");
  const int x = n + 1;
  std::vector<std::string> names;
  auto P = [&](const std::string& name) { return table_param(name, params, &names); };
  auto num = [](int v) { return std::to_string(v); };

  BracketTensor b1(n + 1), b2(n + 1);
  CompatAlgebra base = (id == TheoremTable::LR_derL || id == TheoremTable::LR_derR ||
                        id == TheoremTable::LR_derN)
                           ? lr_pair(n)
                           : lw_pair(n);
  b1 = base.bracket1.embedded(n + 1);
  b2 = base.bracket2.embedded(n + 1);

  switch (id) {
    case TheoremTable::LR_derL:
    case TheoremTable::LR_derN: {
      // [e_i,x] = i e_i ; {e_1,x} = b1_1 e_1 + b1_{n-1} e_{n-1} + b1_n e_n ;
      // {e_i,x} = i b1_1 e_i + sum_{t=3}^{n-i+2} b2_t e_{t+i-2}
      for (int i = 1; i <= n; ++i) b1.add_term(i, x, i, Scalar(i));
      b2.add_term(1, x, 1, P("b1_1"));
      b2.add_term(1, x, n - 1, P("b1_" + num(n - 1)));
      b2.add_term(1, x, n, P("b1_" + num(n)));
      for (int i = 2; i <= n; ++i) {
        b2.add_term(i, x, i, Scalar(i) * P("b1_1"));
        for (int t = 3; t <= n - i + 2; ++t) b2.add_term(i, x, t + i - 2, P("b2_" + num(t)));
      }
      break;
    }
    case TheoremTable::LR_derR: {
      // [e_1,x] = a1_1 e_1 + a1_{n-1} e_{n-1} + a1_n e_n ;
      // [e_i,x] = i a1_1 e_i + sum_{t=4}^{n-i+2} a2_t e_{t+i-2} ; {e_i,x} = i e_i
      b1.add_term(1, x, 1, P("a1_1"));
      b1.add_term(1, x, n - 1, P("a1_" + num(n - 1)));
      b1.add_term(1, x, n, P("a1_" + num(n)));
      for (int i = 2; i <= n; ++i) {
        b1.add_term(i, x, i, Scalar(i) * P("a1_1"));
        for (int t = 4; t <= n - i + 2; ++t) b1.add_term(i, x, t + i - 2, P("a2_" + num(t)));
      }
      for (int i = 1; i <= n; ++i) b2.add_term(i, x, i, Scalar(i));
      break;
    }
    case TheoremTable::LW_derL: {
      // [e_1,x] = e_1 ; [e_i,x] = i e_i + sum_{k=n-2}^{n} a2_k e_{k+i-2} ;
      // {e_1,x} = g e_1 + g_{n-2} e_{n-1} + (g_{n-1} + t1) e_n ;
      // {e_i,x} = i g e_i + g1 {e_i,e_1} + g_{n-2} {e_i,e_{n-2}}
      //           + t2 t_2(e_i) + t3 t_3(e_i)
      b1.add_term(1, x, 1, Scalar(1));
      for (int i = 2; i <= n; ++i) {
        b1.add_term(i, x, i, Scalar(i));
        for (int k = n - 2; k <= n; ++k)
          if (k + i - 2 <= n) b1.add_term(i, x, k + i - 2, P("a2_" + num(k)));
      }
      b2.add_term(1, x, 1, P("g"));
      b2.add_term(1, x, n - 1, P("g" + num(n - 2)));
      b2.add_term(1, x, n, P("g" + num(n - 1)) + P("t1"));
      for (int i = 2; i <= n; ++i) {
        b2.add_term(i, x, i, Scalar(i) * P("g"));
        for (auto [coef_name, other] :
             {std::pair<std::string, int>{"g1", 1}, {"g" + num(n - 2), n - 2}}) {
          for (const auto& [k, c] : base.bracket2.product(i, other))
            b2.add_term(i, x, k, P(coef_name) * c);
        }
        if (i >= 2 && i <= 4 && n - 4 + i <= n) b2.add_term(i, x, n - 4 + i, P("t2"));
        if (i >= 2 && i <= 3) b2.add_term(i, x, n - 3 + i, P("t3"));
      }
      break;
    }
    case TheoremTable::LW_derW: {
      // [e_1,x] = a1_1 e_1 + a1_{n-1} e_{n-1} + a1_n e_n ;
      // [e_i,x] = i a1_1 e_i + sum_{k=n-2}^n a2_k e_{k+i-2} ;
      // {e_1,x} = e_1 ; {e_2,x} = 2e_2 + t2 e_{n-2} + t3 e_{n-1} ;
      // {e_3,x} = 3e_3 + t2 e_{n-1} + t3 e_n ; {e_4,x} = 4e_4 + t2 e_n ;
      // {e_i,x} = i e_i for i >= 5
      b1.add_term(1, x, 1, P("a1_1"));
      b1.add_term(1, x, n - 1, P("a1_" + num(n - 1)));
      b1.add_term(1, x, n, P("a1_" + num(n)));
      for (int i = 2; i <= n; ++i) {
        b1.add_term(i, x, i, Scalar(i) * P("a1_1"));
        for (int k = n - 2; k <= n; ++k)
          if (k + i - 2 <= n) b1.add_term(i, x, k + i - 2, P("a2_" + num(k)));
      }
      b2.add_term(1, x, 1, Scalar(1));
      b2.add_term(2, x, 2, Scalar(2));
      b2.add_term(2, x, n - 2, P("t2"));
      b2.add_term(2, x, n - 1, P("t3"));
      b2.add_term(3, x, 3, Scalar(3));
      b2.add_term(3, x, n - 1, P("t2"));
      b2.add_term(3, x, n, P("t3"));
      b2.add_term(4, x, 4, Scalar(4));
      b2.add_term(4, x, n, P("t2"));
      for (int i = 5; i <= n; ++i) b2.add_term(i, x, i, Scalar(i));
      break;
    }
    case TheoremTable::LW_derN: {
      // [e_1,x] = e_1 ; [e_2,x] = 2e_2 + a3 e_{n-2} + a4 e_{n-1} ;
      // [e_3,x] = 3e_3 + a3 e_{n-1} + a4 e_n ; [e_4,x] = 4e_4 + a3 e_n ;
      // [e_i,x] = i e_i ; {e_1,x} = g e_1 + g1 e_{n-1} + g2 e_n ;
      // {e_2,x} = 2g e_2 + g3 e_{n-2} + g4 e_{n-1} + (n-4)g1/((n-3)(n-2)) e_n ;
      // {e_3,x} = 3g e_3 + g3 e_{n-1} + g4 e_n ; {e_4,x} = 4g e_4 + g3 e_n ;
      // {e_i,x} = i g e_i
      b1.add_term(1, x, 1, Scalar(1));
      b1.add_term(2, x, 2, Scalar(2));
      b1.add_term(2, x, n - 2, P("a3"));
      b1.add_term(2, x, n - 1, P("a4"));
      b1.add_term(3, x, 3, Scalar(3));
      b1.add_term(3, x, n - 1, P("a3"));
      b1.add_term(3, x, n, P("a4"));
      b1.add_term(4, x, 4, Scalar(4));
      b1.add_term(4, x, n, P("a3"));
      for (int i = 5; i <= n; ++i) b1.add_term(i, x, i, Scalar(i));
      Scalar g = P("g");
      b2.add_term(1, x, 1, g);
      b2.add_term(1, x, n - 1, P("g1"));
      b2.add_term(1, x, n, P("g2"));
      b2.add_term(2, x, 2, Scalar(2) * g);
      b2.add_term(2, x, n - 2, P("g3"));
      b2.add_term(2, x, n - 1, P("g4"));
      b2.add_term(2, x, n,
                  P("g1") * Scalar(Rational(n - 4, long(n - 3) * (n - 2))));
      b2.add_term(3, x, 3, Scalar(3) * g);
      b2.add_term(3, x, n - 1, P("g3"));
      b2.add_term(3, x, n, P("g4"));
      b2.add_term(4, x, 4, Scalar(4) * g);
      b2.add_term(4, x, n, P("g3"));
      for (int i = 5; i <= n; ++i) b2.add_term(i, x, i, Scalar(i) * g);
      break;
    }
  }

  std::vector<std::string> formal;
  for (const auto& name : names)
    if (!params.count(name)) formal.push_back(name);
  CompatAlgebra a(n + 1, b1, b2, formal);
  a.basis_labels[n] = "x";
  return a;
}

CompatAlgebra make_paper_example(const std::string& name) {
  if (name == "example7") return make_example7();
  if (name == "existcc") return make_existcc_N();
  if (name == "existcc_r") return make_existcc_R();
  if (name == "f1") return make_F1();
  if (name == "f2") return make_F2();
  throw error("unknown example name: " + name);
}

}  // namespace compatlie
