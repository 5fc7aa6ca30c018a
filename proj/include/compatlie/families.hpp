#ifndef COMPATLIE_FAMILIES_HPP
#define COMPATLIE_FAMILIES_HPP

#include <string>
#include <vector>

#include "compatlie/algebra.hpp"

namespace compatlie {

/// Model filiform bracket on e_1..e_n: [e_1, e_i] = e_{i+1}, 2 <= i <= n-1.
BracketTensor make_Ln(int n);
/// [e_1,e_i] = e_{i+1} plus [e_2,e_i] = e_{i+2}, 3 <= i <= n-2.
BracketTensor make_Rn(int n);
/// Witt-quotient presentation, n >= 7:
/// [e_1,e_i] = e_{i+1} and [e_i,e_j] = 6(j-i)(i-2)!(j-2)!/(i+j-2)! e_{i+j}.
BracketTensor make_Wn(int n);

CompatAlgebra lr_pair(int n);
CompatAlgebra lw_pair(int n);
CompatAlgebra rw_pair(int n);

/// Block lengths (n_1, ..., n_t) of a model filiform compatible algebra.
struct SeriesSpec {
  std::vector<int> values;
  explicit SeriesSpec(std::vector<int> v);
  int total() const;                      // n = sum of values
  std::vector<int> cumulative() const;    // (0, n_1, n_1+n_2, ...)
  std::string str() const;
  friend bool operator==(const SeriesSpec& a, const SeriesSpec& b) {
    return a.values == b.values;
  }
};

/// The model filiform compatible algebra on labels e_0..e_n: odd blocks in
/// bracket1, even blocks in bracket2.
CompatAlgebra make_Ls(const SeriesSpec& s);

/// The 7-dimensional algebra whose nilpotent-ideal sum is non-nilpotent.
CompatAlgebra make_example7();
/// The nilpotent pair N whose derivations are all nilpotent (built at n = 7).
CompatAlgebra make_existcc_N();
/// Its one-dimensional solvable extension, with formal parameters a1..a4.
CompatAlgebra make_existcc_R();
/// Graded 7-dimensional families from the classification theorem.
CompatAlgebra make_F1();  // formal al1..al4
CompatAlgebra make_F2();  // formal al, be, la

enum class TheoremTable {
  LR_derL,  // (L_n,R_n) extension by non-nilpotent derivations of L_n
  LR_derR,  // ... of R_n
  LR_derN,  // ... of Der(L_n) \cap Der(R_n); same displayed table as LR_derL
  LW_derL,
  LW_derW,
  LW_derN,
};

std::vector<std::string> theorem_table_parameters(TheoremTable id, int n);

/// The (n+1)-dimensional solvable extension exactly as displayed, basis
/// e_1..e_n, x. Unassigned parameters stay formal.
CompatAlgebra make_extension_table(TheoremTable id, int n,
                                   const std::map<std::string, Rational>& params = {});

/// Named constructor used by the CLI: example7, existcc, existcc_r, f1, f2.
CompatAlgebra make_paper_example(const std::string& name);

}  // namespace compatlie

#endif
