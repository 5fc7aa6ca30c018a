#include "compatlie/extensions.hpp"

#include "compatlie/families.hpp"
#include "compatlie/structure.hpp"

namespace compatlie {

namespace {

SVec basis_svec(int dim, int i) {
  SVec v(dim, Scalar(0));
  v[i - 1] = Scalar(1);
  return v;
}

}  // namespace

IdentityReport check_extension_conditions(const ExtensionSpec& spec) {
  const CompatAlgebra& base = spec.base;
  int n = base.dim;
  IdentityReport rep;
  for (int g = 0; g < int(spec.generators.size()); ++g) {
    const auto& gen = spec.generators[g];
    if (gen.act1.rows() != n || gen.act1.cols() != n || gen.act2.rows() != n ||
        gen.act2.cols() != n)
      throw error("generator action matrix has wrong dimensions");
    for (int i = 1; i <= n; ++i) {
      SVec ei = basis_svec(n, i);
      SVec d1i = gen.act1.apply(ei), d2i = gen.act2.apply(ei);
      for (int j = i + 1; j <= n; ++j) {
        SVec ej = basis_svec(n, j);
        SVec d1j = gen.act1.apply(ej), d2j = gen.act2.apply(ej);
        // (1) act1 in Der(bracket1)
        SVec r1 = gen.act1.apply(base.bracket1.apply(ei, ej));
        {
          SVec t = base.bracket1.apply(d1i, ej), u = base.bracket1.apply(ei, d1j);
          for (int c = 0; c < n; ++c) {
            Scalar v = r1[c] - t[c] - u[c];
            if (!v.is_zero()) {
              ++rep.violation_count;
              if (rep.witnesses.size() < IdentityReport::kDefaultMaxWitnesses)
                rep.witnesses.push_back(Witness{i, j, n + g + 1, c + 1, v, "der1"});
            }
          }
        }
        // (2) act2 in Der(bracket2)
        {
          SVec r2 = gen.act2.apply(base.bracket2.apply(ei, ej));
          SVec t = base.bracket2.apply(d2i, ej), u = base.bracket2.apply(ei, d2j);
          for (int c = 0; c < n; ++c) {
            Scalar v = r2[c] - t[c] - u[c];
            if (!v.is_zero()) {
              ++rep.violation_count;
              if (rep.witnesses.size() < IdentityReport::kDefaultMaxWitnesses)
                rep.witnesses.push_back(Witness{i, j, n + g + 1, c + 1, v, "der2"});
            }
          }
        }
        // (3) mixed coupling
        {
          SVec m = gen.act1.apply(base.bracket2.apply(ei, ej));
          SVec t1 = base.bracket2.apply(d1i, ej), t2 = base.bracket2.apply(ei, d1j);
          SVec m2 = gen.act2.apply(base.bracket1.apply(ei, ej));
          SVec t3 = base.bracket1.apply(d2i, ej), t4 = base.bracket1.apply(ei, d2j);
          for (int c = 0; c < n; ++c) {
            Scalar v = m[c] - t1[c] - t2[c] + m2[c] - t3[c] - t4[c];
            if (!v.is_zero()) {
              ++rep.violation_count;
              if (rep.witnesses.size() < IdentityReport::kDefaultMaxWitnesses)
                rep.witnesses.push_back(Witness{i, j, n + g + 1, c + 1, v, "mixed"});
            }
          }
        }
      }
    }
  }
  rep.holds = rep.violation_count == 0;
  return rep;
}

CompatAlgebra build_semidirect(const ExtensionSpec& spec) {
  IdentityReport cond = check_extension_conditions(spec);
  if (!cond.holds) {
    const Witness& w = cond.witnesses.front();
    throw precondition_error("extension condition " + w.tag + " fails at pair (" +
                             std::to_string(w.i) + "," + std::to_string(w.j) + ") coordinate " +
                             std::to_string(w.coord));
  }
  const CompatAlgebra& base = spec.base;
  int n = base.dim;
  int r = int(spec.generators.size());
  int dim = n + r;
  BracketTensor b1 = base.bracket1.embedded(dim);
  BracketTensor b2 = base.bracket2.embedded(dim);
  for (int g = 0; g < r; ++g) {
    const auto& gen = spec.generators[g];
    int z = n + g + 1;
    for (int i = 1; i <= n; ++i) {
      // [z, e_i] = act(e_i): stored as (e_i, z) with the opposite sign
      for (int u = 1; u <= n; ++u) {
        const Scalar& c1 = gen.act1.at(u - 1, i - 1);
        if (!c1.is_zero()) b1.add_term(i, z, u, -c1);
        const Scalar& c2 = gen.act2.at(u - 1, i - 1);
        if (!c2.is_zero()) b2.add_term(i, z, u, -c2);
      }
    }
  }
  for (const auto& [gij, terms] : spec.gen_bracket1)
    b1.set_product(n + gij.first, n + gij.second, terms);
  for (const auto& [gij, terms] : spec.gen_bracket2)
    b2.set_product(n + gij.first, n + gij.second, terms);

  std::vector<std::string> params = base.parameters;
  auto merge_params = [&params](const BracketTensor& b) {
    for (const auto& p : b.parameters())
      if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  };
  merge_params(b1);
  merge_params(b2);

  CompatAlgebra out(dim, b1, b2, params);
  for (int i = 1; i <= n; ++i) out.basis_labels[i - 1] = base.label(i);
  for (int g = 0; g < r; ++g)
    out.basis_labels[n + g] =
        spec.generators[g].label.empty() ? "z" + std::to_string(g + 1) : spec.generators[g].label;

  IdentityReport compat = check_compatibility(out);
  if (!compat.holds) {
    const Witness& w = compat.witnesses.front();
    throw precondition_error("assembled extension fails compatibility at (" + out.label(w.i) +
                             "," + out.label(w.j) + "," + out.label(w.k) + ")");
  }
  return out;
}

CompatAlgebra torus_extension(const CompatAlgebra& base, const std::vector<MatrixQ>& d,
                              const std::vector<MatrixQ>& d_prime, std::uint64_t seed) {
  DerivationSpace torus = diagonal_derivations(compat_derivation_space(base));
  auto check_list = [&](const std::vector<MatrixQ>& list, const char* which) {
    std::vector<QVec> flat;
    for (const auto& m : list) {
      if (!torus.contains(m))
        throw precondition_error(std::string(which) +
                                 " generator is not in the diagonal derivation torus");
      flat.push_back(m.flattened());
    }
    if (!flat.empty() &&
        Subspace::span(base.dim * base.dim, flat).dim() != int(flat.size()))
      throw precondition_error(std::string(which) + " generators are linearly dependent");
  };
  check_list(d, "bracket1");
  check_list(d_prime, "bracket2");

  ExtensionSpec spec;
  spec.base = base;
  SMatrix zero(base.dim, base.dim);
  int xi = 0, yi = 0;
  for (const auto& m : d)
    spec.generators.push_back({"x" + std::to_string(++xi), SMatrix::from_rational(m), zero});
  for (const auto& m : d_prime)
    spec.generators.push_back({"y" + std::to_string(++yi), zero, SMatrix::from_rational(m)});
  if (spec.generators.empty()) return base;

  CompatAlgebra out = build_semidirect(spec);
  if (!is_solvable(out)) throw error("torus extension failed solvability verification");
  std::vector<QVec> nbasis;
  for (int i = 1; i <= base.dim; ++i) {
    QVec v(out.dim, Rational(0));
    v[i - 1] = Rational(1);
    nbasis.push_back(std::move(v));
  }
  if (!verify_nilradical(out, Subspace::span(out.dim, nbasis), seed))
    throw error("torus extension failed nilradical verification");
  return out;
}

std::optional<GenericBase> detect_generic_base(const CompatAlgebra& base) {
  int n = base.dim;
  if (n >= 4 && base.bracket1 == make_Ln(n) && base.bracket2 == make_Rn(n))
    return GenericBase::LR;
  if (n >= 7 && base.bracket1 == make_Ln(n) && base.bracket2 == make_Wn(n))
    return GenericBase::LW;
  return std::nullopt;
}

namespace {

Scalar par(const std::string& n) { return Scalar::parameter(n); }

/// Rank-1 ansatz for (L_n, R_n): bracket1 action in the shifted Der(L_n)
/// shape, bracket2 action in the Der(R_n) shape.
CompatAlgebra generic_lr_rank1(int n) {
  const int x = n + 1;
  CompatAlgebra base = lr_pair(n);
  BracketTensor b1 = base.bracket1.embedded(n + 1);
  BracketTensor b2 = base.bracket2.embedded(n + 1);
  auto num = [](int v) { return std::to_string(v); };
  b1.add_term(1, x, 1, par("a1_1"));
  b1.add_term(1, x, 2, par("a1_2"));
  for (int i = 2; i <= n; ++i) {
    b1.add_term(i, x, i, Scalar(i - 2) * par("a1_1") + par("a2_2"));
    for (int t = 4; t <= n - i + 2; ++t) b1.add_term(i, x, t + i - 2, par("a2_" + num(t)));
  }
  b2.add_term(1, x, 1, par("b1_1"));
  for (int t = 3; t <= n; ++t) b2.add_term(1, x, t, par("b1_" + num(t)));
  b2.add_term(2, x, 2, Scalar(2) * par("b1_1"));
  for (int t = 3; t <= n; ++t) b2.add_term(2, x, t, par("b2_" + num(t)));
  for (int i = 3; i <= n; ++i) {
    b2.add_term(i, x, i, Scalar(i) * par("b1_1"));
    if (i + 1 <= n) b2.add_term(i, x, i + 1, par("b2_3"));
    for (int t = 4; t <= n - i + 2; ++t)
      b2.add_term(i, x, t + i - 2, par("b2_" + num(t)) - par("b1_" + num(t - 1)));
  }
  std::vector<std::string> params;
  for (const auto& p : b1.parameters()) params.push_back(p);
  for (const auto& p : b2.parameters())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  CompatAlgebra a(n + 1, b1, b2, params);
  a.basis_labels[n] = "x";
  return a;
}

/// Rank-1 ansatz for (L_n, W_n): bracket1 action in the shifted Der(L_n)
/// shape, bracket2 action in the Der(W_n) shape (torus + inner + H^1 maps).
CompatAlgebra generic_lw_rank1(int n) {
  const int x = n + 1;
  CompatAlgebra base = lw_pair(n);
  BracketTensor b1 = base.bracket1.embedded(n + 1);
  BracketTensor b2 = base.bracket2.embedded(n + 1);
  auto num = [](int v) { return std::to_string(v); };
  b1.add_term(1, x, 1, par("a1_1"));
  b1.add_term(1, x, 2, par("a1_2"));
  for (int i = 2; i <= n; ++i) {
    b1.add_term(i, x, i, Scalar(i - 2) * par("a1_1") + par("a2_2"));
    for (int t = 4; t <= n - i + 2; ++t) b1.add_term(i, x, t + i - 2, par("a2_" + num(t)));
  }
  // {e_1,x} = g e_1 + sum_{k=3}^{n-1} g_{k-1} e_k + (g_{n-1} + t1) e_n
  b2.add_term(1, x, 1, par("g"));
  for (int k = 3; k <= n - 1; ++k) b2.add_term(1, x, k, par("g" + num(k - 1)));
  b2.add_term(1, x, n, par("g" + num(n - 1)) + par("t1"));
  // {e_i,x} = i g e_i + sum_k g_k {e_i,e_k} + t2 t_2(e_i) + t3 t_3(e_i)
  for (int i = 2; i <= n; ++i) {
    b2.add_term(i, x, i, Scalar(i) * par("g"));
    for (int k = 1; k <= n - i; ++k)
      for (const auto& [m, c] : base.bracket2.product(i, k))
        b2.add_term(i, x, m, par("g" + num(k)) * c);
    if (i >= 2 && i <= 4 && n - 4 + i <= n) b2.add_term(i, x, n - 4 + i, par("t2"));
    if (i >= 2 && i <= 3) b2.add_term(i, x, n - 3 + i, par("t3"));
  }
  std::vector<std::string> params;
  for (const auto& p : b1.parameters()) params.push_back(p);
  for (const auto& p : b2.parameters())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  CompatAlgebra a(n + 1, b1, b2, params);
  a.basis_labels[n] = "x";
  return a;
}

/// Rank-2 probe: the paper's normalized non-nilpotent bracket1 ansatz with
/// fully generic bracket2 actions of the two generators. `x_first` puts the
/// (1; i-2)-weight generator before the (0; 1)-weight one.
CompatAlgebra generic_rank2(GenericBase kind, int n, bool x_first) {
  CompatAlgebra base = kind == GenericBase::LR ? lr_pair(n) : lw_pair(n);
  int dim = n + 2;
  BracketTensor b1 = base.bracket1.embedded(dim);
  BracketTensor b2 = base.bracket2.embedded(dim);
  int xg = x_first ? n + 1 : n + 2;  // weights (1; i-2), tail a e_2 on e_1
  int yg = x_first ? n + 2 : n + 1;  // weights (0; 1), tail -a e_2 on e_1
  b1.add_term(1, xg, 1, Scalar(1));
  b1.add_term(1, xg, 2, par("al"));
  for (int i = 2; i <= n; ++i) b1.add_term(i, xg, i, Scalar(i - 2));
  b1.add_term(1, yg, 2, -par("al"));
  for (int i = 2; i <= n; ++i) b1.add_term(i, yg, i, Scalar(1));
  auto num = [](int v) { return std::to_string(v); };
  for (int g = n + 1; g <= n + 2; ++g) {
    std::string tag = g == xg ? "u" : "v";
    for (int i = 1; i <= n; ++i)
      for (int t = 1; t <= n; ++t) b2.add_term(i, g, t, par(tag + num(i) + "_" + num(t)));
  }
  for (int t = 1; t <= n; ++t) b2.add_term(n + 1, n + 2, t, par("w" + num(t)));
  std::vector<std::string> params;
  for (const auto& p : b1.parameters()) params.push_back(p);
  for (const auto& p : b2.parameters())
    if (std::find(params.begin(), params.end(), p) == params.end()) params.push_back(p);
  CompatAlgebra a(dim, b1, b2, params);
  a.basis_labels[n] = x_first ? "x" : "x1";
  a.basis_labels[n + 1] = x_first ? "y" : "x2";
  return a;
}

}  // namespace

std::pair<CompatAlgebra, ConstraintSet> generic_extension(GenericBase base, int n, int r) {
  if (r != 1 && r != 2) throw error("generic extension supports rank 1 or 2");
  CompatAlgebra a;
  if (r == 1) {
    a = base == GenericBase::LR ? generic_lr_rank1(n) : generic_lw_rank1(n);
  } else {
    // generator labelling follows the corresponding nonexistence proof:
    // (x, y) for the (L,R) case, (x1, x2) with the non-nilpotent weight
    // second for the (L,W) case
    a = generic_rank2(base, n, base == GenericBase::LR);
  }
  return {a, extract_constraints(a)};
}

NonexistenceCertificate nonexistence_probe(GenericBase base, int n) {
  auto [algebra, cs] = generic_extension(base, n, 2);
  NonexistenceCertificate cert;
  cert.reduced = reduce_constraints(cs);
  cert.contradictions = cert.reduced.contradictions();
  return cert;
}

}  // namespace compatlie
