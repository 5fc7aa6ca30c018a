#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "compatlie/cohomology.hpp"
#include "compatlie/derivations.hpp"
#include "compatlie/extensions.hpp"
#include "compatlie/families.hpp"
#include "compatlie/filiform.hpp"
#include "compatlie/io.hpp"
#include "compatlie/structure.hpp"

namespace compatlie {

namespace {

using json = nlohmann::ordered_json;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw error("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw error("cannot write file: " + path);
  out << text;
}

struct Output {
  bool as_json = false;
  json doc;
  std::ostringstream text;
  std::ostream& out;

  explicit Output(std::ostream& o) : out(o) {}
  void kv(const std::string& key, const json& value) {
    doc[key] = value;
    if (value.is_string())
      text << key << ": " << value.get<std::string>() << "\n";
    else
      text << key << ": " << value.dump() << "\n";
  }
  void line(const std::string& s) {
    if (!doc.contains("log")) doc["log"] = json::array();
    doc["log"].push_back(s);
    text << s << "\n";
  }
  void flush() {
    if (as_json)
      out << doc.dump(2) << "\n";
    else
      out << text.str();
  }
};

std::string witness_str(const CompatAlgebra& a, const Witness& w) {
  std::string s = "(" + a.label(w.i) + "," + a.label(w.j) + "," + a.label(w.k) + ") -> " +
                  w.residual.str() + " * " + a.label(w.coord);
  if (!w.tag.empty()) s = "[" + w.tag + "] " + s;
  return s;
}

json report_json(const CompatAlgebra& a, const IdentityReport& rep) {
  json j;
  j["holds"] = rep.holds;
  j["violations"] = rep.violation_count;
  json ws = json::array();
  for (const auto& w : rep.witnesses) ws.push_back(witness_str(a, w));
  j["witnesses"] = ws;
  return j;
}

CompatAlgebra load_algebra(const std::string& path) { return parse_algebra(read_file(path)); }

int cmd_check(const CompatAlgebra& a, Output& o) {
  IdentityReport j1 = check_jacobi(a.bracket1);
  IdentityReport j2 = check_jacobi(a.bracket2);
  o.kv("jacobi1", report_json(a, j1));
  o.kv("jacobi2", report_json(a, j2));
  bool ok = j1.holds && j2.holds;
  if (ok) {
    IdentityReport mx = check_compatibility(a);
    o.kv("mixed_jacobi", report_json(a, mx));
    ok = mx.holds;
  } else {
    o.kv("mixed_jacobi", "skipped: a bracket fails Jacobi");
  }
  o.kv("compatible", ok);
  return ok ? 0 : 1;
}

int cmd_series(const CompatAlgebra& a, Output& o) {
  SeriesResult lcs = lower_central_series(a);
  SeriesResult der = derived_series(a);
  o.kv("lower_central_dims", lcs.dims());
  o.kv("derived_dims", der.dims());
  o.kv("nilpotent", lcs.terms.back().is_zero());
  if (lcs.nilindex) o.kv("nilindex", *lcs.nilindex);
  o.kv("solvable", der.terms.back().is_zero());
  return 0;
}

json subspace_json(const CompatAlgebra& a, const Subspace& s) {
  json j;
  j["dim"] = s.dim();
  json basis = json::array();
  for (int r = 0; r < s.dim(); ++r) {
    QVec v = s.basis_vector(r);
    std::string row;
    for (int c = 0; c < s.ambient_dim(); ++c) {
      if (v[c].is_zero()) continue;
      if (!row.empty()) row += " + ";
      row += (v[c].is_one() ? "" : v[c].str() + "*") + a.label(c + 1);
    }
    basis.push_back(row.empty() ? "0" : row);
  }
  j["basis"] = basis;
  return j;
}

int cmd_center(const CompatAlgebra& a, Output& o) {
  o.kv("center", subspace_json(a, center(a)));
  return 0;
}

int cmd_derivations(const CompatAlgebra& a, bool diagonal, bool inner, Output& o) {
  if (inner) {
    o.kv("inner1_dim", inner_derivations(a.bracket1).size());
    o.kv("inner2_dim", inner_derivations(a.bracket2).size());
    o.kv("outer1_dim", outer_dimension(a.bracket1));
    o.kv("outer2_dim", outer_dimension(a.bracket2));
    return 0;
  }
  DerivationSpace d = compat_derivation_space(a);
  if (diagonal) {
    DerivationSpace t = diagonal_derivations(d);
    o.kv("diagonal_torus_dim", t.size());
    json mats = json::array();
    for (const auto& m : t.basis) {
      std::string diag;
      for (int i = 0; i < a.dim; ++i) diag += (i ? "," : "") + m.at(i, i).str();
      mats.push_back("diag(" + diag + ")");
    }
    o.kv("torus_basis", mats);
    return 0;
  }
  o.kv("der1_dim", derivation_space(a.bracket1).size());
  o.kv("der2_dim", derivation_space(a.bracket2).size());
  o.kv("compat_der_dim", d.size());
  o.kv("all_nilpotent", space_is_nil(d));
  return 0;
}

int cmd_cocycles(const CompatAlgebra& a, int psi_k, int psi_r, const std::string& pair_path,
                 Output& o) {
  if (psi_k > 0) {
    TwoCochain psi = make_psi(a.dim, psi_k, psi_r);
    bool ok = is_lie_2cocycle(a.bracket1, psi);
    o.kv("psi", "Psi_{" + std::to_string(psi_k) + "," + std::to_string(psi_r) + "}");
    Terms t = psi.product(psi_k, psi_k + 1);
    std::string val;
    for (const auto& [k, c] : t) val += (val.empty() ? "" : " + ") + c.str() + "*" + a.label(k);
    o.kv("psi_at_(e_k,e_k+1)", val.empty() ? "0" : val);
    o.kv("is_cocycle_for_bracket1", ok);
    return ok ? 0 : 1;
  }
  if (!pair_path.empty()) {
    CompatAlgebra pair = load_algebra(pair_path);
    if (pair.dim != a.dim) throw error("cochain pair dimension mismatch");
    bool ok = compat_2cocycle_pair(a, pair.bracket1, pair.bracket2);
    o.kv("pair_is_compat_2cocycle", ok);
    return ok ? 0 : 1;
  }
  o.kv("z2_bracket1_dim", lie_2cocycle_space(a.bracket1).dim());
  o.kv("z2_bracket2_dim", lie_2cocycle_space(a.bracket2).dim());
  o.kv("z2_compat_dim", compat_2cocycle_space(a).dim());
  return 0;
}

int cmd_pencil(const CompatAlgebra& a, const std::vector<std::string>& coefs, Output& o) {
  Scalar l1 = parse_scalar(coefs[0]), l2 = parse_scalar(coefs[1]);
  Scalar m1 = parse_scalar(coefs[2]), m2 = parse_scalar(coefs[3]);
  CompatAlgebra p = a;
  p.bracket1 = pencil(a, l1, l2);
  p.bracket2 = pencil(a, m1, m2);
  for (const Scalar* s : {&l1, &l2, &m1, &m2})
    for (const auto& name : s->parameters())
      if (std::find(p.parameters.begin(), p.parameters.end(), name) == p.parameters.end())
        p.parameters.push_back(name);
  IdentityReport j1 = check_jacobi(p.bracket1);
  IdentityReport j2 = check_jacobi(p.bracket2);
  o.kv("pencil1_jacobi", report_json(p, j1));
  o.kv("pencil2_jacobi", report_json(p, j2));
  bool ok = j1.holds && j2.holds;
  if (ok) {
    IdentityReport mx = check_compatibility(p);
    o.kv("pencil_mixed", report_json(p, mx));
    ok = mx.holds;
  }
  o.kv("pencil_compatible", ok);
  if (ok && p.is_parameter_free() && is_nilpotent(p)) o.kv("nilindex", nilindex(p));
  return ok ? 0 : 1;
}

json constraint_json(const CompatAlgebra& a, const Constraint& c) {
  json j;
  j["identity"] = c.prov.str(a.basis_labels);
  j["equation"] = c.eq.str();
  return j;
}

int cmd_constraints(const CompatAlgebra& a, Output& o) {
  ConstraintSet cs = extract_constraints(a);
  json eqs = json::array();
  for (const auto& c : cs.equations()) eqs.push_back(constraint_json(a, c));
  o.kv("equations", eqs);
  ConstraintSet red = reduce_constraints(cs);
  const char* status = red.status() == ConstraintSet::Status::solved        ? "solved"
                       : red.status() == ConstraintSet::Status::inconsistent ? "inconsistent"
                                                                             : "open";
  o.kv("status", status);
  json steps = json::array();
  for (const auto& s : red.assignments())
    steps.push_back(s.param + " := " + s.value.str() + "   [from " + s.from.str(a.basis_labels) + "]");
  o.kv("assignments", steps);
  if (red.status() == ConstraintSet::Status::inconsistent) {
    json contra = json::array();
    for (const auto& c : red.contradictions()) contra.push_back(constraint_json(a, c));
    o.kv("contradictions", contra);
  } else if (red.status() == ConstraintSet::Status::open) {
    json open = json::array();
    for (const auto& c : red.equations()) open.push_back(constraint_json(a, c));
    o.kv("open_equations", open);
  }
  return red.status() == ConstraintSet::Status::inconsistent ? 1 : 0;
}

int cmd_extend(const CompatAlgebra& a, const std::string& spec_path, const std::string& out_path,
               std::uint64_t seed, Output& o) {
  ExtensionSpec spec = parse_extension_spec(read_file(spec_path), a);
  IdentityReport cond = check_extension_conditions(spec);
  json cj;
  cj["holds"] = cond.holds;
  json ws = json::array();
  for (const auto& w : cond.witnesses)
    ws.push_back("[" + w.tag + "] pair (" + a.label(w.i) + "," + a.label(w.j) + ") coord " +
                 std::to_string(w.coord) + ": " + w.residual.str());
  cj["witnesses"] = ws;
  o.kv("extension_conditions", cj);
  if (!cond.holds) return 1;
  CompatAlgebra ext = build_semidirect(spec);
  o.kv("extension_dim", ext.dim);
  o.kv("compatible", true);  // build_semidirect verifies or throws
  if (ext.is_parameter_free()) {
    o.kv("solvable", is_solvable(ext));
    std::vector<QVec> nbasis;
    for (int i = 1; i <= a.dim; ++i) {
      QVec v(ext.dim, Rational(0));
      v[i - 1] = Rational(1);
      nbasis.push_back(std::move(v));
    }
    o.kv("base_is_special_nilradical",
         verify_nilradical(ext, Subspace::span(ext.dim, nbasis), seed));
  }
  if (!out_path.empty()) {
    write_file(out_path, serialize_algebra(ext));
    o.kv("written", out_path);
  }
  return 0;
}

int cmd_nonexistence(const CompatAlgebra& a, int rank, Output& o) {
  auto base = detect_generic_base(a);
  if (!base)
    throw error("nonexistence probes support the (L_n,R_n) and (L_n,W_n) bases only");
  int n = a.dim;
  o.kv("base", *base == GenericBase::LR ? "(L_n,R_n)" : "(L_n,W_n)");
  o.kv("rank", rank);
  if (rank == 1) {
    auto [alg, cs] = generic_extension(*base, n, 1);
    ConstraintSet red = reduce_constraints(cs);
    o.kv("constraint_count", cs.size());
    json eqs = json::array();
    for (const auto& c : cs.equations()) eqs.push_back(constraint_json(alg, c));
    o.kv("equations", eqs);
    const char* status = red.status() == ConstraintSet::Status::solved ? "solved"
                         : red.status() == ConstraintSet::Status::inconsistent ? "inconsistent"
                                                                               : "open";
    o.kv("status", status);
    o.kv("extension_exists", red.status() != ConstraintSet::Status::inconsistent);
    return 0;
  }
  NonexistenceCertificate cert = nonexistence_probe(*base, n);
  auto [alg, cs] = generic_extension(*base, n, 2);
  (void)cs;
  bool inconsistent = cert.reduced.status() == ConstraintSet::Status::inconsistent;
  o.kv("status", inconsistent ? "inconsistent" : "consistent");
  json contra = json::array();
  for (const auto& c : cert.contradictions) contra.push_back(constraint_json(alg, c));
  o.kv("obstructions", contra);
  o.kv("nonexistence_certified", inconsistent);
  return inconsistent ? 0 : 1;
}

CompatAlgebra family_by_name(const std::string& name, const std::string& narg) {
  auto need_n = [&narg]() {
    if (narg.empty()) throw error("this family needs a dimension argument");
    return std::stoi(narg);
  };
  if (name == "ln") return CompatAlgebra(need_n(), make_Ln(std::stoi(narg)), BracketTensor(std::stoi(narg)));
  if (name == "rn") return CompatAlgebra(need_n(), make_Rn(std::stoi(narg)), BracketTensor(std::stoi(narg)));
  if (name == "wn") return CompatAlgebra(need_n(), make_Wn(std::stoi(narg)), BracketTensor(std::stoi(narg)));
  if (name == "lr") return lr_pair(need_n());
  if (name == "lw") return lw_pair(need_n());
  if (name == "rw") return rw_pair(need_n());
  if (name == "ls") {
    if (narg.empty()) throw error("ls needs a comma-separated block list, e.g. 3,3");
    std::vector<int> vals;
    std::stringstream ss(narg);
    std::string tok;
    while (std::getline(ss, tok, ',')) vals.push_back(std::stoi(tok));
    return make_Ls(SeriesSpec(vals));
  }
  if (name == "t1") return make_extension_table(TheoremTable::LR_derL, need_n());
  if (name == "t2") return make_extension_table(TheoremTable::LR_derR, need_n());
  if (name == "t3") return make_extension_table(TheoremTable::LW_derL, need_n());
  if (name == "t4") return make_extension_table(TheoremTable::LW_derW, need_n());
  if (name == "t5") return make_extension_table(TheoremTable::LW_derN, need_n());
  return make_paper_example(name);
}

int cmd_report(const CompatAlgebra& a, std::uint64_t seed, Output& o) {
  IdentityReport j1 = check_jacobi(a.bracket1);
  IdentityReport j2 = check_jacobi(a.bracket2);
  o.kv("jacobi1_holds", j1.holds);
  o.kv("jacobi2_holds", j2.holds);
  bool compat = false;
  if (j1.holds && j2.holds) {
    compat = check_compatibility(a).holds;
    o.kv("compatible", compat);
  }
  if (!a.is_parameter_free()) {
    ConstraintSet cs = extract_constraints(a);
    o.kv("parametric", true);
    o.kv("constraint_count", cs.size());
    return 0;
  }
  SeriesResult lcs = lower_central_series(a);
  o.kv("lower_central_dims", lcs.dims());
  o.kv("derived_dims", derived_series(a).dims());
  bool nil = lcs.terms.back().is_zero();
  o.kv("nilpotent", nil);
  o.kv("solvable", is_solvable(a));
  o.kv("center_dim", center(a).dim());
  o.kv("der1_dim", derivation_space(a.bracket1).size());
  o.kv("der2_dim", derivation_space(a.bracket2).size());
  DerivationSpace d = compat_derivation_space(a);
  o.kv("compat_der_dim", d.size());
  o.kv("diagonal_torus_dim", diagonal_derivations(d).size());
  if (nil) {
    bool fil = is_filiform(a);
    o.kv("filiform", fil);
    if (fil) {
      try {
        AdaptedBasis ad = adapted_basis(a, seed);
        o.kv("adapted_series", ad.series.str());
        o.kv("adapted_swapped", ad.swapped);
      } catch (const error& e) {
        o.kv("adapted_series", std::string("failed: ") + e.what());
      }
    }
  }
  o.kv("seed", seed);
  return compat || (!j1.holds || !j2.holds) ? (j1.holds && j2.holds && compat ? 0 : 1) : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computer algebra for compatible Lie algebras"};
  app.require_subcommand(1);
  bool as_json = false;
  std::uint64_t seed = 0;
  app.add_flag("--json", as_json, "emit a machine-readable JSON dossier");
  app.add_option("--seed", seed, "seed for randomized witnesses (default 0)");

  std::string file, file2, out_path, narg, name;
  int psi_k = 0, psi_r = 0, rank = 1;
  bool diagonal = false, inner = false;
  std::vector<std::string> pencil_coefs;

  auto* c_check = app.add_subcommand("check", "Jacobi for both brackets plus the mixed identity");
  c_check->add_option("file", file)->required();
  auto* c_series = app.add_subcommand("series", "lower central and derived series");
  c_series->add_option("file", file)->required();
  auto* c_center = app.add_subcommand("center", "center of the dialgebra");
  c_center->add_option("file", file)->required();
  auto* c_der = app.add_subcommand("derivations", "derivation space dimensions");
  c_der->add_option("file", file)->required();
  c_der->add_flag("--diagonal", diagonal, "restrict to the diagonal torus");
  c_der->add_flag("--inner", inner, "inner derivations and outer dimensions");
  auto* c_coc = app.add_subcommand("cocycles", "2-cocycle tests and space dimensions");
  c_coc->add_option("file", file)->required();
  auto* popt = c_coc->add_option("--psi", [&psi_k, &psi_r](const CLI::results_t& res) {
    if (res.size() != 2) return false;
    psi_k = std::stoi(res[0]);
    psi_r = std::stoi(res[1]);
    return true;
  }, "test the adapted cocycle Psi_{k,r} against bracket1");
  popt->expected(2);
  c_coc->add_option("--pair", file2, "test another file's brackets as a cocycle pair");
  auto* c_pen = app.add_subcommand("pencil", "bracket pencil (l1 b1 + l2 b2, m1 b1 + m2 b2)");
  c_pen->add_option("file", file)->required();
  c_pen->add_option("coefficients", pencil_coefs, "l1 l2 m1 m2 (expressions)")->expected(4);
  auto* c_con = app.add_subcommand("constraints", "polynomial constraints of a parametric algebra");
  c_con->add_option("file", file)->required();
  auto* c_ext = app.add_subcommand("extend", "build and verify a semidirect extension");
  c_ext->add_option("file", file)->required();
  c_ext->add_option("--spec", file2, "extension spec file")->required();
  c_ext->add_option("-o,--output", out_path, "write the extension to a file");
  auto* c_non = app.add_subcommand("nonexistence", "generic-extension probe for (L_n,R_n)/(L_n,W_n)");
  c_non->add_option("file", file)->required();
  c_non->add_option("--rank", rank, "number of adjoined generators (1 or 2)");
  auto* c_fam = app.add_subcommand("families", "emit a named algebra as a file");
  c_fam->add_option("name", name, "ln rn wn lr lw rw ls t1..t5 example7 existcc existcc_r f1 f2")
      ->required();
  c_fam->add_option("n", narg, "dimension, or block list for ls");
  c_fam->add_option("-o,--output", out_path, "write to a file instead of stdout");
  auto* c_rep = app.add_subcommand("report", "full dossier for an algebra file");
  c_rep->add_option("file", file)->required();

  std::vector<std::string> argv_like = args;
  std::vector<const char*> argv;
  argv.push_back("compatlie");
  for (const auto& a : argv_like) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  Output o(out);
  o.as_json = as_json;
  try {
    int rc = 2;
    if (*c_fam) {
      CompatAlgebra a = family_by_name(name, narg);
      std::string text = serialize_algebra(a);
      if (out_path.empty())
        out << text;
      else {
        write_file(out_path, text);
        o.line("written: " + out_path);
        o.flush();
      }
      return 0;
    }
    CompatAlgebra a = load_algebra(file);
    if (*c_check) rc = cmd_check(a, o);
    else if (*c_series) rc = cmd_series(a, o);
    else if (*c_center) rc = cmd_center(a, o);
    else if (*c_der) rc = cmd_derivations(a, diagonal, inner, o);
    else if (*c_coc) rc = cmd_cocycles(a, psi_k, psi_r, file2, o);
    else if (*c_pen) rc = cmd_pencil(a, pencil_coefs, o);
    else if (*c_con) rc = cmd_constraints(a, o);
    else if (*c_ext) rc = cmd_extend(a, file2, out_path, seed, o);
    else if (*c_non) rc = cmd_nonexistence(a, rank, o);
    else if (*c_rep) rc = cmd_report(a, seed, o);
    o.flush();
    return rc;
  } catch (const parse_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const precondition_error& e) {
    err << "precondition failed: " << e.what() << "\n";
    return 1;
  } catch (const error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace compatlie
