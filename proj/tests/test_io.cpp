#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "compatlie/families.hpp"
#include "compatlie/filiform.hpp"
#include "compatlie/io.hpp"

using namespace compatlie;

TEST_CASE("parse/serialize round-trips bit-exactly on the corpus") {
  std::vector<CompatAlgebra> corpus{
      make_example7(),    make_existcc_N(),
      make_existcc_R(),   make_F1(),
      make_F2(),          lr_pair(7),
      lw_pair(9),         make_Ls(SeriesSpec({2, 2, 2})),
      make_extension_table(TheoremTable::LW_derN, 8),
      graded7_ansatz(),
  };
  for (const auto& a : corpus) {
    std::string text = serialize_algebra(a);
    CompatAlgebra back = parse_algebra(text);
    CHECK(back == a);
    CHECK(serialize_algebra(back) == text);
  }
}

TEST_CASE("empty bracket lists give the abelian algebra") {
  CompatAlgebra a = parse_algebra(R"({"dimension": 3})");
  CHECK(a.dim == 3);
  CHECK(a.bracket1.is_zero());
  CHECK(a.bracket2.is_zero());
  CHECK(a.basis_labels == std::vector<std::string>{"e1", "e2", "e3"});
}

TEST_CASE("file validation errors") {
  CHECK_THROWS_WITH_AS(
      parse_algebra(R"({"dimension": 2, "bracket1": [{"i":1,"j":2,"terms":[{"k":1,"c":"1/0"}]}]})"),
      doctest::Contains("1/0"), error);
  CHECK_THROWS_WITH_AS(
      parse_algebra(R"({"dimension": 2, "bracket1": [{"i":1,"j":2,"terms":[{"k":1,"c":"a"}]}]})"),
      "undeclared parameter: a", error);
  CHECK_THROWS_AS(
      parse_algebra(R"({"dimension": 2, "bracket1": [{"i":1,"j":3,"terms":[]}]})"), error);
  CHECK_THROWS_AS(
      parse_algebra(R"({"dimension": 2, "bracket1": [{"i":2,"j":1,"terms":[]}]})"), error);
  CHECK_THROWS_AS(
      parse_algebra(
          R"({"dimension": 2, "bracket1": [{"i":1,"j":2,"terms":[{"k":1,"c":"1"},{"k":1,"c":"2"}]}]})"),
      error);
  CHECK_THROWS_AS(parse_algebra(R"({"dimension": 2, "extra": 1})"), error);
  CHECK_THROWS_AS(parse_algebra("not json"), error);
  CHECK_THROWS_AS(parse_algebra(R"({"dimension": 0})"), error);
}

TEST_CASE("extension spec round-trip") {
  CompatAlgebra base = lr_pair(7);
  ExtensionSpec spec;
  spec.base = base;
  SMatrix d(7, 7);
  for (int i = 0; i < 7; ++i) d.at(i, i) = Scalar(i + 1);
  spec.generators.push_back({"x", d, SMatrix(7, 7)});
  std::string text = serialize_extension_spec(spec);
  ExtensionSpec back = parse_extension_spec(text, base);
  CHECK(back.generators.size() == 1);
  CHECK(back.generators[0].label == "x");
  for (int i = 0; i < 7; ++i) CHECK(back.generators[0].act1.at(i, i) == Scalar(i + 1));
}

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = std::string("cli_tmp_") + name;
  std::ofstream f(path);
  f << text;
  return path;
}

}  // namespace

TEST_CASE("cli: check and series") {
  std::string path = write_temp("example7.json", serialize_algebra(make_example7()));
  CliResult chk = cli({"check", path});
  CHECK(chk.code == 0);
  CHECK(chk.out.find("compatible: true") != std::string::npos);

  CliResult ser = cli({"series", path});
  CHECK(ser.code == 0);
  CHECK(ser.out.find("lower_central_dims: [7,5,4,4]") != std::string::npos);
  CHECK(ser.out.find("nilpotent: false") != std::string::npos);

  CliResult bad = cli({"check", "no_such_file.json"});
  CHECK(bad.code == 2);

  std::string rw = write_temp("rw12.json", serialize_algebra(rw_pair(12)));
  CHECK(cli({"check", rw}).code == 1);
}

TEST_CASE("cli: families round-trip and reports are deterministic") {
  CliResult fam = cli({"families", "wn", "7"});
  CHECK(fam.code == 0);
  CompatAlgebra w = parse_algebra(fam.out);
  CHECK(w.bracket1 == make_Wn(7));

  std::string path = write_temp("lr8.json", serialize_algebra(lr_pair(8)));
  CliResult r1 = cli({"report", path});
  CliResult r2 = cli({"report", path});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(r1.out.find("compat_der_dim: 9") != std::string::npos);

  CliResult json = cli({"--json", "report", path});
  CHECK(json.code == 0);
  CHECK(json.out.find("\"filiform\": true") != std::string::npos);
}

TEST_CASE("cli: derivations, cocycles, pencil, constraints") {
  std::string lr = write_temp("lr7.json", serialize_algebra(lr_pair(7)));
  CliResult der = cli({"derivations", lr});
  CHECK(der.out.find("der1_dim: 13") != std::string::npos);
  CHECK(der.out.find("der2_dim: 11") != std::string::npos);
  CHECK(der.out.find("compat_der_dim: 8") != std::string::npos);
  CliResult diag = cli({"derivations", lr, "--diagonal"});
  CHECK(diag.out.find("diagonal_torus_dim: 1") != std::string::npos);

  std::string l7 = write_temp("l7.json",
                              serialize_algebra(CompatAlgebra(7, make_Ln(7), BracketTensor(7))));
  CliResult coc = cli({"cocycles", l7, "--psi", "1", "4"});
  CHECK(coc.code == 0);
  CHECK(coc.out.find("is_cocycle_for_bracket1: true") != std::string::npos);

  CliResult pen = cli({"pencil", lr, "l1", "l2", "m1", "m2"});
  CHECK(pen.code == 0);
  CHECK(pen.out.find("pencil_compatible: true") != std::string::npos);

  std::string rw = write_temp("rw12b.json", serialize_algebra(rw_pair(12)));
  CliResult pen2 = cli({"pencil", rw, "l1", "l2", "0", "0"});
  CHECK(pen2.code == 1);

  std::string f2 = write_temp("f2.json", serialize_algebra(make_F2()));
  CliResult con = cli({"constraints", f2});
  CHECK(con.out.find("status:") != std::string::npos);
}

TEST_CASE("cli: nonexistence probes") {
  std::string lr = write_temp("lr7n.json", serialize_algebra(lr_pair(7)));
  CliResult r1 = cli({"nonexistence", lr, "--rank", "1"});
  CHECK(r1.code == 0);
  CHECK(r1.out.find("extension_exists: true") != std::string::npos);
  CliResult r2 = cli({"nonexistence", lr, "--rank", "2"});
  CHECK(r2.code == 0);
  CHECK(r2.out.find("nonexistence_certified: true") != std::string::npos);
  CHECK(r2.out.find("L(e2,e4,y).e6") != std::string::npos);

  std::string lw = write_temp("lw7n.json", serialize_algebra(lw_pair(7)));
  CliResult w2 = cli({"nonexistence", lw, "--rank", "2"});
  CHECK(w2.code == 0);
  CHECK(w2.out.find("L(e2,e3,x2).e5") != std::string::npos);

  std::string ex = write_temp("ex7.json", serialize_algebra(make_example7()));
  CHECK(cli({"nonexistence", ex, "--rank", "2"}).code == 2);
}

TEST_CASE("cli: extend") {
  CompatAlgebra base = lr_pair(7);
  ExtensionSpec spec;
  spec.base = base;
  SMatrix d(7, 7);
  for (int i = 0; i < 7; ++i) d.at(i, i) = Scalar(i + 1);
  spec.generators.push_back({"x", d, d});
  std::string spec_path = write_temp("spec.json", serialize_extension_spec(spec));
  std::string base_path = write_temp("lr7e.json", serialize_algebra(base));
  CliResult ext = cli({"extend", base_path, "--spec", spec_path, "-o", "cli_tmp_ext.json"});
  CHECK(ext.code == 0);
  CHECK(ext.out.find("base_is_special_nilradical: true") != std::string::npos);
  CompatAlgebra built = parse_algebra([] {
    std::ifstream f("cli_tmp_ext.json");
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
  }());
  CHECK(built.dim == 8);
}
