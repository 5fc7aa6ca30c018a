#include "compatlie/io.hpp"

#include <json.hpp>

namespace compatlie {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown_fields(const json& obj, std::initializer_list<const char*> allowed,
                           const std::string& where) {
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed)
      if (key == a) ok = true;
    if (!ok) throw error("unknown field \"" + key + "\" in " + where);
  }
}

int get_index(const json& j, const char* field, int dim, const std::string& where) {
  if (!j.contains(field) || !j[field].is_number_integer())
    throw error("missing integer field \"" + std::string(field) + "\" in " + where);
  int v = j[field].get<int>();
  if (v < 1 || v > dim)
    throw error("index " + std::to_string(v) + " out of range in " + where);
  return v;
}

BracketTensor parse_bracket(const json& arr, int dim, const std::set<std::string>& declared,
                            const std::string& which) {
  if (!arr.is_array()) throw error(which + " must be an array of product records");
  BracketTensor b(dim);
  std::set<std::pair<int, int>> seen_pairs;
  for (const auto& rec : arr) {
    if (!rec.is_object()) throw error("product record must be an object in " + which);
    reject_unknown_fields(rec, {"i", "j", "terms"}, which + " product record");
    int i = get_index(rec, "i", dim, which);
    int j = get_index(rec, "j", dim, which);
    if (i >= j) throw error("product records require i < j in " + which);
    if (!seen_pairs.insert({i, j}).second)
      throw error("duplicate product record (" + std::to_string(i) + "," + std::to_string(j) +
                  ") in " + which);
    if (!rec.contains("terms") || !rec["terms"].is_array())
      throw error("product record needs a terms array in " + which);
    std::set<int> seen_k;
    for (const auto& term : rec["terms"]) {
      reject_unknown_fields(term, {"k", "c"}, which + " term");
      int k = get_index(term, "k", dim, which);
      if (!seen_k.insert(k).second)
        throw error("duplicate coordinate " + std::to_string(k) + " in product (" +
                    std::to_string(i) + "," + std::to_string(j) + ") of " + which);
      if (!term.contains("c") || !term["c"].is_string())
        throw error("coefficient must be an expression string in " + which);
      Scalar c;
      try {
        c = parse_scalar(term["c"].get<std::string>());
      } catch (const error& e) {
        throw error("bad coefficient \"" + term["c"].get<std::string>() + "\" in " + which +
                    ": " + e.what());
      }
      for (const auto& name : c.parameters())
        if (!declared.count(name)) throw error("undeclared parameter: " + name);
      b.add_term(i, j, k, c);
    }
  }
  return b;
}

json serialize_bracket(const BracketTensor& b) {
  json arr = json::array();
  for (const auto& [ij, terms] : b.stored()) {
    json rec;
    rec["i"] = ij.first;
    rec["j"] = ij.second;
    json ts = json::array();
    for (const auto& [k, c] : terms) {
      json t;
      t["k"] = k;
      t["c"] = c.str();
      ts.push_back(t);
    }
    rec["terms"] = ts;
    arr.push_back(rec);
  }
  return arr;
}

}  // namespace

CompatAlgebra parse_algebra(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("JSON syntax error: ") + e.what());
  }
  if (!doc.is_object()) throw error("algebra file must be a JSON object");
  reject_unknown_fields(doc, {"dimension", "basis", "parameters", "bracket1", "bracket2"},
                        "algebra file");
  if (!doc.contains("dimension") || !doc["dimension"].is_number_integer())
    throw error("missing integer field \"dimension\"");
  int dim = doc["dimension"].get<int>();
  if (dim < 1) throw error("dimension must be positive");

  std::vector<std::string> labels = default_labels(dim);
  if (doc.contains("basis")) {
    if (!doc["basis"].is_array() || int(doc["basis"].size()) != dim)
      throw error("basis must list one label per dimension");
    labels.clear();
    for (const auto& l : doc["basis"]) labels.push_back(l.get<std::string>());
  }
  std::vector<std::string> params;
  if (doc.contains("parameters")) {
    if (!doc["parameters"].is_array()) throw error("parameters must be an array of names");
    for (const auto& p : doc["parameters"]) params.push_back(p.get<std::string>());
  }
  std::set<std::string> declared(params.begin(), params.end());

  BracketTensor b1(dim), b2(dim);
  if (doc.contains("bracket1")) b1 = parse_bracket(doc["bracket1"], dim, declared, "bracket1");
  if (doc.contains("bracket2")) b2 = parse_bracket(doc["bracket2"], dim, declared, "bracket2");

  CompatAlgebra a(dim, b1, b2, params);
  a.basis_labels = labels;
  a.validate();
  return a;
}

std::string serialize_algebra(const CompatAlgebra& a) {
  json doc;
  doc["dimension"] = a.dim;
  doc["basis"] = a.basis_labels;
  doc["parameters"] = a.parameters;
  doc["bracket1"] = serialize_bracket(a.bracket1);
  doc["bracket2"] = serialize_bracket(a.bracket2);
  return doc.dump(2) + "\n";
}

ExtensionSpec parse_extension_spec(const std::string& text, const CompatAlgebra& base) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("JSON syntax error: ") + e.what());
  }
  reject_unknown_fields(doc, {"generators", "generator_bracket1", "generator_bracket2"},
                        "extension spec");
  ExtensionSpec spec;
  spec.base = base;
  if (!doc.contains("generators") || !doc["generators"].is_array())
    throw error("extension spec needs a generators array");
  int n = base.dim;
  std::set<std::string> declared(base.parameters.begin(), base.parameters.end());
  auto parse_matrix = [&](const json& m, const std::string& where) {
    if (!m.is_array() || int(m.size()) != n)
      throw error(where + " must be a " + std::to_string(n) + "x" + std::to_string(n) +
                  " matrix of expression strings");
    SMatrix out(n, n);
    for (int r = 0; r < n; ++r) {
      if (!m[r].is_array() || int(m[r].size()) != n) throw error(where + " has a malformed row");
      for (int c = 0; c < n; ++c) out.at(r, c) = parse_scalar(m[r][c].get<std::string>());
    }
    return out;
  };
  for (const auto& g : doc["generators"]) {
    reject_unknown_fields(g, {"label", "d1", "d2"}, "generator");
    ExtensionGenerator gen;
    gen.label = g.contains("label") ? g["label"].get<std::string>() : "";
    gen.act1 = g.contains("d1") ? parse_matrix(g["d1"], "d1") : SMatrix(n, n);
    gen.act2 = g.contains("d2") ? parse_matrix(g["d2"], "d2") : SMatrix(n, n);
    spec.generators.push_back(std::move(gen));
  }
  int r = int(spec.generators.size());
  int dim = n + r;
  auto parse_gen_products = [&](const char* field, std::map<std::pair<int, int>, Terms>* out) {
    if (!doc.contains(field)) return;
    for (const auto& rec : doc[field]) {
      reject_unknown_fields(rec, {"i", "j", "terms"}, field);
      int gi = get_index(rec, "i", r, field);
      int gj = get_index(rec, "j", r, field);
      if (gi >= gj) throw error(std::string(field) + " records require i < j");
      Terms terms;
      for (const auto& term : rec["terms"]) {
        int k = get_index(term, "k", dim, field);
        terms.emplace_back(k, parse_scalar(term["c"].get<std::string>()));
      }
      (*out)[{gi, gj}] = terms;
    }
  };
  parse_gen_products("generator_bracket1", &spec.gen_bracket1);
  parse_gen_products("generator_bracket2", &spec.gen_bracket2);
  return spec;
}

std::string serialize_extension_spec(const ExtensionSpec& spec) {
  json doc;
  json gens = json::array();
  int n = spec.base.dim;
  for (const auto& g : spec.generators) {
    json rec;
    rec["label"] = g.label;
    for (auto [name, m] : {std::pair<const char*, const SMatrix*>{"d1", &g.act1},
                           {"d2", &g.act2}}) {
      json rows = json::array();
      for (int r = 0; r < n; ++r) {
        json row = json::array();
        for (int c = 0; c < n; ++c) row.push_back(m->at(r, c).str());
        rows.push_back(row);
      }
      rec[name] = rows;
    }
    gens.push_back(rec);
  }
  doc["generators"] = gens;
  auto dump_products = [&doc](const char* field, const std::map<std::pair<int, int>, Terms>& prods) {
    if (prods.empty()) return;
    json arr = json::array();
    for (const auto& [gij, terms] : prods) {
      json rec;
      rec["i"] = gij.first;
      rec["j"] = gij.second;
      json ts = json::array();
      for (const auto& [k, c] : terms) {
        json t;
        t["k"] = k;
        t["c"] = c.str();
        ts.push_back(t);
      }
      rec["terms"] = ts;
      arr.push_back(rec);
    }
    doc[field] = arr;
  };
  dump_products("generator_bracket1", spec.gen_bracket1);
  dump_products("generator_bracket2", spec.gen_bracket2);
  return doc.dump(2) + "\n";
}

}  // namespace compatlie
