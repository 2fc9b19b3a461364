#pragma once

// StructureDocument: the JSON file schema shared by the CLI and the catalog.
// Scalars travel as strings in the exact text form; frame indices are 1-based.

#include <json.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gcok/constructions.hpp"
#include "gcok/structures.hpp"

namespace gcok {

struct GcxPair {
  BigOperator j1;
  BigOperator j2;
  friend bool operator==(const GcxPair&, const GcxPair&) = default;
};

using Payload = std::variant<GenAlmostContact, GenContactMetric, GenAlmostComplex, GcxPair, ClassicalACM>;

inline std::string kind_of(const Payload& p) {
  switch (p.index()) {
    case 0: return "gac";
    case 1: return "gacm";
    case 2: return "gcx";
    case 3: return "gcx_pair";
    default: return "classical_acm";
  }
}

struct StructureDocument {
  std::string id;
  FrameContext frame;
  Payload structure;

  friend bool operator==(const StructureDocument&, const StructureDocument&) = default;
};

namespace io {

using nlohmann::json;

// ---- writing

inline json to_json(const Vector& v) {
  json out = json::array();
  for (const auto& s : v) out.push_back(s.str());
  return out;
}

inline json to_json(const Matrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(to_json(m.row(r)));
  return out;
}

inline json to_json(const GenSection& u) { return {{"vec", to_json(u.vec)}, {"form", to_json(u.form)}}; }

inline json terms_to_json(const InvariantForm& f) {
  json out = json::array();
  for (const auto& [mask, c] : f.terms()) {
    const auto idx = InvariantForm::indices(mask);
    out.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"k", idx[2] + 1}, {"c", c.str()}});
  }
  return out;
}

inline json structure_to_json(const Payload& p) {
  json s{{"kind", kind_of(p)}};
  if (const auto* gac = std::get_if<GenAlmostContact>(&p)) {
    s["phi"] = to_json(gac->phi.matrix());
    s["e_plus"] = to_json(gac->e_plus);
    s["e_minus"] = to_json(gac->e_minus);
  } else if (const auto* t = std::get_if<GenContactMetric>(&p)) {
    s["phi"] = to_json(t->base.phi.matrix());
    s["e_plus"] = to_json(t->base.e_plus);
    s["e_minus"] = to_json(t->base.e_minus);
    s["g"] = to_json(t->g.matrix());
  } else if (const auto* j = std::get_if<GenAlmostComplex>(&p)) {
    s["j"] = to_json(j->j.matrix());
  } else if (const auto* pair = std::get_if<GcxPair>(&p)) {
    s["j1"] = to_json(pair->j1.matrix());
    s["j2"] = to_json(pair->j2.matrix());
  } else {
    const auto& a = std::get<ClassicalACM>(p);
    s["phi"] = to_json(a.phi);
    s["xi"] = to_json(a.xi);
    s["eta"] = to_json(a.eta);
    s["g"] = to_json(a.g);
  }
  return s;
}

inline json to_json(const StructureDocument& doc) {
  json brackets = json::array();
  for (const auto& t : doc.frame.brackets())
    brackets.push_back({{"i", t.i + 1}, {"j", t.j + 1}, {"k", t.k + 1}, {"c", t.c.str()}});
  json out;
  if (!doc.id.empty()) out["id"] = doc.id;
  out["frame"] = {{"dim", doc.frame.dim()}, {"name", doc.frame.name()}, {"brackets", brackets}};
  if (doc.frame.has_h()) out["h"] = terms_to_json(*doc.frame.h());
  out["structure"] = structure_to_json(doc.structure);
  return out;
}

inline std::string serialize(const StructureDocument& doc) { return to_json(doc).dump(2) + "\n"; }

// ---- reading; every error names the JSON pointer where it happened

[[noreturn]] inline void fail(const std::string& where, const std::string& what) {
  throw ParseError("at " + (where.empty() ? std::string("/") : where) + ": " + what);
}

inline const json& field(const json& obj, const std::string& key, const std::string& where) {
  if (!obj.is_object()) fail(where, "expected an object");
  const auto it = obj.find(key);
  if (it == obj.end()) fail(where, "missing field '" + key + "'");
  return *it;
}

inline Scalar scalar_from(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where, "scalars must be strings in the exact text form");
  try {
    return Scalar::parse(v.get<std::string>());
  } catch (const ParseError& e) {
    fail(where, e.what());
  }
}

inline std::size_t index_from(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_number_integer()) fail(where, "expected a 1-based integer index");
  const auto k = v.get<long long>();
  if (k < 1 || static_cast<std::size_t>(k) > dim) fail(where, "index " + std::to_string(k) + " out of range 1.." + std::to_string(dim));
  return static_cast<std::size_t>(k - 1);
}

inline Vector vector_from(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array");
  if (v.size() != n) fail(where, "expected " + std::to_string(n) + " entries, found " + std::to_string(v.size()));
  Vector out;
  for (std::size_t k = 0; k < n; ++k) out.push_back(scalar_from(v[k], where + "/" + std::to_string(k)));
  return out;
}

inline Matrix matrix_from(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array()) fail(where, "expected an array of rows");
  if (v.size() != n) fail(where, "expected " + std::to_string(n) + " rows, found " + std::to_string(v.size()));
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < n; ++r) rows.push_back(vector_from(v[r], n, where + "/" + std::to_string(r)));
  return Matrix::from_rows(rows);
}

inline GenSection section_from(const json& v, std::size_t n, const std::string& where) {
  return {vector_from(field(v, "vec", where), n, where + "/vec"), vector_from(field(v, "form", where), n, where + "/form")};
}

inline BigOperator operator_from(const json& obj, const std::string& key, std::size_t n, const std::string& where) {
  return BigOperator(matrix_from(field(obj, key, where), 2 * n, where + "/" + key));
}

inline FrameContext frame_from(const json& doc) {
  const json& f = field(doc, "frame", "");
  const json& dim_v = field(f, "dim", "/frame");
  if (!dim_v.is_number_integer() || dim_v.get<long long>() < 1 || dim_v.get<long long>() > 32)
    fail("/frame/dim", "expected an integer in 1..32");
  const auto dim = static_cast<std::size_t>(dim_v.get<long long>());
  std::string name = "frame";
  if (const auto it = f.find("name"); it != f.end()) {
    if (!it->is_string()) fail("/frame/name", "expected a string");
    name = it->get<std::string>();
  }
  std::vector<BracketTerm> terms;
  if (const auto it = f.find("brackets"); it != f.end()) {
    if (!it->is_array()) fail("/frame/brackets", "expected an array");
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string at = "/frame/brackets/" + std::to_string(t);
      const json& b = (*it)[t];
      const auto i = index_from(field(b, "i", at), dim, at + "/i");
      const auto j = index_from(field(b, "j", at), dim, at + "/j");
      const auto k = index_from(field(b, "k", at), dim, at + "/k");
      if (i >= j) fail(at, "bracket terms require i < j");
      terms.push_back({i, j, k, scalar_from(field(b, "c", at), at + "/c")});
    }
  }
  std::optional<InvariantForm> h;
  if (const auto it = doc.find("h"); it != doc.end() && !it->is_null()) {
    if (!it->is_array()) fail("/h", "expected an array of {i, j, k, c}");
    InvariantForm form(dim, 3);
    for (std::size_t t = 0; t < it->size(); ++t) {
      const std::string at = "/h/" + std::to_string(t);
      const json& b = (*it)[t];
      const auto i = index_from(field(b, "i", at), dim, at + "/i");
      const auto j = index_from(field(b, "j", at), dim, at + "/j");
      const auto k = index_from(field(b, "k", at), dim, at + "/k");
      if (!(i < j && j < k)) fail(at, "three-form terms require i < j < k");
      form.add_term((1u << i) | (1u << j) | (1u << k), scalar_from(field(b, "c", at), at + "/c"));
    }
    h = std::move(form);
  }
  return FrameContext(std::move(name), dim, terms, std::move(h));
}

inline Payload structure_from(const json& doc, std::size_t n) {
  const std::string at = "/structure";
  const json& s = field(doc, "structure", "");
  const json& kind_v = field(s, "kind", at);
  if (!kind_v.is_string()) fail(at + "/kind", "expected a string");
  const std::string kind = kind_v.get<std::string>();
  if (kind == "gac" || kind == "gacm") {
    GenAlmostContact gac{operator_from(s, "phi", n, at), section_from(field(s, "e_plus", at), n, at + "/e_plus"),
                         section_from(field(s, "e_minus", at), n, at + "/e_minus")};
    if (kind == "gac") return gac;
    return GenContactMetric{std::move(gac), operator_from(s, "g", n, at)};
  }
  if (kind == "gcx") return GenAlmostComplex{operator_from(s, "j", n, at)};
  if (kind == "gcx_pair") return GcxPair{operator_from(s, "j1", n, at), operator_from(s, "j2", n, at)};
  if (kind == "classical_acm")
    return ClassicalACM{matrix_from(field(s, "phi", at), n, at + "/phi"), vector_from(field(s, "xi", at), n, at + "/xi"),
                        vector_from(field(s, "eta", at), n, at + "/eta"), matrix_from(field(s, "g", at), n, at + "/g")};
  fail(at + "/kind", "unknown kind '" + kind + "' (expected gac, gacm, gcx, gcx_pair or classical_acm)");
}

inline StructureDocument from_json(const json& doc) {
  if (!doc.is_object()) fail("", "expected a JSON object");
  std::string id;
  if (const auto it = doc.find("id"); it != doc.end()) {
    if (!it->is_string()) fail("/id", "expected a string");
    id = it->get<std::string>();
  }
  FrameContext frame = [&] {
    try {
      return frame_from(doc);
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      fail("/frame", e.what());
    }
  }();
  Payload p = structure_from(doc, frame.dim());
  return {std::move(id), std::move(frame), std::move(p)};
}

inline StructureDocument parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return from_json(doc);
}

/// B-field file: {"dim": n, "terms": [{"i", "j", "c"}]} or a bare term array.
inline InvariantForm two_form_from(const json& doc, std::size_t dim) {
  const json* terms = &doc;
  std::string at;
  if (doc.is_object()) {
    if (const auto it = doc.find("dim"); it != doc.end() && (!it->is_number_integer() || it->get<long long>() != static_cast<long long>(dim)))
      fail("/dim", "B lives on a frame of different dimension");
    terms = &field(doc, "terms", "");
    at = "/terms";
  }
  if (!terms->is_array()) fail(at, "expected an array of {i, j, c}");
  InvariantForm b(dim, 2);
  for (std::size_t t = 0; t < terms->size(); ++t) {
    const std::string here = at + "/" + std::to_string(t);
    const json& e = (*terms)[t];
    const auto i = index_from(field(e, "i", here), dim, here + "/i");
    const auto j = index_from(field(e, "j", here), dim, here + "/j");
    if (i >= j) fail(here, "two-form terms require i < j");
    b.add_term((1u << i) | (1u << j), scalar_from(field(e, "c", here), here + "/c"));
  }
  return b;
}

inline json two_form_to_json(const InvariantForm& b) {
  json terms = json::array();
  for (const auto& [mask, c] : b.terms()) {
    const auto idx = InvariantForm::indices(mask);
    terms.push_back({{"i", idx[0] + 1}, {"j", idx[1] + 1}, {"c", c.str()}});
  }
  return {{"dim", b.dim()}, {"terms", terms}};
}

}  // namespace io
}  // namespace gcok
