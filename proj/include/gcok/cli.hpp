#pragma once

// Command implementations behind the gcok executable. Each returns the process
// exit code: 0 ok, 1 axiom failure, 2 malformed input.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "gcok/catalog.hpp"

namespace gcok::cli {

enum Exit : int { ok = 0, axiom_failure = 1, malformed = 2 };

enum class Format { text, json };

struct Options {
  Format format = Format::text;
  std::optional<bool> twisted;  // unset: use H iff the frame carries one
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << text;
}

inline StructureDocument load(const std::string& path) {
  try {
    return io::parse(read_file(path));
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const Error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline bool use_h(const Options& o, const FrameContext& f) { return o.twisted.value_or(f.has_h()); }

inline void print(std::ostream& out, const Options& o, const Verification& v, const FrameContext& f) {
  if (o.format == Format::json)
    out << render_json(v, f).dump(2) << "\n";
  else
    out << render_text(v, f);
}

/// Runs body and maps library exceptions onto exit codes.
template <class Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return malformed;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << "\n";
    return malformed;
  } catch (const FrameMismatch& e) {
    err << "error: " << e.what() << "\n";
    return malformed;
  } catch (const PreconditionFailure& e) {
    err << "error: " << e.what() << "\n";
    return malformed;
  } catch (const AxiomFailure& e) {
    err << "axiom failure: " << e.what() << "\n";
    return axiom_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return axiom_failure;
  }
}

inline int cmd_verify(const std::string& path, const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StructureDocument doc = load(path);
    const Verification v = classify(doc.frame, doc.structure, use_h(o, doc.frame), doc.id.empty() ? path : doc.id);
    print(out, o, v, doc.frame);
    return v.ok() ? ok : axiom_failure;
  });
}

/// gacm documents pass through; classical_acm documents are lifted to their triple.
inline GenContactMetric as_gacm(const StructureDocument& doc, const std::string& path) {
  if (const auto* t = std::get_if<GenContactMetric>(&doc.structure)) return *t;
  if (const auto* a = std::get_if<ClassicalACM>(&doc.structure)) {
    detail::require(check_acm(*a), path);
    return cokahler_triple(*a);
  }
  throw ParseError(path + ": product expects a gacm or classical_acm document, found " + kind_of(doc.structure));
}

inline int cmd_product(const std::string& path_a, const std::string& path_b, const std::optional<std::string>& out_path,
                       const Options& o, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StructureDocument a = load(path_a), b = load(path_b);
    const GenContactMetric ta = as_gacm(a, path_a), tb = as_gacm(b, path_b);
    const Verification va = classify(a.frame, ta, use_h(o, a.frame), path_a);
    const Verification vb = classify(b.frame, tb, use_h(o, b.frame), path_b);

    const ProductContext pc(a.frame, b.frame);
    const std::string name = (a.id.empty() ? a.frame.name() : a.id) + " x " + (b.id.empty() ? b.frame.name() : b.id);
    Verification v{name, "product", use_h(o, pc.frame()), {}, {}, {}};
    for (const auto& [prefix, fv] : {std::pair{"first: ", &va}, std::pair{"second: ", &vb}})
      for (Check c : fv->axioms.checks) {
        c.name = prefix + c.name;
        v.axioms.add(std::move(c));
      }
    if (!v.ok()) {
      print(out, o, v, pc.frame());
      return axiom_failure;
    }
    v.flags.emplace_back("first_cokahler", *va.flag("cokahler"));
    v.flags.emplace_back("second_cokahler", *vb.flag("cokahler"));

    const GcxPair pair{product_J1(pc, ta.base, tb.base), product_J2(pc, ta, tb).j2};
    const Verification vp = classify(pc.frame(), pair, v.twisted, name);
    v.axioms.append(vp.axioms);
    v.flags.insert(v.flags.end(), vp.flags.begin(), vp.flags.end());
    v.witnesses = vp.witnesses;
    print(out, o, v, pc.frame());
    if (out_path) write_file(*out_path, io::serialize({name, pc.frame(), pair}));
    return v.ok() ? ok : axiom_failure;
  });
}

inline int cmd_btransform(const std::string& path, const std::string& bform_path, const std::string& out_path,
                          std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const StructureDocument doc = load(path);
    InvariantForm b(doc.frame.dim(), 2);
    try {
      b = io::two_form_from(nlohmann::json::parse(read_file(bform_path)), doc.frame.dim());
    } catch (const nlohmann::json::parse_error& e) {
      throw ParseError(bform_path + ": malformed JSON: " + e.what());
    } catch (const ParseError& e) {
      throw ParseError(bform_path + ": " + e.what());
    }
    if (const InvariantForm db = exterior_derivative(doc.frame, b); !db.is_zero()) {
      err << "axiom failure: B is not closed, dB = " << db.str() << "\n";
      return axiom_failure;
    }
    const Payload transformed = std::visit(
        [&](const auto& s) -> Payload {
          using T = std::decay_t<decltype(s)>;
          if constexpr (std::is_same_v<T, GcxPair>) {
            return GcxPair{bfield(doc.frame, b, s.j1), bfield(doc.frame, b, s.j2)};
          } else if constexpr (std::is_same_v<T, ClassicalACM>) {
            return bfield(doc.frame, b, as_gacm(doc, path));
          } else {
            return bfield(doc.frame, b, s);
          }
        },
        doc.structure);
    write_file(out_path, io::serialize({doc.id, doc.frame, transformed}));
    out << "wrote " << out_path << " (B = " << b.str() << ")\n";
    return ok;
  });
}

inline int cmd_catalog_list(std::ostream& out) {
  for (const auto& [id, description] : catalog_list()) out << id << "  " << description << "\n";
  return ok;
}

inline int cmd_catalog_emit(const std::string& id, const std::string& path, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    write_file(path, io::serialize(catalog_get(id).document()));
    out << "wrote " << path << "\n";
    return ok;
  });
}

}  // namespace gcok::cli
