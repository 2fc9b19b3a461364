#pragma once

// One classifier for every document kind, plus text and JSON renderings of
// its report. Both renderings are produced from the same Verification value.

#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "gcok/document.hpp"

namespace gcok {

struct Witness {
  std::string name;
  std::string value;
};

struct Verification {
  std::string input;
  std::string kind;
  bool twisted = false;
  Report axioms;
  std::vector<std::pair<std::string, bool>> flags;
  std::vector<Witness> witnesses;

  bool ok() const { return axioms.ok(); }
  std::map<std::string, bool> flag_map() const { return {flags.begin(), flags.end()}; }
  std::optional<bool> flag(const std::string& name) const {
    for (const auto& [k, v] : flags)
      if (k == name) return v;
    return std::nullopt;
  }
};

namespace detail {

inline void note_closure(Verification& v, const std::string& name, const ClosureResult& r) {
  if (!r.closed && r.witness) v.witnesses.push_back({name, r.witness->str()});
}

inline void classify_gac(Verification& v, const FrameContext& f, const GenAlmostContact& s, bool use_h) {
  const NormalResult n = is_normal(f, s, use_h);
  v.flags.emplace_back("contact_plus", n.contact.plus.closed);
  v.flags.emplace_back("contact_minus", n.contact.minus.closed);
  v.flags.emplace_back("strong", n.contact.strong());
  v.flags.emplace_back("normal", n.normal);
  note_closure(v, "L+ not involutive", n.contact.plus);
  note_closure(v, "L- not involutive", n.contact.minus);
  if (!n.bracket.is_zero()) v.witnesses.push_back({"[[E+, E-]]", n.bracket.str()});
}

inline void classify_gacm(Verification& v, const FrameContext& f, const GenContactMetric& t, bool use_h) {
  const Report metric = check_metric(t.g);
  const Check compat = compat_check(t);
  v.axioms.append(metric);
  v.axioms.add(compat);
  v.flags.emplace_back("metric_ok", metric.ok());
  v.flags.emplace_back("compatible", compat.pass);
  classify_gac(v, f, t.base, use_h);
  if (!metric.ok() || !compat.pass) {
    v.flags.emplace_back("gphi_strong", false);
    v.flags.emplace_back("cokahler", false);
    return;
  }
  const CoKahlerResult ck = is_cokahler(f, t, use_h);
  v.flags.emplace_back("gphi_strong", ck.gphi.strong());
  v.flags.emplace_back("cokahler", ck.cokahler);
  note_closure(v, "GPhi: L+ not involutive", ck.gphi.plus);
  note_closure(v, "GPhi: L- not involutive", ck.gphi.minus);
}

inline void classify_gcx(Verification& v, const std::string& prefix, const GcxResult& r) {
  for (Check c : r.algebra.checks) {
    c.name = prefix + c.name;
    v.axioms.add(std::move(c));
  }
  if (r.kind == GcxKind::almost) note_closure(v, prefix + "+i eigenbundle not involutive", r.closure);
}

}  // namespace detail

/// Axiom checks, classification flags and witnesses for a payload on a frame.
inline Verification classify(const FrameContext& f, const Payload& p, bool use_h, std::string input = {}) {
  if (use_h && !f.has_h()) throw PreconditionFailure("twisted bracket requested but the frame carries no H");
  Verification v{std::move(input), kind_of(p), use_h, {}, {}, {}};
  const FrameReport fr = check_frame(f);
  Check frame_check{"frame: Jacobi identity and closed H", fr.valid(), {}};
  for (const auto& issue : fr.issues) frame_check.witness += (frame_check.witness.empty() ? "" : "; ") + issue;
  v.axioms.add(frame_check);
  if (!fr.valid()) return v;

  if (const auto* gac = std::get_if<GenAlmostContact>(&p)) {
    require_same_frame(f, gac->frame_dim(), "verify");
    v.axioms.append(check_gac(*gac));
    if (v.axioms.ok()) detail::classify_gac(v, f, *gac, use_h);
  } else if (const auto* t = std::get_if<GenContactMetric>(&p)) {
    require_same_frame(f, t->frame_dim(), "verify");
    v.axioms.append(check_gac(t->base));
    if (v.axioms.ok()) detail::classify_gacm(v, f, *t, use_h);
  } else if (const auto* j = std::get_if<GenAlmostComplex>(&p)) {
    require_same_frame(f, j->j.frame_dim(), "verify");
    const GcxResult r = check_gcx(f, j->j, use_h);
    detail::classify_gcx(v, "", r);
    v.flags.emplace_back("almost", r.kind != GcxKind::invalid);
    v.flags.emplace_back("integrable", r.kind == GcxKind::integrable);
  } else if (const auto* pair = std::get_if<GcxPair>(&p)) {
    require_same_frame(f, pair->j1.frame_dim(), "verify");
    require_same_frame(f, pair->j2.frame_dim(), "verify");
    const GKResult gk = is_generalized_kahler(f, pair->j1, pair->j2, use_h);
    detail::classify_gcx(v, "J1: ", gk.j1);
    detail::classify_gcx(v, "J2: ", gk.j2);
    v.flags.emplace_back("almost", gk.j1.kind != GcxKind::invalid && gk.j2.kind != GcxKind::invalid);
    v.flags.emplace_back("integrable", gk.j1.kind == GcxKind::integrable);
    v.flags.emplace_back("j2_integrable", gk.j2.kind == GcxKind::integrable);
    v.flags.emplace_back("commuting", gk.commuting.pass);
    v.flags.emplace_back("metric_positive", gk.metric.ok());
    v.flags.emplace_back("generalized_kahler", gk.generalized_kahler);
    if (!gk.commuting.pass) v.witnesses.push_back({"J1 J2 != J2 J1", gk.commuting.witness});
    if (const Check* c = gk.metric.first_failure()) v.witnesses.push_back({"-J1 J2: " + c->name, c->witness});
  } else {
    const auto& a = std::get<ClassicalACM>(p);
    require_same_frame(f, a.dim(), "verify");
    v.axioms.append(check_acm(a));
    if (!v.axioms.ok()) return v;
    const Check normal = nijenhuis_check(f, a);
    const Report ck = classical_cokahler(f, a);
    v.flags.emplace_back("classical_normal", normal.pass);
    v.flags.emplace_back("classical_cokahler", ck.ok());
    if (const Check* c = ck.first_failure()) v.witnesses.push_back({"classical: " + c->name, c->witness});
    const GenContactMetric t = cokahler_triple(a);
    v.axioms.append(check_gac(t.base));
    detail::classify_gacm(v, f, t, use_h);
  }
  return v;
}

inline Verification classify(const StructureDocument& doc, bool use_h) {
  return classify(doc.frame, doc.structure, use_h, doc.id);
}

inline std::string render_text(const Verification& v, const FrameContext& f) {
  std::ostringstream os;
  os << "input: " << (v.input.empty() ? "-" : v.input) << "\n";
  os << "frame: " << f.name() << " (dim " << f.dim() << ")" << (f.has_h() ? ", H = " + f.h()->str() : "") << "\n";
  os << "kind: " << v.kind << "\n";
  os << "twisted: " << (v.twisted ? "yes" : "no") << "\n";
  os << "axioms:\n";
  for (const auto& c : v.axioms.checks) {
    os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
    if (!c.pass && !c.witness.empty()) os << ": " << c.witness;
    os << "\n";
  }
  os << "flags:\n";
  for (const auto& [name, value] : v.flags) os << "  " << name << ": " << (value ? "true" : "false") << "\n";
  if (!v.witnesses.empty()) {
    os << "witnesses:\n";
    for (const auto& w : v.witnesses) os << "  " << w.name << ": " << w.value << "\n";
  }
  os << "verdict: " << (v.ok() ? "ok" : "axiom failure") << "\n";
  return os.str();
}

inline nlohmann::json render_json(const Verification& v, const FrameContext& f) {
  using nlohmann::json;
  json axioms = json::array();
  for (const auto& c : v.axioms.checks) {
    json a{{"name", c.name}, {"pass", c.pass}};
    if (!c.pass) a["witness"] = c.witness;
    axioms.push_back(a);
  }
  json flags = json::object();
  for (const auto& [name, value] : v.flags) flags[name] = value;
  json witnesses = json::array();
  for (const auto& w : v.witnesses) witnesses.push_back({{"name", w.name}, {"value", w.value}});
  json frame{{"name", f.name()}, {"dim", f.dim()}};
  if (f.has_h()) frame["h"] = f.h()->str();
  return {{"input", v.input},       {"frame", frame},         {"kind", v.kind},
          {"twisted", v.twisted},   {"axioms", axioms},       {"flags", flags},
          {"witnesses", witnesses}, {"verdict", v.ok() ? "ok" : "axiom failure"}};
}

}  // namespace gcok
