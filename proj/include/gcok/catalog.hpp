#pragma once

// Named instances with their expected classification flags. The flag maps are
// written out by hand; tests re-run classify() and compare.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gcok/verify.hpp"

namespace gcok {

struct CatalogEntry {
  std::string id;
  std::string description;
  FrameContext frame;
  Payload payload;
  std::map<std::string, bool> expected;

  bool twisted() const { return frame.has_h(); }
  StructureDocument document() const { return {id, frame, payload}; }
};

namespace frames {

inline FrameContext abelian(std::string name, std::size_t n) { return FrameContext(std::move(name), n); }

/// [X1, X2] = -X3, [X2, X3] = -X1, [X3, X1] = -X2.
inline FrameContext su2() { return FrameContext("su2", 3, {{0, 1, 2, -1}, {1, 2, 0, -1}, {0, 2, 1, 1}}); }

/// su2 with H = s1 ^ s2 ^ s3.
inline FrameContext su2_twisted() {
  return su2().with_h(InvariantForm::monomial(3, {0, 1, 2}));
}

/// [X1, X2] = X3.
inline FrameContext heisenberg() { return FrameContext("heisenberg", 3, {{0, 1, 2, 1}}); }

}  // namespace frames

namespace samples {

inline Matrix m(std::initializer_list<std::initializer_list<Scalar>> rows) { return Matrix::from_rows(rows); }

/// phi = 0, xi = d/dt, eta = dt, g = 1.
inline ClassicalACM s1_acm() { return {Matrix(1, 1), {1}, {1}, m({{1}})}; }

/// phi X1 = X2, phi X2 = -X1, xi = X3, eta = s3, g = Id.
inline ClassicalACM standard_acm3() {
  return {m({{0, -1, 0}, {1, 0, 0}, {0, 0, 0}}), {0, 0, 1}, {0, 0, 1}, Matrix::identity(3)};
}

/// xi = X1, eta = s1, phi X2 = X3, phi X3 = -X2, g = Id.
inline ClassicalACM heisenberg_acm() {
  return {m({{0, 0, 0}, {0, 0, -1}, {0, 1, 0}}), {1, 0, 0}, {1, 0, 0}, Matrix::identity(3)};
}

/// J X1 = X2 on T2 with the flat metric.
inline Matrix t2_complex() { return m({{0, -1}, {1, 0}}); }

/// omega(X, Y) = g(X, J Y) = -s1 ^ s2.
inline InvariantForm t2_kahler_form() { return -Scalar(1) * InvariantForm::monomial(2, {0, 1}); }

inline GcxPair t2_kahler_pair() {
  const FrameContext t2 = frames::abelian("T2", 2);
  return {gcx_from_complex({t2_complex()}), gcx_from_symplectic(t2, {t2_kahler_form()})};
}

inline GcxPair product_pair(const FrameContext& a, const GenContactMetric& ta, const FrameContext& b,
                            const GenContactMetric& tb) {
  const ProductContext pc(a, b);
  return {product_J1(pc, ta.base, tb.base), product_J2(pc, ta, tb).j2};
}

}  // namespace samples

namespace detail {

inline std::map<std::string, bool> gacm_flags(bool cp, bool cm, bool normal, bool gphi, bool cokahler) {
  return {{"metric_ok", true}, {"compatible", true}, {"contact_plus", cp},  {"contact_minus", cm},
          {"strong", cp && cm}, {"normal", normal},  {"gphi_strong", gphi}, {"cokahler", cokahler}};
}

inline std::map<std::string, bool> gk_flags(bool j1, bool j2, bool gk) {
  return {{"almost", true},   {"integrable", j1},        {"j2_integrable", j2},
          {"commuting", true}, {"metric_positive", true}, {"generalized_kahler", gk}};
}

inline std::vector<CatalogEntry> build_catalog() {
  using namespace samples;
  const FrameContext s1 = frames::abelian("S1", 1);
  const FrameContext t2 = frames::abelian("T2", 2);
  const FrameContext t3 = frames::abelian("T3", 3);
  const FrameContext su2 = frames::su2();
  const GenContactMetric s1_triple = cokahler_triple(s1_acm());
  const GenContactMetric su2_triple = cokahler_triple(standard_acm3());

  std::vector<CatalogEntry> out;
  out.push_back({"s1_trivial", "trivial coKahler structure on the circle (phi = 0, xi = d/dt, eta = dt)", s1,
                 s1_triple, gacm_flags(true, true, true, true, true)});
  out.push_back({"t2_kahler", "flat Kahler torus as the pair (J_J, J_omega), omega = -s1^s2", t2, t2_kahler_pair(),
                 gk_flags(true, true, true)});

  auto t3_flags = gacm_flags(true, true, true, true, true);
  t3_flags.insert({{"classical_normal", true}, {"classical_cokahler", true}});
  out.push_back({"t3_cokahler_classical", "flat coKahler structure on T3 given by classical tensors", t3,
                 standard_acm3(), t3_flags});

  out.push_back({"su2_normal_contact_metric",
                 "normal contact metric structure on su(2); Phi strong and normal, G Phi not strong", su2, su2_triple,
                 gacm_flags(true, true, true, false, false)});
  out.push_back({"su2_twisted", "the su(2) structure under the bracket twisted by H = s1^s2^s3",
                 frames::su2_twisted(), su2_triple, gacm_flags(true, true, true, false, false)});
  out.push_back({"su2_contact_nonstrong", "structure built from the contact form s3 on su(2) (Reeb field X3)", su2,
                 gac_from_contact(su2, {0, 0, 1}, {0, 0, 1}),
                 {{"contact_plus", false}, {"contact_minus", true}, {"strong", false}, {"normal", false}}});

  auto heis_flags = gacm_flags(false, true, false, true, false);
  heis_flags.insert({{"classical_normal", false}, {"classical_cokahler", false}});
  out.push_back({"heisenberg_nonnormal", "non-normal almost contact metric structure on the Heisenberg frame (xi = X1)",
                 frames::heisenberg(), heisenberg_acm(), heis_flags});

  out.push_back({"product_t1xt1", "product of two trivial circles as the pair (J1, J2 = G J1)",
                 ProductContext(s1, s1).frame(), product_pair(s1, s1_triple, s1, s1_triple), gk_flags(true, true, true)});
  out.push_back({"product_su2xs1", "su(2) times the trivial circle; J1 integrable, J2 not",
                 ProductContext(su2, s1).frame(), product_pair(su2, su2_triple, s1, s1_triple),
                 gk_flags(true, false, false)});

  const GcxPair k = t2_kahler_pair();
  ProductStructure gk = product_gk_gcok(t2, k.j1, k.j2, s1, s1_triple);
  out.push_back({"product_gk_gcok_t2xs1", "generalized Kahler T2 times the trivial circle, as a contact metric structure",
                 gk.context.frame(), gk.structure, gacm_flags(true, true, true, true, true)});

  out.push_back({"su2_btransformed", "the su(2) structure transformed by the closed B-field s1^s2", su2,
                 bfield(su2, InvariantForm::monomial(3, {0, 1}), su2_triple), gacm_flags(true, true, true, false, false)});
  return out;
}

}  // namespace detail

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline std::vector<std::pair<std::string, std::string>> catalog_list() {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& e : catalog()) out.emplace_back(e.id, e.description);
  return out;
}

inline const CatalogEntry& catalog_get(const std::string& id) {
  for (const auto& e : catalog())
    if (e.id == id) return e;
  throw PreconditionFailure("unknown catalog id '" + id + "'");
}

/// The entry as a generalized almost contact structure, if it has one
/// (classical entries are lifted through cokahler_triple).
inline std::optional<GenContactMetric> as_triple(const CatalogEntry& e) {
  if (const auto* t = std::get_if<GenContactMetric>(&e.payload)) return *t;
  if (const auto* a = std::get_if<ClassicalACM>(&e.payload)) return cokahler_triple(*a);
  return std::nullopt;
}

}  // namespace gcok
