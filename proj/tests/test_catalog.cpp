#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "support.hpp"

using namespace gcok;

namespace {

bool listed(const std::string& id) {
  const auto l = catalog_list();
  return std::any_of(l.begin(), l.end(), [&](const auto& p) { return p.first == id; });
}

}  // namespace

TEST(CatalogList, RequiredEntries) {
  EXPECT_GE(catalog_list().size(), 10u);
  for (const char* id : {"s1_trivial", "t2_kahler", "t3_cokahler_classical", "su2_normal_contact_metric", "su2_twisted",
                         "su2_contact_nonstrong", "heisenberg_nonnormal", "product_t1xt1", "product_su2xs1",
                         "product_gk_gcok_t2xs1"})
    EXPECT_TRUE(listed(id)) << id;
}

TEST(CatalogList, StableAndUnique) {
  const auto a = catalog_list(), b = catalog_list();
  EXPECT_EQ(a, b);
  std::set<std::string> ids;
  for (const auto& [id, description] : a) {
    EXPECT_TRUE(ids.insert(id).second) << id;
    EXPECT_FALSE(description.empty()) << id;
  }
}

TEST(CatalogGet, UnknownId) { EXPECT_THROW(catalog_get("no_such_entry"), PreconditionFailure); }

TEST(CatalogGet, ExpectedRecords) {
  const auto& su2 = catalog_get("su2_normal_contact_metric").expected;
  EXPECT_TRUE(su2.at("strong"));
  EXPECT_TRUE(su2.at("normal"));
  EXPECT_FALSE(su2.at("gphi_strong"));
  EXPECT_FALSE(su2.at("cokahler"));
  EXPECT_TRUE(catalog_get("t3_cokahler_classical").expected.at("cokahler"));
  const auto& tw = catalog_get("su2_twisted").expected;
  EXPECT_TRUE(tw.at("strong"));
  EXPECT_FALSE(tw.at("gphi_strong"));
  EXPECT_TRUE(catalog_get("su2_twisted").twisted());
  EXPECT_FALSE(catalog_get("heisenberg_nonnormal").expected.at("classical_normal"));
}

// The master regression: every classifier reproduces the stored record.
TEST(CatalogEntry, SelfConsistent) {
  for (const auto& e : catalog()) {
    EXPECT_TRUE(check_frame(e.frame).valid()) << e.id;
    const Verification v = classify(e.frame, e.payload, e.twisted(), e.id);
    EXPECT_TRUE(v.ok()) << e.id;
    const auto flags = v.flag_map();
    for (const auto& [name, value] : e.expected) {
      ASSERT_TRUE(flags.count(name)) << e.id << " lacks " << name;
      EXPECT_EQ(flags.at(name), value) << e.id << ": " << name;
    }
    EXPECT_EQ(flags.size(), e.expected.size()) << e.id;
  }
}

TEST(CatalogEntry, RoundTrip) {
  for (const auto& e : catalog()) {
    const StructureDocument doc = e.document();
    const std::string text = io::serialize(doc);
    EXPECT_EQ(io::parse(text), doc) << e.id;
    EXPECT_EQ(io::serialize(io::parse(text)), text) << e.id;
  }
}

TEST(CatalogEntry, TwistedHField) {
  const nlohmann::json j = nlohmann::json::parse(io::serialize(catalog_get("su2_twisted").document()));
  const nlohmann::json h = j.at("h");
  ASSERT_EQ(h.size(), 1u);
  EXPECT_EQ(h[0].at("i"), 1);
  EXPECT_EQ(h[0].at("j"), 2);
  EXPECT_EQ(h[0].at("k"), 3);
  EXPECT_EQ(h[0].at("c"), "1");
}

TEST(CatalogEntry, Witnesses) {
  const auto& e = catalog_get("su2_normal_contact_metric");
  const Verification v = classify(e.frame, e.payload, false, e.id);
  ASSERT_FALSE(v.witnesses.empty());
  EXPECT_EQ(v.witnesses.front().name, "GPhi: L+ not involutive");
  EXPECT_NE(v.witnesses.front().value.find("= -X3"), std::string::npos) << v.witnesses.front().value;

  const auto& p = catalog_get("product_su2xs1");
  const Verification vp = classify(p.frame, p.payload, false, p.id);
  ASSERT_FALSE(vp.witnesses.empty());
  EXPECT_EQ(vp.witnesses.front().name, "J2: +i eigenbundle not involutive");
  EXPECT_NE(vp.witnesses.front().value.find("-X3"), std::string::npos) << vp.witnesses.front().value;
}

TEST(CatalogEntry, TriplesAreCompatible) {
  for (const auto& e : catalog())
    if (const auto t = as_triple(e)) {
      EXPECT_TRUE(check_gac(t->base).ok()) << e.id;
      EXPECT_TRUE(check_compat(*t)) << e.id;
    }
}

TEST(CatalogEntry, TwistedAndUntwistedE10Closure) {
  for (const auto& e : catalog()) {
    std::optional<GenAlmostContact> s;
    if (const auto t = as_triple(e)) s = t->base;
    if (const auto* g = std::get_if<GenAlmostContact>(&e.payload)) s = *g;
    if (!s) continue;
    for (bool use_h : {false, true}) {
      if (use_h && !e.frame.has_h()) continue;
      EXPECT_EQ(e10_closure_check(e.frame, *s, use_h).closed, classify_contact(e.frame, *s, use_h).strong()) << e.id;
    }
  }
}
