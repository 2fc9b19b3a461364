#include <gtest/gtest.h>

#include <filesystem>
#include <map>
#include <sstream>

#include "gcok/cli.hpp"
#include "support.hpp"

using namespace gcok;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gcok_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string emit(const std::string& id) {
    std::ostringstream out, err;
    EXPECT_EQ(cli::cmd_catalog_emit(id, path(id + ".json"), out, err), cli::ok) << err.str();
    return path(id + ".json");
  }

  std::string write(const std::string& name, const std::string& text) {
    cli::write_file(path(name), text);
    return path(name);
  }

  int verify(const std::string& p, cli::Format format = cli::Format::text, std::optional<bool> twisted = {}) {
    out_.str("");
    err_.str("");
    return cli::cmd_verify(p, {format, twisted}, out_, err_);
  }

  std::map<std::string, bool> json_flags(const std::string& p) {
    EXPECT_LE(verify(p, cli::Format::json), 1);
    return json::parse(out_.str()).at("flags").get<std::map<std::string, bool>>();
  }

  fs::path dir_;
  std::ostringstream out_, err_;
};

// Parses the "flags:" block of a text report.
std::map<std::string, bool> text_flags(const std::string& report) {
  std::map<std::string, bool> out;
  std::istringstream in(report);
  std::string line;
  bool inside = false;
  while (std::getline(in, line)) {
    if (line == "flags:") {
      inside = true;
      continue;
    }
    if (!inside) continue;
    if (line.rfind("  ", 0) != 0) break;
    const auto colon = line.find(": ");
    out[line.substr(2, colon - 2)] = line.substr(colon + 2) == "true";
  }
  return out;
}

}  // namespace

TEST_F(Cli, VerifySuTwo) {
  const std::string p = emit("su2_normal_contact_metric");
  EXPECT_EQ(verify(p), cli::ok) << err_.str();
  const std::string report = out_.str();
  EXPECT_NE(report.find("cokahler: false"), std::string::npos) << report;
  EXPECT_NE(report.find("= -X3"), std::string::npos) << report;
  EXPECT_NE(report.find("verdict: ok"), std::string::npos);
}

TEST_F(Cli, VerifyPairingNormalization) {
  json doc = json::parse(cli::read_file(emit("s1_trivial")));
  doc["structure"]["e_minus"] = {{"vec", {"1"}}, {"form", {"0"}}};
  const std::string p = write("bad.json", doc.dump());
  EXPECT_EQ(verify(p), cli::axiom_failure);
  EXPECT_NE(out_.str().find("pairing normalization"), std::string::npos) << out_.str();
  EXPECT_NE(out_.str().find("[FAIL]"), std::string::npos);
}

TEST_F(Cli, VerifyMalformed) {
  const std::string text = cli::read_file(emit("su2_twisted"));
  EXPECT_EQ(verify(write("truncated.json", text.substr(0, text.size() / 2))), cli::malformed);
  EXPECT_FALSE(err_.str().empty());
  EXPECT_EQ(verify(path("missing.json")), cli::malformed);

  json doc = json::parse(text);
  doc["structure"]["phi"][0][0] = "1/0";
  EXPECT_EQ(verify(write("zero_den.json", doc.dump())), cli::malformed);
  EXPECT_NE(err_.str().find("/structure/phi/0/0"), std::string::npos) << err_.str();

  doc = json::parse(text);
  doc["frame"]["dim"] = 4;
  EXPECT_EQ(verify(write("dim.json", doc.dump())), cli::malformed);
}

TEST_F(Cli, TwistedFlag) {
  const std::string plain = emit("su2_normal_contact_metric");
  EXPECT_EQ(verify(plain, cli::Format::text, true), cli::malformed);
  const std::string twisted = emit("su2_twisted");
  EXPECT_EQ(verify(twisted, cli::Format::json, false), cli::ok);
  EXPECT_FALSE(json::parse(out_.str()).at("twisted").get<bool>());
  EXPECT_EQ(verify(twisted, cli::Format::json), cli::ok);
  EXPECT_TRUE(json::parse(out_.str()).at("twisted").get<bool>());
}

TEST_F(Cli, JsonAndTextAgree) {
  for (const auto& [id, description] : catalog_list()) {
    const std::string p = emit(id);
    const auto from_json = json_flags(p);
    verify(p);
    EXPECT_EQ(text_flags(out_.str()), from_json) << id;
  }
}

TEST_F(Cli, EmitThenVerify) {
  for (const auto& [id, description] : catalog_list()) {
    const std::string p = emit(id);
    EXPECT_EQ(verify(p), cli::ok) << id << "\n" << err_.str();
    EXPECT_EQ(json_flags(p), catalog_get(id).expected) << id;
  }
}

TEST_F(Cli, CatalogCommands) {
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_catalog_list(out), cli::ok);
  std::size_t lines = 0;
  std::istringstream in(out.str());
  for (std::string line; std::getline(in, line);) ++lines;
  EXPECT_GE(lines, 10u);
  EXPECT_EQ(cli::cmd_catalog_emit("no_such_entry", path("x.json"), out, err), cli::malformed);
  EXPECT_NE(err.str().find("unknown catalog id"), std::string::npos);
}

TEST_F(Cli, Product) {
  const std::string s1 = emit("s1_trivial");
  const std::string su2 = emit("su2_normal_contact_metric");
  const std::string t3 = emit("t3_cokahler_classical");
  std::ostringstream out, err;
  const cli::Options js{cli::Format::json, {}};

  EXPECT_EQ(cli::cmd_product(s1, s1, path("pair.json"), js, out, err), cli::ok) << err.str();
  json r = json::parse(out.str());
  EXPECT_TRUE(r.at("flags").at("generalized_kahler").get<bool>());
  const StructureDocument pair = cli::load(path("pair.json"));
  EXPECT_EQ(kind_of(pair.structure), "gcx_pair");
  EXPECT_EQ(pair.structure, catalog_get("product_t1xt1").payload);

  out.str("");
  EXPECT_EQ(cli::cmd_product(su2, s1, std::nullopt, js, out, err), cli::ok) << err.str();
  r = json::parse(out.str());
  EXPECT_FALSE(r.at("flags").at("generalized_kahler").get<bool>());
  EXPECT_TRUE(r.at("flags").at("integrable").get<bool>());
  EXPECT_FALSE(r.at("flags").at("j2_integrable").get<bool>());
  ASSERT_FALSE(r.at("witnesses").empty());
  EXPECT_EQ(r.at("witnesses")[0].at("name"), "J2: +i eigenbundle not involutive");
  EXPECT_NE(r.at("witnesses")[0].at("value").get<std::string>().find("-X3"), std::string::npos);

  out.str("");
  EXPECT_EQ(cli::cmd_product(t3, s1, std::nullopt, js, out, err), cli::ok) << err.str();
  EXPECT_TRUE(json::parse(out.str()).at("flags").at("generalized_kahler").get<bool>());

  EXPECT_EQ(cli::cmd_product(emit("t2_kahler"), s1, std::nullopt, js, out, err), cli::malformed);
}

TEST_F(Cli, BTransform) {
  const std::string su2 = emit("su2_normal_contact_metric");
  std::ostringstream out, err;
  const auto flags = json_flags(su2);

  const std::string zero = write("zero.json", R"({"dim": 3, "terms": []})");
  ASSERT_EQ(cli::cmd_btransform(su2, zero, path("b0.json"), out, err), cli::ok) << err.str();
  EXPECT_EQ(cli::load(path("b0.json")), cli::load(su2));

  for (const char* b : {R"([{"i": 1, "j": 2, "c": "1"}])", R"([{"i": 2, "j": 3, "c": "1"}])",
                        R"({"dim": 3, "terms": [{"i": 1, "j": 3, "c": "-2/3"}, {"i": 2, "j": 3, "c": "5"}]})"}) {
    const std::string bp = write("b.json", b);
    ASSERT_EQ(cli::cmd_btransform(su2, bp, path("out.json"), out, err), cli::ok) << b << err.str();
    EXPECT_NE(cli::load(path("out.json")), cli::load(su2)) << b;
    EXPECT_EQ(json_flags(path("out.json")), flags) << b;
  }

  EXPECT_EQ(cli::cmd_btransform(su2, write("bad.json", R"([{"i": 2, "j": 1, "c": "1"}])"), path("o.json"), out, err),
            cli::malformed);
  EXPECT_EQ(cli::cmd_btransform(su2, write("dim.json", R"({"dim": 4, "terms": []})"), path("o.json"), out, err),
            cli::malformed);
}

TEST_F(Cli, BTransformRejectsNonClosed) {
  // [X1, X2] = X2, [X1, X3] = X3: d(s2^s3) = -2 s1^s2^s3.
  const FrameContext f("book", 3, {{0, 1, 1, 1}, {0, 2, 2, 1}});
  const std::string p =
      write("book.json", io::serialize({"book", f, gac_from_acm(samples::standard_acm3())}));
  std::ostringstream out, err;
  EXPECT_EQ(cli::cmd_btransform(p, write("b.json", R"([{"i": 2, "j": 3, "c": "1"}])"), path("o.json"), out, err),
            cli::axiom_failure);
  EXPECT_NE(err.str().find("dB = "), std::string::npos) << err.str();
  EXPECT_FALSE(fs::exists(path("o.json")));
}
