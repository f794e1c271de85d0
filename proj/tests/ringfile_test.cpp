#include <gtest/gtest.h>

#include <fstream>
#include <set>
#include <string>

#include "f2coh/ringfile.hpp"
#include "f2coh/verify.hpp"

namespace f2coh {
namespace {

const std::string kBundled = std::string(F2COH_RINGS_DIR) + "/su2_cubed_gamma.json";

Json bundled_json() {
  std::ifstream in(kBundled);
  return Json::parse(in);
}

TEST(RingFile, LoadsBundledFile) {
  const auto file = RingFile::load(kBundled);
  EXPECT_EQ(file.truncation(), 48);
  EXPECT_EQ(file.ring_names().size(), 5u);
  EXPECT_EQ(file.definition("R2").relations.size(), 2u);
  EXPECT_EQ(file.definition("R0").table, file.definition("R2").table);
  EXPECT_TRUE(file.definition("BSO3cubed").steenrod.has_value());
  EXPECT_EQ(file.derivation("Q0").axioms, std::vector<std::string>{"w16"});
  EXPECT_EQ(file.serre()->steps.size(), 5u);
  EXPECT_TRUE(file.serre()->steps.back().permanent);
}

TEST(RingFile, ResolvesNamesExpressionsAndMilnorReferences) {
  const auto file = RingFile::load(kBundled);
  const auto t = file.definition("R2").table;
  EXPECT_EQ(file.element("R2", "g4"), parse_polynomial("w2'*w2''", t));
  EXPECT_EQ(file.element("R2", "w2'^2"), parse_polynomial("w2'^2", t));
  const auto q0v2 = file.resolve("BSO3cubed", Json::parse(R"({"milnor": 0, "of": "v2"})"));
  EXPECT_EQ(q0v2, file.element("BSO3cubed", "v3"));
  EXPECT_THROW(file.resolve("R2", Json::parse(R"({"milnor": 0, "of": "g4"})")), ValidationError);
  EXPECT_THROW(file.element("R2", "x7"), ParseError);
  EXPECT_THROW(file.definition("R9"), ValidationError);
}

TEST(RingFile, RejectsTypoVariantOfRelation) {
  auto doc = bundled_json();
  doc["rings"]["R2"]["relations"] = {"w3'^2*w3'' + w3''*w3'"};
  EXPECT_THROW(RingFile{doc}, HomogeneityError);
}

TEST(RingFile, ReportsContextForBadExpressions) {
  auto doc = bundled_json();
  doc["rings"]["R1"]["relations"] = {"w2'*w5"};
  try {
    RingFile f{doc};
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("rings.R1.relations[0]"), std::string::npos) << msg;
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(RingFile, StructuralErrors) {
  EXPECT_THROW(RingFile::parse("{\"rings\": "), ParseError);
  EXPECT_THROW(RingFile::parse("[]"), ValidationError);
  EXPECT_THROW(RingFile::parse(R"({"rings": {}})"), ValidationError);
  EXPECT_THROW(RingFile::parse(R"({"rings": {"A": {"relations": []}}})"), ValidationError);
  EXPECT_THROW(RingFile::parse(R"({"rings": {"A": {"extends": "B"}, "B": {"extends": "A"}}})"), ValidationError);
  EXPECT_THROW(RingFile::parse(R"({"rings": {"A": {"generators": [{"name": "x", "degree": 0}]}}})"),
               ValidationError);
  EXPECT_THROW(RingFile::parse(R"({"rings": {"A": {"generators": [{"name": "x", "degree": 2}],
                                                    "elements": {"x": "x^2"}}}})"),
               ValidationError);
  EXPECT_THROW(RingFile::load("/nonexistent/ring.json"), InputError);
}

TEST(RingFile, RejectsBadSteenrodAndDerivationData) {
  auto doc = bundled_json();
  doc["rings"]["BSO3cubed"]["steenrod"]["w2'"] = {"w2'", "w3'", "0"};
  EXPECT_THROW(RingFile{doc}, ValidationError);
  doc = bundled_json();
  doc["derivations"]["Q0"]["values"]["w2'"] = "w2'";
  EXPECT_THROW(RingFile{doc}, HomogeneityError);
  doc = bundled_json();
  doc["derivations"]["Q0"]["axioms"] = {"w17"};
  EXPECT_THROW(RingFile{doc}, ValidationError);
  doc = bundled_json();
  doc["morphisms"]["eta"]["images"]["w3'"] = "u^2";
  EXPECT_THROW(RingFile{doc}, HomogeneityError);
  doc = bundled_json();
  doc["serre"]["steps"] = {"permanent", "v2"};
  EXPECT_THROW(RingFile{doc}, ValidationError);
}

TEST(RingFile, RingsAreCachedPerTruncation) {
  const auto file = RingFile::load(kBundled);
  EXPECT_EQ(file.ring("R2"), file.ring("R2"));
  EXPECT_NE(file.ring("R2"), file.ring("R2", 20));
  EXPECT_EQ(file.ring("R2", 20)->truncation(), 20);
}

class BundledVerification : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    file = new RingFile(bundled_json());
    report = new Report(verify_file(*file, "bundled"));
  }
  static void TearDownTestSuite() {
    delete report;
    delete file;
  }
  static inline RingFile* file = nullptr;
  static inline Report* report = nullptr;
};

TEST_F(BundledVerification, AllChecksPassWithThreeAssumed) {
  for (const auto& c : report->checks)
    EXPECT_NE(c.status, CheckStatus::kFail) << c.name << ": " << c.detail;
  EXPECT_EQ(report->count(CheckStatus::kAssumed), 3u);
  EXPECT_EQ(report->exit_code(), 0);
}

TEST_F(BundledVerification, EveryCheckAppearsOnce) {
  std::set<std::string> names;
  for (const auto& c : report->checks) EXPECT_TRUE(names.insert(c.name).second) << c.name;
}

TEST_F(BundledVerification, RenderingIsDeterministicAndJsonRoundTrips) {
  const auto again = verify_file(*file, "bundled");
  EXPECT_EQ(render_text(*report), render_text(again));
  EXPECT_EQ(render_json(*report), render_json(again));
  const auto parsed = OrderedJson::parse(render_json(*report));
  EXPECT_EQ(parsed.dump(2) + "\n", render_json(*report));
  EXPECT_EQ(parsed["checks"].size(), report->checks.size());
  for (const auto& c : parsed["checks"]) {
    EXPECT_TRUE(c["name"].is_string());
    EXPECT_TRUE(c["status"].is_string());
    EXPECT_TRUE(c["payload"].is_object());
  }
  EXPECT_EQ(parsed["summary"]["assumed"], 3);
}

TEST(Verification, OmittingG8FailsAtDegreeEight) {
  auto doc = bundled_json();
  doc["verify"]["nilradical"]["generators"] = {"g7"};
  const RingFile file{doc};
  const auto report = verify_file(file, "modified");
  EXPECT_EQ(report.exit_code(), 1);
  bool found = false;
  for (const auto& c : report.checks) {
    if (c.status != CheckStatus::kFail) continue;
    found = true;
    EXPECT_NE(c.name.find("nilradical"), std::string::npos);
    EXPECT_EQ(c.payload["first_mismatch"], 8);
    EXPECT_NE(c.detail.find("nilradical dim 1, ideal dim 0"), std::string::npos) << c.detail;
  }
  EXPECT_TRUE(found);
}

TEST(Verification, WrongExpectedSeriesFails) {
  auto doc = bundled_json();
  doc["serre"]["pages"][2] = {{"numerator", Json::array()}, {"denominator", {2, 2, 3, 3, 8}}};
  const RingFile file{doc};
  const auto report = verify_file(file, "modified");
  EXPECT_EQ(report.count(CheckStatus::kFail), 1u);
}

}  // namespace
}  // namespace f2coh
