#include <gtest/gtest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <nlohmann/json.hpp>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const std::string kCli = F2COH_CLI_PATH;
const std::string kBundled = std::string(F2COH_RINGS_DIR) + "/su2_cubed_gamma.json";

struct Run {
  int code;
  std::string out;
};

// stdout only; stderr is discarded.
Run run(const std::string& args) {
  const std::string cmd = kCli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

class TempFile {
 public:
  explicit TempFile(const std::string& text) {
    path_ = fs::temp_directory_path() / ("f2coh_cli_" + std::to_string(::getpid()) + "_" +
                                         std::to_string(counter_++) + ".json");
    std::ofstream(path_) << text;
  }
  ~TempFile() { fs::remove(path_); }
  std::string path() const { return path_.string(); }

 private:
  fs::path path_;
  static inline int counter_ = 0;
};

json bundled() {
  std::ifstream in(kBundled);
  return json::parse(in);
}

const char* kFreeRing = R"({
  "truncation": 10,
  "rings": {"P": {"generators": [{"name": "x", "degree": 2}]}},
  "derivations": {"Z": {"ring": "P", "shift": 1, "values": {"x": "0"}}}
})";

TEST(Cli, HilbertOfBundledRing) {
  const auto r = run("hilbert " + kBundled + " --ring R2 --up-to 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1 0 2 2 3 3 7");
  EXPECT_NE(r.out.find(": match"), std::string::npos);
}

TEST(Cli, HilbertOfFreeRing) {
  TempFile f(kFreeRing);
  const auto r = run("hilbert " + f.path());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1 0 1 0 1 0 1 0 1 0 1\n");
}

TEST(Cli, JsonOutputParses) {
  const auto r = run("hilbert " + kBundled + " --ring R1 --up-to 12 --json");
  ASSERT_EQ(r.code, 0);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["ring"], "R1");
  EXPECT_EQ(j["coefficients"].size(), 13u);
  const auto v = json::parse(run("verify-paper " + kBundled + " --json").out);
  EXPECT_EQ(v["summary"]["fail"], 0);
}

TEST(Cli, VerifyCommandIsDeterministic) {
  const auto a = run("verify-paper " + kBundled);
  const auto b = run("verify-paper " + kBundled);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("summary: "), std::string::npos);
  EXPECT_EQ(a.out.find("FAIL"), std::string::npos);
}

TEST(Cli, FailedCheckExitsOne) {
  auto doc = bundled();
  doc["rings"]["R2"]["series"] = {{"numerator", {5}}, {"denominator", {2, 2, 3, 3, 16}}};
  TempFile f(doc.dump());
  const auto r = run("verify-paper " + f.path());
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("hilbert " + f.path() + " --ring R2").code, 1);
  EXPECT_EQ(run("hilbert " + f.path() + " --ring R1").code, 0);
}

TEST(Cli, MalformedInputExitsTwo) {
  auto doc = bundled();
  doc["rings"]["R2"]["relations"] = {"w3'^2*w3'' + w3''*w3'"};
  TempFile typo(doc.dump());
  EXPECT_EQ(run("verify-paper " + typo.path()).code, 2);
  TempFile broken("{\"rings\": [");
  EXPECT_EQ(run("hilbert " + broken.path()).code, 2);
  EXPECT_EQ(run("hilbert /nonexistent/file.json").code, 2);
  EXPECT_EQ(run("hilbert " + kBundled + " --ring R9").code, 2);
  EXPECT_EQ(run("hilbert " + kBundled).code, 2);
  EXPECT_EQ(run("hilbert " + kBundled + " --ring R2 --up-to 0").code, 2);
  EXPECT_EQ(run("frobnicate " + kBundled).code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, ZeroDerivationCohomologyIsTheRing) {
  TempFile f(kFreeRing);
  const auto j = json::parse(run("qcohomology " + f.path() + " --json").out);
  for (const auto& row : j["degrees"]) {
    if (row.contains("edge")) continue;
    EXPECT_EQ(row["cohomology"], row["dimension"]) << row.dump();
  }
}

TEST(Cli, FreeRingHasNoNilpotents) {
  TempFile f(kFreeRing);
  const auto r = run("nilradical " + f.path());
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("all slices zero"), std::string::npos);
}

TEST(Cli, NilpotencyOrders) {
  EXPECT_EQ(run("nilpotency " + kBundled + " --ring R2 --element g8 --up-to 48").out, "g8: order 2\n");
  EXPECT_EQ(run("nilpotency " + kBundled + " --ring R2 --element g7 --up-to 48").out, "g7: order 4\n");
  const auto g4 = run("nilpotency " + kBundled + " --ring R2 --element g4 --up-to 48");
  EXPECT_EQ(g4.code, 0);
  EXPECT_NE(g4.out.find("not witnessed"), std::string::npos);
}

TEST(Cli, SerreAndBocksteinAndMorphism) {
  const auto s = run("serre " + kBundled);
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.find("MISMATCH"), std::string::npos);
  EXPECT_EQ(run("bockstein " + kBundled + " --ring R2").code, 0);
  const auto m = json::parse(run("morphism " + kBundled + " --json").out);
  EXPECT_EQ(m["injective"], true);
}

}  // namespace
