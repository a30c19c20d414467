#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "idealspace/cli.hpp"
#include "idealspace/verdict.hpp"

namespace idealspace {
namespace {

using json = nlohmann::json;

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::execute(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::vector<json> lines(const std::string& s) {
  std::vector<json> out;
  std::istringstream is(s);
  std::string line;
  while (std::getline(is, line))
    if (!line.empty()) out.push_back(json::parse(line));
  return out;
}

TEST(Cli, VerifyMinimalIdealsOfZ2Cubed) {
  const CliRun r = run({"verify", "--ring", "Z2xZ2xZ2", "--kind", "min", "--check", "T03"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("holds"), std::string::npos);
  EXPECT_NE(r.out.find("⟨(1,0,0)⟩"), std::string::npos);
  EXPECT_NE(r.out.find("⟨(0,1,0)⟩"), std::string::npos);
  EXPECT_NE(r.out.find("⟨(0,0,1)⟩"), std::string::npos);
}

TEST(Cli, TopologyOfProperIdealsOfZ4) {
  const CliRun r = run({"topology", "--ring", "Z4", "--kind", "prp", "--props", "t0,t1,sober,connected", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const auto recs = lines(r.out);
  ASSERT_EQ(recs.size(), 4U);
  EXPECT_EQ(recs[0]["id"], "t0");
  EXPECT_EQ(recs[0]["status"], "holds");
  EXPECT_EQ(recs[1]["id"], "t1");
  EXPECT_EQ(recs[1]["status"], "fails");
  EXPECT_EQ(recs[2]["id"], "sober");
  EXPECT_EQ(recs[2]["status"], "holds");
  EXPECT_EQ(recs[3]["id"], "connected");
  EXPECT_EQ(recs[3]["status"], "holds");

  const CliRun text = run({"topology", "--ring", "Z4", "--kind", "prp", "--props", "t0,t1,sober,connected"});
  EXPECT_NE(text.out.find("t1         no"), std::string::npos) << text.out;
}

TEST(Cli, MalformedRing) {
  const CliRun r = run({"ring", "--ring", "Zx"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("ParseError"), std::string::npos);
}

TEST(Cli, UnknownNamesRejected) {
  EXPECT_EQ(run({"verify", "--ring", "Z6", "--kind", "foo"}).code, 2);
  EXPECT_EQ(run({"verify", "--ring", "Z6", "--check", "T99"}).code, 2);
  EXPECT_EQ(run({"topology", "--ring", "Z6", "--props", "hausdorff"}).code, 2);
  EXPECT_EQ(run({"verify", "--ring", "Z6", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
}

TEST(Cli, CapExceeded) {
  EXPECT_EQ(run({"ring", "--ring", "Z100"}).code, 3);
  EXPECT_EQ(run({"ideals", "--ring", "Z12", "--max-ideals", "3"}).code, 3);
  EXPECT_EQ(run({"topology", "--ring", "Z36", "--kind", "prp", "--max-closed-sets", "4"}).code, 3);
  EXPECT_EQ(run({"verify", "--ring", "Z36", "--kind", "prp", "--check", "T07", "--max-closed-sets", "4"}).code, 3);
}

TEST(Cli, TheoremFailureExitsOne) {
  const CliRun r = run({"verify", "--ring", "Z2xZ2xZ2", "--kind", "min", "--check", "T08"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("fails"), std::string::npos);
  // Counterexample reproductions report fails without a nonzero exit.
  EXPECT_EQ(run({"verify", "--ring", "Z36", "--kind", "prp", "--check", "T23"}).code, 0);
}

TEST(Cli, JsonRoundTrips) {
  const CliRun r = run({"verify", "--ring", "Z12", "--ring", "Z2xZ4", "--kind", "prp,spc", "--format", "json"});
  // Spc(Z12) carries known theorem-form failures, so the exit code is 1.
  EXPECT_EQ(r.code, 1);
  const auto recs = lines(r.out);
  EXPECT_FALSE(recs.empty());
  for (const auto& j : recs) {
    const auto rep = j.get<VerdictReport>();
    EXPECT_EQ(json(rep), j);
    for (const char* key : {"id", "anchor", "ring", "kind", "status", "witness", "runtime_ms"})
      EXPECT_TRUE(j.contains(key)) << key;
  }
}

TEST(Cli, AsciiRendering) {
  const CliRun r = run({"spectrum", "--ring", "Z12", "--kind", "spc", "--ascii"});
  EXPECT_NE(r.out.find("<3> <2>"), std::string::npos) << r.out;
  const CliRun u = run({"spectrum", "--ring", "Z12", "--kind", "spc"});
  EXPECT_NE(u.out.find("⟨3⟩ ⟨2⟩"), std::string::npos) << u.out;
}

TEST(Cli, OutFile) {
  const std::string path = ::testing::TempDir() + "idealspace_cli_out.json";
  const CliRun r = run({"ideals", "--ring", "Z12", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto recs = lines(ss.str());
  ASSERT_EQ(recs.size(), 6U);
  EXPECT_EQ(recs[1]["name"], "<6>");
  std::remove(path.c_str());
}

TEST(Cli, RingSummary) {
  const CliRun r = run({"ring", "--ring", "Z6", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  const json j = json::parse(r.out);
  EXPECT_EQ(j["units"], (std::vector<std::string>{"1", "5"}));
  EXPECT_EQ(j["idempotents"], (std::vector<std::string>{"0", "1", "3", "4"}));
  EXPECT_EQ(j["regular"], true);
}

TEST(Cli, Search) {
  const CliRun r = run({"search", "--check", "T03", "--kind", "prp", "--family", "zn:30..40", "--format", "json"});
  EXPECT_EQ(r.code, 0);
  bool z36 = false;
  for (const auto& j : lines(r.out)) z36 = z36 || j["ring"] == "Z36";
  EXPECT_TRUE(z36);
  EXPECT_EQ(run({"search", "--check", "T03", "--family", "bogus"}).code, 2);
}

TEST(Cli, RegistryTable) {
  const CliRun r = run({"verify", "--list"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| T01 |"), std::string::npos);
  EXPECT_NE(r.out.find("| T24 |"), std::string::npos);
}

TEST(Cli, Help) { EXPECT_EQ(run({"--help"}).code, 0); }

}  // namespace
}  // namespace idealspace
