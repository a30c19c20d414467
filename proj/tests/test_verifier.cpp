#include <gtest/gtest.h>

#include <map>
#include <set>

#include "idealspace/verifier.hpp"
#include "support.hpp"

namespace idealspace {
namespace {

using testing::ring;
using json = nlohmann::json;

const std::vector<VerdictReport>& full_suite() {
  static const std::vector<VerdictReport> reports = [] {
    SuiteConfig cfg;
    cfg.rings = default_suite();
    cfg.kinds.assign(kAllKinds.begin(), kAllKinds.end());
    return run_suite(cfg);
  }();
  return reports;
}

TEST(Registry, TwentyFourChecksInOrder) {
  const auto reg = check_registry();
  ASSERT_EQ(reg.size(), 24U);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    const std::string id = (i + 1 < 10 ? "T0" : "T") + std::to_string(i + 1);
    EXPECT_EQ(reg[i].id, id);
    EXPECT_FALSE(reg[i].anchor.empty());
    EXPECT_EQ(reg[i].theorem_form, id != "T23" && id != "T24");
  }
  EXPECT_THROW(find_check("T99"), Error);
}

TEST(Registry, Applicability) {
  EXPECT_TRUE(applies("T11", SpectrumKind::Prp));
  EXPECT_TRUE(applies("T11", SpectrumKind::Irs));
  EXPECT_FALSE(applies("T11", SpectrumKind::Max));
  EXPECT_TRUE(applies("T23", SpectrumKind::Min));
  EXPECT_FALSE(applies("T23", SpectrumKind::Spc));
  EXPECT_TRUE(applies("T24", SpectrumKind::Prp));
  EXPECT_FALSE(applies("T24", SpectrumKind::Fgn));
  EXPECT_EQ(run_check("T24", make_zmod(6), SpectrumKind::Max).status, Status::vacuous);
}

TEST(RunCheck, MipEquivalenceOnMinimalIdeals) {
  const VerdictReport r = run_check("T03", ring("Z2xZ2xZ2"), SpectrumKind::Min);
  EXPECT_EQ(r.status, Status::holds);
  EXPECT_EQ(r.witness["mip"], false);
  EXPECT_EQ(r.witness["kuratowski"], false);
  EXPECT_EQ(r.witness["exhaustive"], false);
  EXPECT_EQ(r.witness["mip_witness"]["a"]["name"], "<(1,0,0)>");
  EXPECT_EQ(r.witness["mip_witness"]["b"]["name"], "<(0,1,0)>");
  EXPECT_EQ(r.witness["mip_witness"]["s"]["name"], "<(0,0,1)>");
  EXPECT_EQ(r.ring, "Z2xZ2xZ2");
  EXPECT_EQ(r.kind, "Min");
}

TEST(RunCheck, ZeroIdealGivesConnectedness) {
  const VerdictReport r = run_check("T16", make_zmod(12), SpectrumKind::Prp);
  EXPECT_EQ(r.status, Status::holds);
  EXPECT_EQ(r.witness["zero_in_X"], true);
}

TEST(RunCheck, ConverseOfConnectednessFailsOnLocalRing) {
  const VerdictReport r = run_check("T16", make_zmod(4), SpectrumKind::Max);
  EXPECT_EQ(r.status, Status::vacuous);
  EXPECT_EQ(r.witness["connected"], true);
  EXPECT_EQ(r.witness["zero_in_X"], false);
}

TEST(RunCheck, LocalizationHomeomorphismOnPrimes) {
  EXPECT_EQ(run_check("T21", make_zmod(12), SpectrumKind::Spc).status, Status::holds);
}

TEST(RunCheck, IdempotentFromMaximalIdealsOfZ6) {
  const VerdictReport r = run_check("T14", make_zmod(6), SpectrumKind::Max);
  EXPECT_EQ(r.status, Status::holds);
  EXPECT_EQ(r.witness["e"], "4");
  EXPECT_EQ(r.witness["one_minus_e"], "3");
}

TEST(RunCheck, ConverseOfIdempotentResultFails) {
  const VerdictReport r = run_check("T24", ring("Z6xZ6"), SpectrumKind::Prp);
  EXPECT_EQ(r.status, Status::fails);
  EXPECT_EQ(r.witness["a"]["name"], "<(1,0)>");
  EXPECT_EQ(r.witness["b"]["name"], "<(0,1)>");
  EXPECT_EQ(r.witness["uncovered"]["name"], "<(2,2)>");
  EXPECT_NE(r.notes.find("analog"), std::string::npos);
}

TEST(RunCheck, MipFailuresReproduced) {
  const VerdictReport a = run_check("T23", ring("Z2xZ2xZ2"), SpectrumKind::Min);
  EXPECT_EQ(a.status, Status::fails);
  for (SpectrumKind k : {SpectrumKind::Prp, SpectrumKind::Prn, SpectrumKind::Fgn, SpectrumKind::Rad}) {
    const VerdictReport r = run_check("T23", make_zmod(36), k);
    EXPECT_EQ(r.status, Status::fails);
    EXPECT_EQ(r.witness["a"]["name"], "<2>");
    EXPECT_EQ(r.witness["b"]["name"], "<3>");
    EXPECT_EQ(r.witness["s"]["name"], "<6>");
    EXPECT_NE(r.notes.find("analog"), std::string::npos);
  }
}

TEST(RunCheck, RegularRingOrderCriterionOnPrimes) {
  for (const auto& e : {"Z6", "Z2xZ2xZ2", "Z30"}) {
    const VerdictReport r = run_check("T06", ring(e), SpectrumKind::Spc);
    EXPECT_EQ(r.status, Status::holds) << e;
    EXPECT_EQ(r.witness["regular_ring"], true);
  }
}

TEST(RunCheck, EmptySpectrumIsVacuous) {
  for (const auto& c : check_registry()) {
    if (!applies(c.id, SpectrumKind::Reg)) continue;
    const VerdictReport r = run_check(c.id, make_zmod(6), SpectrumKind::Reg);
    EXPECT_EQ(r.status, Status::vacuous) << c.id;
  }
}

TEST(RunCheck, CapExceededBecomesError) {
  Limits l;
  l.max_points = 3;
  const VerdictReport r = run_check("T07", make_zmod(12), SpectrumKind::Prp, l);
  EXPECT_EQ(r.status, Status::error);
  EXPECT_NE(r.notes.find("CapExceeded"), std::string::npos);
}

// Per check, the statuses that occur across the default suite. Failures of
// theorem-form checks are limited to the classes traced to gaps in the
// source arguments.
TEST(Suite, StatusesPerCheck) {
  std::map<std::string, std::set<Status>> seen;
  for (const auto& r : full_suite()) seen[r.id].insert(r.status);
  const std::set<std::string> known_failures = {"T06", "T08", "T21", "T23", "T24"};
  for (const auto& c : check_registry()) {
    const auto& s = seen[std::string(c.id)];
    EXPECT_FALSE(s.count(Status::error)) << c.id;
    if (!known_failures.count(std::string(c.id))) EXPECT_FALSE(s.count(Status::fails)) << c.id;
  }
}

TEST(Suite, KnownFailureClasses) {
  for (const auto& r : full_suite()) {
    if (r.status != Status::fails) continue;
    if (r.id == "T08") {
      // T1 spaces whose points are not all maximal.
      EXPECT_EQ(r.witness["t1"], true);
      EXPECT_EQ(r.witness["subset_of_max"], false);
    } else if (r.id == "T06") {
      // Proper ideals with empty hull break the sandwich.
      EXPECT_TRUE(r.witness["failed"].contains("sandwich")) << r.ring << r.kind;
      EXPECT_TRUE(r.kind == "Min" || r.kind == "Nil" || r.kind == "Nip") << r.kind;
    } else if (r.id == "T21") {
      EXPECT_NE(r.kind, "Spc");
      EXPECT_NE(r.kind, "Max");
    }
  }
}

TEST(Suite, EveryCheckHasANonVacuousInstance) {
  std::map<std::string, std::size_t> live;
  for (const auto& r : full_suite())
    if (r.status == Status::holds || r.status == Status::fails) ++live[r.id];
  for (const auto& c : check_registry()) EXPECT_GT(live[std::string(c.id)], 0U) << c.id;
}

TEST(Suite, Ordering) {
  const auto& reports = full_suite();
  std::map<std::string, std::size_t> ring_pos;
  for (std::size_t i = 0; i < default_suite().size(); ++i) ring_pos[default_suite()[i]] = i;
  auto kind_pos = [](const std::string& k) {
    return std::find(kAllKinds.begin(), kAllKinds.end(), parse_kind(k)) - kAllKinds.begin();
  };
  for (std::size_t i = 1; i < reports.size(); ++i) {
    const auto& a = reports[i - 1];
    const auto& b = reports[i];
    const auto ka = std::tuple(ring_pos.at(a.ring), kind_pos(a.kind), a.id);
    const auto kb = std::tuple(ring_pos.at(b.ring), kind_pos(b.kind), b.id);
    EXPECT_LT(ka, kb);
  }
}

TEST(Suite, TheoremFormAgreements) {
  for (const auto& r : full_suite()) {
    if (r.id == "T03" || r.id == "T05" || r.id == "T10" || r.id == "T12" || r.id == "T13" || r.id == "T07" ||
        r.id == "T01" || r.id == "T11")
      EXPECT_NE(r.status, Status::fails) << r.id << " " << r.ring << " " << r.kind;
    if (r.id == "T16" && (r.kind == "Prp" || r.kind == "Fgn" || r.kind == "Prn"))
      EXPECT_EQ(r.status, Status::holds) << r.ring << " " << r.kind;
  }
}

TEST(Suite, Deterministic) {
  SuiteConfig cfg;
  cfg.rings = default_suite();
  cfg.kinds.assign(kAllKinds.begin(), kAllKinds.end());
  cfg.jobs = 3;
  const auto again = run_suite(cfg);
  EXPECT_EQ(again, full_suite());
}

TEST(Suite, EmptyRingList) {
  SuiteConfig cfg;
  cfg.kinds.assign(kAllKinds.begin(), kAllKinds.end());
  EXPECT_TRUE(run_suite(cfg).empty());
}

TEST(Suite, CapExceededIsIsolated) {
  SuiteConfig cfg;
  cfg.rings = {"Z128", "Z6"};
  cfg.kinds = {SpectrumKind::Spc};
  cfg.checks = {"T07"};
  const auto reports = run_suite(cfg);
  ASSERT_EQ(reports.size(), 2U);
  EXPECT_EQ(reports[0].status, Status::error);
  EXPECT_NE(reports[0].notes.find("CapExceeded"), std::string::npos);
  EXPECT_EQ(reports[1].status, Status::holds);
  EXPECT_EQ(reports[1].ring, "Z6");
}

TEST(Suite, TimingOnlyWhenAsked) {
  for (const auto& r : full_suite()) EXPECT_EQ(r.runtime_ms, 0.0);
}

TEST(Report, JsonRoundTrip) {
  for (const auto& r : full_suite()) {
    const json j = r;
    EXPECT_EQ(j.get<VerdictReport>(), r);
    EXPECT_EQ(json::parse(j.dump()).get<VerdictReport>(), r);
  }
}

TEST(Family, Expansion) {
  EXPECT_EQ(expand_family("zn:2..4"), (std::vector<std::string>{"Z2", "Z3", "Z4"}));
  EXPECT_EQ(expand_family("fields:2..12"), (std::vector<std::string>{"Z2", "Z3", "Z5", "Z7", "Z11"}));
  EXPECT_EQ(expand_family("prod:2..3"), (std::vector<std::string>{"Z2xZ2", "Z2xZ3", "Z3xZ3"}));
  EXPECT_EQ(expand_family("list:Z6;Z2xZ2"), (std::vector<std::string>{"Z6", "Z2xZ2"}));
  EXPECT_THROW(expand_family("zn"), Error);
  EXPECT_THROW(expand_family("foo:1..2"), Error);
}

TEST(Search, ProperIdealsOfZnUpTo40) {
  const std::vector<SpectrumKind> kinds{SpectrumKind::Prp};
  const auto res = search_counterexamples("T03", "zn:2..40", kinds);
  EXPECT_TRUE(res.errors.empty());
  bool found = false;
  for (const auto& h : res.hits) {
    if (h.ring != "Z36") continue;
    found = true;
    EXPECT_EQ(h.report.witness["a"]["name"], "<2>");
    EXPECT_EQ(h.report.witness["b"]["name"], "<3>");
    EXPECT_EQ(h.report.witness["s"]["name"], "<6>");
  }
  EXPECT_TRUE(found);
  for (std::size_t i = 1; i < res.hits.size(); ++i) EXPECT_LE(res.hits[i - 1].points, res.hits[i].points);
}

TEST(Search, StronglyIrreducibleNeverFails) {
  const std::vector<SpectrumKind> kinds{SpectrumKind::Irs};
  EXPECT_TRUE(search_counterexamples("T03", "zn:2..40", kinds).hits.empty());
  EXPECT_TRUE(search_counterexamples("T03", "prod:2..6", kinds).hits.empty());
}

TEST(Search, FieldsNeverFail) {
  for (const auto& c : check_registry()) {
    const auto res = search_counterexamples(c.id, "fields:2..31", {});
    EXPECT_TRUE(res.hits.empty()) << c.id;
    EXPECT_TRUE(res.errors.empty()) << c.id;
  }
}

}  // namespace
}  // namespace idealspace
