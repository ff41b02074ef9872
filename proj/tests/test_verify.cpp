#include <doctest.h>

#include <json.hpp>
#include <set>

#include "spinalg/ops.hpp"
#include "spinalg/verify.hpp"

using namespace spinalg;

TEST_CASE("registry") {
  const auto& checks = list_checks();
  std::set<std::string> ids;
  for (const auto& c : checks) {
    REQUIRE(ids.insert(c.id).second);
    REQUIRE(!c.paper_ref.empty());
    REQUIRE(std::find(suite_names().begin(), suite_names().end(), c.suite) != suite_names().end());
  }
  CHECK(std::is_sorted(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; }));
  CHECK(ids.count("SO-COM-AM"));
  CHECK(ids.count("APP-B-FINAL"));
  CHECK(ids.count("LRL-CONSERVED"));
  CHECK(find_check("CASIMIR-Q2") != nullptr);
  CHECK(find_check("NOPE") == nullptr);
  CHECK(find_check("JA-DOT")->only_d3);
}

TEST_CASE("run_check examples") {
  const CheckResult q2 = run_check("CASIMIR-Q2", 3);
  CHECK(q2.pass);
  CHECK(q2.residual.is_zero());
  CHECK(q2.term_count == 0);
  CHECK(run_check("LRL-CONSERVED", 2).pass);
  const CheckResult aa = run_check("SO-COM-AA", 4);
  CHECK(aa.pass);
  CHECK(aa.identities == 16);
  CHECK_THROWS_AS(run_check("NOPE", 3), std::invalid_argument);
  CHECK_THROWS_AS(run_check("JA-DOT", 4), std::domain_error);
  RunOptions with_oracle;
  with_oracle.oracle = true;
  const CheckResult jb = run_check("JB-DOT", 3, with_oracle);
  CHECK(jb.ok());
  REQUIRE(jb.oracle);
  CHECK(jb.oracle->identities == jb.identities);
}

TEST_CASE("suites") {
  const Report core = run_suite("core", 2);
  CHECK(core.checks.size() >= 12);
  for (const auto& c : core.checks)
    if (c.tier == Tier::Core) CHECK_MESSAGE(c.pass, c.id);
  CHECK(core.success(false));
  const Report d3 = run_suite("d3", 3);
  std::set<std::string> ids;
  for (const auto& c : d3.checks) ids.insert(c.id);
  CHECK(ids.count("JB-DOT"));
  CHECK(ids.count("JA-DOT"));
  CHECK(run_suite("d3", 4).checks.empty());
  CHECK_THROWS_AS(run_suite("bogus", 3), std::invalid_argument);
}

TEST_CASE("all checks at d = 5 have no Core failures") {
  const Report all = run_suite("all", 5, {}, 4);
  CHECK(all.success(false));
  int failed = 0;
  for (const auto& c : all.checks) {
    CHECK(c.error.empty());
    if (!c.pass) {
      ++failed;
      CHECK(c.tier == Tier::Transcription);
    }
  }
  CHECK(failed == all.failed);
  CHECK(all.passed + all.failed == static_cast<int>(all.checks.size()));
}

TEST_CASE("the printed [Gamma_i, Gamma_{d+1}] line differs by exactly 2 S_ij x_j") {
  for (int d = 2; d <= 5; ++d) {
    const CheckResult r = run_check("NONCLOSE-GIGD1", d);
    REQUIRE(!r.pass);
    CHECK(r.tier == Tier::Transcription);
    // first failing free index is i = 1
    OperatorExpr expected(d);
    for (int j = 1; j <= d; ++j) expected += build(d, "S", {1, j}) * OperatorExpr::x(d, j) * ParamPoly(2);
    CHECK(r.residual == expected);
  }
  const Report strict = run_suite("core", 3);
  CHECK(strict.success(false));
  CHECK(!strict.success(true));
}

TEST_CASE("reports are deterministic and independent of the job count") {
  RunOptions opts;
  opts.oracle = true;
  opts.crosscheck.trials = 3;
  const std::vector<Report> one{run_suite("sturm", 2, opts, 1)};
  const std::vector<Report> many{run_suite("sturm", 2, opts, 8)};
  CHECK(report_json(one, false) == report_json(many, false));
  CHECK(report_markdown(one, false) == report_markdown(many, false));
  CHECK(report_text(one, false) == report_text(many, false));
}

TEST_CASE("JSON report schema") {
  const std::vector<Report> reports{run_suite("core", 3)};
  const auto j = nlohmann::json::parse(report_json(reports, true));
  REQUIRE(j.is_object());
  CHECK(j["suite"] == "core");
  CHECK(j["version"] == kVersion);
  CHECK(j["d"] == 3);
  REQUIRE(j["checks"].is_array());
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "paperRef", "d", "tier", "pass", "identities", "residualTermCount", "residualText", "elapsedMs"})
      REQUIRE_MESSAGE(c.contains(key), key);
    if (!c["pass"].get<bool>()) CHECK(c.contains("failingIdentity"));
  }
  CHECK(j["summary"]["passed"].get<int>() + j["summary"]["failed"].get<int>() == static_cast<int>(j["checks"].size()));
  CHECK(!nlohmann::json::parse(report_json(reports, false))["checks"][0].contains("elapsedMs"));
  const std::vector<Report> two{run_suite("d3", 3), run_suite("d3", 3)};
  CHECK(nlohmann::json::parse(report_json(two)).is_array());
}
