#include "coble/report.hpp"

#include "doctest.h"
#include "json.hpp"

using namespace coble;

namespace {

VerificationReport sampleReport() {
  VerificationReport r;
  r.title = "sample";
  CheckResult a;
  a.id = "alpha";
  a.status = CheckStatus::Pass;
  a.ref = "origin";
  a.value("x", "3/4").value("y", "-2");
  r.add(a);
  CheckResult b;
  b.id = "beta";
  b.status = CheckStatus::Fail;
  b.ref = "origin";
  b.note = "off by one";
  r.add(b);
  CheckResult c;
  c.id = "gamma";
  c.status = CheckStatus::NotApplicable;
  c.ref = "elsewhere";
  r.add(c);
  return r;
}

}  // namespace

TEST_CASE("status names") {
  CHECK(statusName(CheckStatus::Pass) == "pass");
  CHECK(statusName(CheckStatus::Fail) == "fail");
  CHECK(statusName(CheckStatus::KnownDiscrepancy) == "known-discrepancy");
  CHECK(statusName(CheckStatus::NotApplicable) == "not-applicable");
}

TEST_CASE("pass accounting ignores non-failures") {
  VerificationReport r = sampleReport();
  CHECK(r.failCount() == 1);
  CHECK_FALSE(r.allPassed());
  r.checks[1].status = CheckStatus::KnownDiscrepancy;
  CHECK(r.failCount() == 0);
  CHECK(r.allPassed());
}

TEST_CASE("known-discrepancy table downgrades exactly its entries") {
  VerificationReport r = sampleReport();
  r.checks[0].status = CheckStatus::Fail;  // two failures now

  SUBCASE("matching ref and id") {
    applyKnownDiscrepancies(r, {{"origin", "beta"}});
    CHECK(r.checks[0].status == CheckStatus::Fail);
    CHECK(r.checks[1].status == CheckStatus::KnownDiscrepancy);
  }
  SUBCASE("id match with wrong ref does nothing") {
    applyKnownDiscrepancies(r, {{"elsewhere", "beta"}});
    CHECK(r.checks[1].status == CheckStatus::Fail);
  }
  SUBCASE("passing checks are never downgraded") {
    VerificationReport clean = sampleReport();
    applyKnownDiscrepancies(clean, {{"origin", "alpha"}});
    CHECK(clean.checks[0].status == CheckStatus::Pass);
  }
}

TEST_CASE("human rendering lists checks and values") {
  std::string text = renderHuman(sampleReport());
  CHECK(text.find("== sample ==") != std::string::npos);
  CHECK(text.find("[pass] alpha") != std::string::npos);
  CHECK(text.find("x = 3/4") != std::string::npos);
  CHECK(text.find("[fail] beta  (off by one)") != std::string::npos);
  CHECK(text.find("1 of 3 checks failed") != std::string::npos);

  VerificationReport ok = sampleReport();
  ok.checks[1].status = CheckStatus::Pass;
  CHECK(renderHuman(ok).find("all 3 checks passed") != std::string::npos);
}

TEST_CASE("machine rendering is valid json with the documented fields") {
  std::string text = renderMachine(sampleReport());
  auto doc = nlohmann::json::parse(text);
  CHECK(doc["report"] == "sample");
  CHECK(doc["passed"] == false);
  REQUIRE(doc["checks"].size() == 3);
  const auto& first = doc["checks"][0];
  CHECK(first["check"] == "alpha");
  CHECK(first["status"] == "pass");
  CHECK(first["paper_ref"] == "origin");
  CHECK(first["values"]["x"] == "3/4");
  CHECK(first["values"]["y"] == "-2");
  CHECK(doc["checks"][1]["note"] == "off by one");
}

TEST_CASE("machine rendering is byte-identical across calls") {
  CHECK(renderMachine(sampleReport()) == renderMachine(sampleReport()));
}

TEST_CASE("merge concatenates in order") {
  VerificationReport a = sampleReport();
  VerificationReport b = sampleReport();
  b.checks[0].id = "delta";
  a.merge(b);
  REQUIRE(a.checks.size() == 6);
  CHECK(a.checks[3].id == "delta");
}
