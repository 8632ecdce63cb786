#pragma once

#include <string>
#include <utility>
#include <vector>

namespace coble {

enum class CheckStatus { Pass, Fail, KnownDiscrepancy, NotApplicable };

std::string statusName(CheckStatus s);

/// One named check with its exact computed values. Values are ordered
/// name/value string pairs; rationals are rendered exactly, never rounded.
struct CheckResult {
  std::string id;
  CheckStatus status = CheckStatus::Pass;
  std::string ref;  // which built-in scenario or input the check belongs to
  std::vector<std::pair<std::string, std::string>> values;
  std::string note;

  CheckResult& value(const std::string& name, const std::string& v) {
    values.emplace_back(name, v);
    return *this;
  }
};

struct VerificationReport {
  std::string title;
  std::vector<CheckResult> checks;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  void merge(const VerificationReport& other);
  bool allPassed() const;  // no check in Fail state
  std::size_t failCount() const;
};

/// Marks as known discrepancies the failing checks listed in the table
/// (pairs of report title and check id). Only those exact checks are
/// downgraded; every other failure stays a failure.
void applyKnownDiscrepancies(
    VerificationReport& report,
    const std::vector<std::pair<std::string, std::string>>& table);

/// Plain-text rendering, one line per check followed by its values.
std::string renderHuman(const VerificationReport& report);

/// Deterministic JSON rendering; identical input yields identical bytes.
/// Each check carries the fields {check, status, values, paper_ref}.
std::string renderMachine(const VerificationReport& report);

}  // namespace coble
