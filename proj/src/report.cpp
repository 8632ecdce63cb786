#include "coble/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace coble {

std::string statusName(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "pass";
    case CheckStatus::Fail:
      return "fail";
    case CheckStatus::KnownDiscrepancy:
      return "known-discrepancy";
    case CheckStatus::NotApplicable:
      return "not-applicable";
  }
  return "unknown";
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const CheckResult& c : other.checks) checks.push_back(c);
}

bool VerificationReport::allPassed() const { return failCount() == 0; }

std::size_t VerificationReport::failCount() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) {
        return c.status == CheckStatus::Fail;
      }));
}

void applyKnownDiscrepancies(
    VerificationReport& report,
    const std::vector<std::pair<std::string, std::string>>& table) {
  for (CheckResult& c : report.checks) {
    if (c.status != CheckStatus::Fail) continue;
    for (const auto& [ref, id] : table) {
      if (c.ref == ref && c.id == id) {
        c.status = CheckStatus::KnownDiscrepancy;
        break;
      }
    }
  }
}

std::string renderHuman(const VerificationReport& report) {
  std::ostringstream out;
  out << "== " << report.title << " ==\n";
  for (const CheckResult& c : report.checks) {
    out << "[" << statusName(c.status) << "] " << c.id;
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
    for (const auto& [name, value] : c.values)
      out << "    " << name << " = " << value << "\n";
  }
  std::size_t fails = report.failCount();
  if (fails == 0)
    out << "all " << report.checks.size() << " checks passed\n";
  else
    out << fails << " of " << report.checks.size() << " checks failed\n";
  return out.str();
}

std::string renderMachine(const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["report"] = report.title;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckResult& c : report.checks) {
    nlohmann::ordered_json entry;
    entry["check"] = c.id;
    entry["status"] = statusName(c.status);
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (const auto& [name, value] : c.values) values[name] = value;
    entry["values"] = values;
    entry["paper_ref"] = c.ref;
    if (!c.note.empty()) entry["note"] = c.note;
    doc["checks"].push_back(entry);
  }
  doc["passed"] = report.allPassed();
  return doc.dump(2) + "\n";
}

}  // namespace coble
