#pragma once

// Verification reports: ordered checks with status, detail and payload,
// rendered as aligned text or JSON. Output is deterministic.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace f2coh {

using OrderedJson = nlohmann::ordered_json;

enum class CheckStatus { kPass, kFail, kAssumed, kEdgeExcluded };

inline const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kAssumed: return "assumed";
    case CheckStatus::kEdgeExcluded: return "edge-excluded";
  }
  return "?";
}

struct Check {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  OrderedJson payload = OrderedJson::object();
  std::string note;
};

struct Report {
  std::string title;
  std::vector<Check> checks;

  Check& add(std::string name, bool ok, std::string detail, OrderedJson payload = OrderedJson::object()) {
    checks.push_back({std::move(name), ok ? CheckStatus::kPass : CheckStatus::kFail, std::move(detail),
                      std::move(payload), {}});
    return checks.back();
  }

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [s](const Check& c) { return c.status == s; }));
  }
  bool passed() const { return count(CheckStatus::kFail) == 0; }
  /// 0 when nothing failed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

inline std::string render_text(const Report& r) {
  std::size_t width = 0;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  std::ostringstream out;
  out << r.title << "\n";
  for (const auto& c : r.checks) {
    std::string status = status_name(c.status);
    std::transform(status.begin(), status.end(), status.begin(), [](unsigned char ch) { return std::toupper(ch); });
    out << "  " << status << std::string(15 - status.size(), ' ') << c.name
        << std::string(width - c.name.size() + 2, ' ') << c.detail << "\n";
    if (!c.note.empty()) out << std::string(17, ' ') << "note: " << c.note << "\n";
  }
  out << "summary: " << r.count(CheckStatus::kPass) << " pass, " << r.count(CheckStatus::kFail) << " fail, "
      << r.count(CheckStatus::kAssumed) << " assumed, " << r.count(CheckStatus::kEdgeExcluded)
      << " edge-excluded\n";
  return out.str();
}

inline OrderedJson to_json(const Report& r) {
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson j;
    j["name"] = c.name;
    j["status"] = status_name(c.status);
    j["detail"] = c.detail;
    if (!c.note.empty()) j["note"] = c.note;
    j["payload"] = c.payload;
    checks.push_back(std::move(j));
  }
  OrderedJson out;
  out["title"] = r.title;
  out["checks"] = std::move(checks);
  out["summary"] = {{"pass", r.count(CheckStatus::kPass)},
                    {"fail", r.count(CheckStatus::kFail)},
                    {"assumed", r.count(CheckStatus::kAssumed)},
                    {"edge-excluded", r.count(CheckStatus::kEdgeExcluded)}};
  return out;
}

inline std::string render_json(const Report& r) { return to_json(r).dump(2) + "\n"; }

}  // namespace f2coh
