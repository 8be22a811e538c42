#include "okubo/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <stdexcept>

namespace okubo {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::DiffRecorded: return "diff-recorded";
  }
  return "fail";
}

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Published: return "published";
    case Provenance::Trivial: return "trivial";
    case Provenance::Derived: return "derived";
  }
  return "derived";
}

std::optional<Status> parse_status(std::string_view s) {
  for (Status v : {Status::Pass, Status::Fail, Status::DiffRecorded})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

std::optional<Provenance> parse_provenance(std::string_view s) {
  for (Provenance v : {Provenance::Published, Provenance::Trivial, Provenance::Derived})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

Status pass_if(bool ok) { return ok ? Status::Pass : Status::Fail; }

std::optional<Format> parse_format(std::string_view s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  return std::nullopt;
}

std::vector<CheckReport> sorted(std::vector<CheckReport> reports) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const CheckReport& a, const CheckReport& b) { return a.check < b.check; });
  return reports;
}

namespace {

using nlohmann::ordered_json;

ordered_json to_json(const CheckReport& r) {
  ordered_json j;
  j["check"] = r.check;
  j["anchor"] = r.anchor;
  j["convention"] = r.convention;
  j["status"] = to_string(r.status);
  j["expected"] = {{"value", r.expected.value}, {"provenance", to_string(r.expected.provenance)}};
  j["actual"] = r.actual;
  j["details"] = r.details;
  return j;
}

std::string field(const ordered_json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw std::invalid_argument(std::string("missing string field ") + key);
  return j[key].get<std::string>();
}

}  // namespace

std::string serialize(const std::vector<CheckReport>& reports, Format f) {
  const auto rs = sorted(reports);
  if (f == Format::Json) {
    ordered_json a = ordered_json::array();
    for (const auto& r : rs) a.push_back(to_json(r));
    return a.dump(2) + "\n";
  }
  std::string out;
  for (const auto& r : rs) {
    out += r.check + ": " + r.actual + " " + std::string(to_string(r.status));
    if (r.status != Status::Pass) out += " (expected " + r.expected.value + ")";
    out += "\n";
  }
  return out;
}

std::vector<CheckReport> parse_reports_json(std::string_view text) {
  ordered_json a;
  try {
    a = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(e.what());
  }
  if (!a.is_array()) throw std::invalid_argument("report stream must be a JSON array");
  std::vector<CheckReport> out;
  for (const auto& j : a) {
    CheckReport r;
    r.check = field(j, "check");
    r.anchor = field(j, "anchor");
    r.convention = field(j, "convention");
    const auto st = parse_status(field(j, "status"));
    if (!st) throw std::invalid_argument("bad status");
    r.status = *st;
    if (!j.contains("expected") || !j["expected"].is_object()) throw std::invalid_argument("missing expected");
    r.expected.value = field(j["expected"], "value");
    const auto pv = parse_provenance(field(j["expected"], "provenance"));
    if (!pv) throw std::invalid_argument("bad provenance");
    r.expected.provenance = *pv;
    r.actual = field(j, "actual");
    r.details = field(j, "details");
    out.push_back(std::move(r));
  }
  return out;
}

int exit_code_for(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Fail; })
             ? 1
             : 0;
}

}  // namespace okubo
