#pragma once

/**
 * @file report.hpp
 * @brief Certification records and their JSON / text serialization.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace okubo {

enum class Status { Pass, Fail, DiffRecorded };
/// Where an expected value comes from: stated in the source literature,
/// immediate from definitions, or computed by an independent oracle.
enum class Provenance { Published, Trivial, Derived };

std::string_view to_string(Status s);
std::string_view to_string(Provenance p);
std::optional<Status> parse_status(std::string_view s);
std::optional<Provenance> parse_provenance(std::string_view s);

struct Expected {
  std::string value;
  Provenance provenance = Provenance::Derived;
  bool operator==(const Expected&) const = default;
};

struct CheckReport {
  std::string check;       ///< unique id, e.g. "para-closure"
  std::string anchor;      ///< the claim being certified, in words
  std::string convention;  ///< Fano convention id
  Status status = Status::Fail;
  Expected expected;
  std::string actual;
  std::string details;
  bool operator==(const CheckReport&) const = default;
};

/// pass if ok, otherwise fail.
Status pass_if(bool ok);

enum class Format { Json, Text };
std::optional<Format> parse_format(std::string_view s);

/// Sorted by check id (stable for equal ids).
std::vector<CheckReport> sorted(std::vector<CheckReport> reports);
std::string serialize(const std::vector<CheckReport>& reports, Format f);
/// Inverse of serialize(..., Json); throws std::invalid_argument.
std::vector<CheckReport> parse_reports_json(std::string_view text);

/// 0 if nothing failed, 1 otherwise.
int exit_code_for(const std::vector<CheckReport>& reports);

}  // namespace okubo
