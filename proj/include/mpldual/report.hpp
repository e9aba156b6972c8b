#ifndef MPLDUAL_REPORT_HPP
#define MPLDUAL_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

namespace mpldual {

enum class Status { Pass, Fail, Inconclusive, UnsupportedDomain };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

/// Structured outcome of one identity check.  A FAIL always carries a concrete
/// witness reproducible from the echoed parameters.
struct VerificationReport {
  std::string check;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  Status status = Status::Pass;
  std::string residual;                                        // decimal string; empty if n/a
  nlohmann::ordered_json witness;                              // null if n/a
  nlohmann::ordered_json certificate;                          // null if n/a
  std::int64_t wall_ms = 0;

  nlohmann::ordered_json to_json() const;
  static VerificationReport from_json(const nlohmann::ordered_json& j);
  std::string human() const;
};

/// Validates the JSON-line schema of a report; returns an error message or "".
std::string validate_report_json(const nlohmann::ordered_json& j);

}  // namespace mpldual

#endif
