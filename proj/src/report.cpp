#include "mpldual/report.hpp"

#include "mpldual/exact.hpp"

namespace mpldual {

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "INCONCLUSIVE";
    case Status::UnsupportedDomain: return "UNSUPPORTED-DOMAIN";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "INCONCLUSIVE") return Status::Inconclusive;
  if (s == "UNSUPPORTED-DOMAIN") return Status::UnsupportedDomain;
  throw domain_error("unknown status '" + s + "'");
}

nlohmann::ordered_json VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["check"] = check;
  j["params"] = params;
  j["status"] = to_string(status);
  if (!residual.empty()) j["residual"] = residual;
  if (!witness.is_null()) j["witness"] = witness;
  if (!certificate.is_null()) j["certificate"] = certificate;
  j["wall_ms"] = wall_ms;
  return j;
}

VerificationReport VerificationReport::from_json(const nlohmann::ordered_json& j) {
  VerificationReport r;
  r.check = j.at("check").get<std::string>();
  r.params = j.at("params");
  r.status = status_from_string(j.at("status").get<std::string>());
  if (j.contains("residual")) r.residual = j.at("residual").get<std::string>();
  if (j.contains("witness")) r.witness = j.at("witness");
  if (j.contains("certificate")) r.certificate = j.at("certificate");
  r.wall_ms = j.at("wall_ms").get<std::int64_t>();
  return r;
}

std::string VerificationReport::human() const {
  std::string line = "[" + to_string(status) + "] " + check;
  if (!params.empty()) line += " " + params.dump();
  if (!residual.empty()) line += " residual=" + residual;
  if (status == Status::Fail && !witness.is_null()) line += " witness=" + witness.dump();
  return line;
}

std::string validate_report_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) return "report is not a JSON object";
  for (const char* key : {"check", "params", "status", "wall_ms"})
    if (!j.contains(key)) return std::string("missing required key '") + key + "'";
  if (!j["check"].is_string()) return "'check' must be a string";
  if (!j["params"].is_object()) return "'params' must be an object";
  if (!j["status"].is_string()) return "'status' must be a string";
  const std::string s = j["status"].get<std::string>();
  if (s != "PASS" && s != "FAIL" && s != "INCONCLUSIVE" && s != "UNSUPPORTED-DOMAIN")
    return "invalid status value '" + s + "'";
  if (!j["wall_ms"].is_number()) return "'wall_ms' must be a number";
  if (j.contains("residual") && !j["residual"].is_string()) return "'residual' must be a string";
  if (s == "FAIL" && !j.contains("witness")) return "FAIL report lacks a witness";
  return "";
}

}  // namespace mpldual
