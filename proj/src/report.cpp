#include "gcalc/report.hpp"

#include <json.hpp>
#include <stdexcept>

namespace gcalc {

std::string to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["instances"] = report.instance_count;
  j["passed"] = report.pass_count;
  j["pass"] = report.pass();
  j["wall_ms"] = report.wall_ms;
  j["config"] = report.config;
  j["failures"] = nlohmann::json::array();
  for (const auto& f : report.failures)
    j["failures"].push_back({{"key", f.key}, {"expected", f.expected}, {"actual", f.actual}});
  return j.dump(2);
}

VerificationReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  VerificationReport r;
  r.suite = j.at("suite").get<std::string>();
  r.instance_count = j.at("instances").get<long long>();
  r.pass_count = j.at("passed").get<long long>();
  r.wall_ms = j.at("wall_ms").get<long long>();
  r.config = j.at("config").get<std::string>();
  for (const auto& f : j.at("failures"))
    r.failures.push_back({f.at("key").get<std::string>(), f.at("expected").get<std::string>(),
                          f.at("actual").get<std::string>()});
  return r;
}

}  // namespace gcalc
