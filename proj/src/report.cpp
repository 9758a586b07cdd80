#include "rpa/report.hpp"

#include <nlohmann/json.hpp>

namespace rpa {

std::string Report::text() const {
  std::string out = "suite: " + suite + " (seed=" + std::to_string(seed) +
                    ", samples=" + std::to_string(samples) + ")\n";
  for (const auto& c : checks) {
    out += c.informational ? (c.pass ? "[info] " : "[INFO-FAIL] ")
                           : (c.pass ? "[PASS] " : "[FAIL] ");
    out += c.name;
    out += "\n";
    for (const auto& w : c.witness) out += "       " + w + "\n";
  }
  out += all_pass() ? "result: PASS\n" : "result: FAIL\n";
  return out;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["samples"] = samples;
  j["pass"] = all_pass();
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["status"] = c.pass ? "pass" : "fail";
    if (c.informational) jc["informational"] = true;
    if (!c.witness.empty()) jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  return j.dump(2) + "\n";
}

}  // namespace rpa
