#pragma once

#include <string>
#include <vector>

#include <json.hpp>

namespace pav {

// One verified sub-identity: a claim, exact witnesses, and the verdict.
struct CheckReport {
  std::string claim;
  bool pass = false;
  nlohmann::json witnesses;
};

struct VerifyReport {
  std::string name;
  std::vector<CheckReport> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  nlohmann::json to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks)
      arr.push_back({{"claim", c.claim}, {"pass", c.pass}, {"witnesses", c.witnesses}});
    return {{"name", name}, {"pass", pass()}, {"checks", arr}};
  }
};

}  // namespace pav
