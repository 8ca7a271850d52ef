#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pav/report.hpp"

namespace pav {

struct DemoReport {
  std::vector<VerifyReport> reports;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }
  nlohmann::json to_json() const;
  std::string render_text() const;
};

// The full pipeline: quotient types, kernel sizes, the kernel lemma, the
// dual-quotient identity, the pullback identities, the degree ledger and its
// obstruction, the isotropic plane census, bigonal genera, Prym duality
// numerics, and the moduli dimension counts. Deterministic in (seed, count).
DemoReport run_demo(std::uint64_t seed = 1, int count = 100, int jobs = 1);

}  // namespace pav
