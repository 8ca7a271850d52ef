#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pav/covers.hpp"
#include "pav/isogeny.hpp"
#include "pav/json_base.hpp"
#include "pav/symplectic_f2.hpp"

namespace pav {

// Strict readers: unknown shapes, wrong dimensions, or malformed fractions
// raise ParseError with a JSON-pointer-ish location.

nlohmann::json load_json_file(const std::string& path);

// {"g": 4, "basis": [[...]], "form": [[...]]}; rational entries are numbers
// or reduced "p/q" strings, form entries integers.
nlohmann::json lattice_to_json(const PolarizedLattice& p);
PolarizedLattice lattice_from_json(const nlohmann::json& j, const std::string& loc = "lattice");

TorsionPoint point_from_json(const nlohmann::json& j, int n, const std::string& loc = "point");
nlohmann::json point_to_json(const TorsionPoint& p);

// Subgroups are stored as generator lists.
FiniteSubgroup subgroup_from_json(const PolarizedLattice& owner, const nlohmann::json& j,
                                  const std::string& loc = "subgroup");
nlohmann::json subgroup_to_json(const FiniteSubgroup& s);

// "kernel" or an integer m >= 1 (torsion context).
PairContext context_from_json(const nlohmann::json& j, const std::string& loc = "context");

nlohmann::json isogeny_to_json(const Isogeny& f);

// {"degree": 4, "branch": [{"label": "...", "perm": "(1 2)(3 4)"}]};
// degree defaults to 4.
BranchedCover cover_from_json(const nlohmann::json& j, const std::string& loc = "tower");
nlohmann::json cover_to_json(const BranchedCover& c);

struct Scenario {
  std::optional<PolarizedLattice> lattice;
  std::map<std::string, std::vector<TorsionPoint>> subgroups;  // raw generators
  std::map<std::string, BranchedCover> towers;
  std::optional<TorsionPoint> x, y;
  std::optional<PairContext> context;
  std::optional<std::uint64_t> seed;
  std::optional<int> count;
  std::vector<std::string> checks;
};

// Accepts either a bare lattice object (has "basis") or a full scenario
// (optional keys: lattice, subgroup, subgroups, towers, x, y, context, seed,
// count, checks).
Scenario scenario_from_json(const nlohmann::json& j);

}  // namespace pav
