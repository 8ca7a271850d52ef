#include "pav/json_io.hpp"

#include <fstream>

namespace pav {

namespace {

Rat rat_from_json(const nlohmann::json& j, const std::string& loc) {
  if (j.is_number_integer()) return Rat(Int(j.get<std::int64_t>()));
  if (j.is_string()) return parse_rat(j.get<std::string>(), loc);
  throw Error("ParseError", "expected an integer or a \"p/q\" string", loc);
}

Int int_from_json(const nlohmann::json& j, const std::string& loc) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    Rat r = parse_rat(j.get<std::string>(), loc);
    if (!is_integral(r)) throw Error("ParseError", "expected an integer", loc);
    return r.get_num();
  }
  throw Error("ParseError", "expected an integer", loc);
}

const nlohmann::json& need(const nlohmann::json& j, const char* key, const std::string& loc) {
  if (!j.is_object() || !j.contains(key))
    throw Error("ParseError", std::string("missing key \"") + key + "\"", loc);
  return j.at(key);
}

QMat qmat_from_json(const nlohmann::json& j, const std::string& loc) {
  if (!j.is_array() || j.empty()) throw Error("ParseError", "expected a matrix", loc);
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw Error("ParseError", "expected a matrix", loc);
  int cols = static_cast<int>(j[0].size());
  QMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error("ParseError", "ragged matrix", loc + "/" + std::to_string(i));
    for (int k = 0; k < cols; ++k)
      m(i, k) = rat_from_json(row[k], loc + "/" + std::to_string(i) + "/" + std::to_string(k));
  }
  return m;
}

IMat imat_from_json(const nlohmann::json& j, const std::string& loc) {
  if (!j.is_array() || j.empty()) throw Error("ParseError", "expected a matrix", loc);
  int rows = static_cast<int>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw Error("ParseError", "expected a matrix", loc);
  int cols = static_cast<int>(j[0].size());
  IMat m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    const auto& row = j[i];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error("ParseError", "ragged matrix", loc + "/" + std::to_string(i));
    for (int k = 0; k < cols; ++k)
      m(i, k) = int_from_json(row[k], loc + "/" + std::to_string(i) + "/" + std::to_string(k));
  }
  return m;
}

}  // namespace

nlohmann::json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("ParseError", "cannot open file", path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("ParseError", e.what(), path);
  }
  return j;
}

nlohmann::json lattice_to_json(const PolarizedLattice& p) {
  return {{"g", p.g()}, {"basis", json_qmat(p.basis())}, {"form", json_imat(p.form())}};
}

PolarizedLattice lattice_from_json(const nlohmann::json& j, const std::string& loc) {
  QMat basis = qmat_from_json(need(j, "basis", loc), loc + "/basis");
  IMat form = imat_from_json(need(j, "form", loc), loc + "/form");
  if (j.contains("g")) {
    Int g = int_from_json(j.at("g"), loc + "/g");
    if (g * 2 != basis.rows())
      throw Error("ParseError", "declared g does not match the basis size", loc + "/g");
  }
  try {
    return PolarizedLattice::make(basis, form);
  } catch (const Error& e) {
    throw Error(e.code, e.what(), loc);
  }
}

TorsionPoint point_from_json(const nlohmann::json& j, int n, const std::string& loc) {
  if (!j.is_array() || static_cast<int>(j.size()) != n)
    throw Error("ParseError", "expected a coordinate array of length " + std::to_string(n), loc);
  QVec v(n);
  for (int i = 0; i < n; ++i) v[i] = rat_from_json(j[i], loc + "/" + std::to_string(i));
  return reduce_point(std::move(v));
}

nlohmann::json point_to_json(const TorsionPoint& p) { return json_qvec(p.coords); }

FiniteSubgroup subgroup_from_json(const PolarizedLattice& owner, const nlohmann::json& j,
                                  const std::string& loc) {
  if (!j.is_array()) throw Error("ParseError", "expected a list of generators", loc);
  std::vector<TorsionPoint> gens;
  for (std::size_t i = 0; i < j.size(); ++i)
    gens.push_back(point_from_json(j[i], owner.n(), loc + "/" + std::to_string(i)));
  return make_subgroup(owner, gens);
}

nlohmann::json subgroup_to_json(const FiniteSubgroup& s) {
  nlohmann::json gens = nlohmann::json::array();
  for (const TorsionPoint& g : s.generators()) gens.push_back(point_to_json(g));
  return {{"generators", gens},
          {"order", json_int(s.order())},
          {"structure", json_ivec(s.structure())}};
}

PairContext context_from_json(const nlohmann::json& j, const std::string& loc) {
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s == "kernel") return PairContext::kernel();
    throw Error("ParseError", "context must be \"kernel\" or an integer m", loc);
  }
  if (j.is_number_integer()) {
    std::int64_t m = j.get<std::int64_t>();
    if (m < 1) throw Error("ParseError", "torsion context needs m >= 1", loc);
    return PairContext::torsion(Int(m));
  }
  throw Error("ParseError", "context must be \"kernel\" or an integer m", loc);
}

nlohmann::json isogeny_to_json(const Isogeny& f) {
  return {{"matrix", json_qmat(f.matrix)},
          {"degree", json_int(f.degree)},
          {"source", lattice_to_json(f.source)},
          {"target", lattice_to_json(f.target)}};
}

BranchedCover cover_from_json(const nlohmann::json& j, const std::string& loc) {
  int degree = 4;
  if (j.contains("degree")) {
    Int d = int_from_json(j.at("degree"), loc + "/degree");
    if (d < 1 || d > 16) throw Error("ParseError", "unsupported cover degree", loc + "/degree");
    degree = static_cast<int>(d.get_si());
  }
  const nlohmann::json& arr = need(j, "branch", loc);
  if (!arr.is_array()) throw Error("ParseError", "branch must be a list", loc + "/branch");
  std::vector<BranchPoint> branch;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    std::string bloc = loc + "/branch/" + std::to_string(i);
    const nlohmann::json& b = arr[i];
    const nlohmann::json& label = need(b, "label", bloc);
    const nlohmann::json& perm = need(b, "perm", bloc);
    if (!label.is_string() || !perm.is_string())
      throw Error("ParseError", "label and perm must be strings", bloc);
    branch.push_back(
        {label.get<std::string>(), Perm::parse_cycles(perm.get<std::string>(), degree)});
  }
  try {
    return make_cover(degree, std::move(branch));
  } catch (const Error& e) {
    throw Error(e.code, e.what(), loc);
  }
}

nlohmann::json cover_to_json(const BranchedCover& c) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BranchPoint& b : c.branch)
    arr.push_back({{"label", b.label}, {"perm", b.perm.to_cycles()}});
  return {{"degree", c.degree}, {"branch", arr}};
}

Scenario scenario_from_json(const nlohmann::json& j) {
  Scenario s;
  if (!j.is_object()) throw Error("ParseError", "expected a JSON object", "scenario");
  if (j.contains("basis"))
    s.lattice = lattice_from_json(j, "lattice");
  else if (j.contains("lattice"))
    s.lattice = lattice_from_json(j.at("lattice"), "lattice");
  int n = s.lattice ? s.lattice->n() : 8;
  auto read_gens = [&](const nlohmann::json& arr, const std::string& loc) {
    if (!arr.is_array()) throw Error("ParseError", "expected a list of generators", loc);
    std::vector<TorsionPoint> gens;
    for (std::size_t i = 0; i < arr.size(); ++i)
      gens.push_back(point_from_json(arr[i], n, loc + "/" + std::to_string(i)));
    return gens;
  };
  if (j.contains("subgroup")) s.subgroups["h"] = read_gens(j.at("subgroup"), "subgroup");
  if (j.contains("subgroups")) {
    const nlohmann::json& sub = j.at("subgroups");
    if (!sub.is_object()) throw Error("ParseError", "subgroups must be an object", "subgroups");
    for (const auto& [key, val] : sub.items())
      s.subgroups[key] = read_gens(val, "subgroups/" + key);
  }
  if (j.contains("towers")) {
    const nlohmann::json& tw = j.at("towers");
    if (!tw.is_object()) throw Error("ParseError", "towers must be an object", "towers");
    for (const auto& [key, val] : tw.items())
      s.towers.emplace(key, cover_from_json(val, "towers/" + key));
  }
  if (j.contains("x")) s.x = point_from_json(j.at("x"), n, "x");
  if (j.contains("y")) s.y = point_from_json(j.at("y"), n, "y");
  if (j.contains("context")) s.context = context_from_json(j.at("context"), "context");
  if (j.contains("seed")) {
    Int v = int_from_json(j.at("seed"), "seed");
    if (v < 0) throw Error("ParseError", "seed must be nonnegative", "seed");
    s.seed = static_cast<std::uint64_t>(v.get_ui());
  }
  if (j.contains("count")) {
    Int v = int_from_json(j.at("count"), "count");
    if (v < 1 || v > 1000000) throw Error("ParseError", "count out of range", "count");
    s.count = static_cast<int>(v.get_si());
  }
  if (j.contains("checks")) {
    const nlohmann::json& c = j.at("checks");
    if (!c.is_array()) throw Error("ParseError", "checks must be a list", "checks");
    for (const auto& name : c) {
      if (!name.is_string()) throw Error("ParseError", "check names must be strings", "checks");
      s.checks.push_back(name.get<std::string>());
    }
  }
  return s;
}

}  // namespace pav
