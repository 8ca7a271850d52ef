#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "pav/demo.hpp"
#include "pav/json_io.hpp"

namespace {

using namespace pav;

nlohmann::json error_json(const Error& e) {
  return {{"code", e.code}, {"message", e.what()}, {"location", e.location}};
}

void print(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

PolarizedLattice scenario_lattice(const Scenario& s) {
  if (!s.lattice) throw Error("ParseError", "scenario does not define a lattice", "lattice");
  return *s.lattice;
}

FiniteSubgroup scenario_subgroup(const Scenario& s, const PolarizedLattice& p,
                                 const std::string& key) {
  auto it = s.subgroups.find(key);
  if (it == s.subgroups.end())
    throw Error("ParseError", "scenario does not define subgroup \"" + key + "\"", "subgroups");
  return make_subgroup(p, it->second);
}

// Order-4 isotropic span(e1/2, e2/2) on the standard principal lattice.
FiniteSubgroup default_h(const PolarizedLattice& x) {
  QVec a(x.n(), Rat(0)), b(x.n(), Rat(0));
  a[0] = Rat(1, 2);
  b[1] = Rat(1, 2);
  return make_subgroup(x, {reduce_point(a), reduce_point(b)});
}

int finish_report(const VerifyReport& r, bool as_json) {
  if (as_json) {
    print(r.to_json());
  } else {
    std::cout << r.name << "\n";
    for (const auto& c : r.checks)
      std::cout << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.claim << "\n";
  }
  return r.pass() ? 0 : 1;
}

VerifyReport sweep_report(const std::string& name, std::uint64_t seed, int count,
                          VerifyReport (*verify)(const PolarizedLattice&, const FiniteSubgroup&)) {
  int failures = 0;
  nlohmann::json first_failure;
  for (int i = 0; i < count; ++i) {
    PolarizedLattice x = random_polarized(4, PolType{1, 1, 1, 1}, seed + i);
    FiniteSubgroup h = random_isotropic_subgroup(x, 2, seed + i);
    VerifyReport v = verify(x, h);
    if (!v.pass() && ++failures == 1)
      first_failure = {{"seed", seed + i}, {"report", v.to_json()}};
  }
  VerifyReport r{name, {}};
  r.checks.push_back({name + " holds on every seeded case",
                      failures == 0,
                      {{"count", count}, {"failures", failures}, {"first_failure", first_failure}}});
  return r;
}

VerifyReport run_verify(const std::string& name, const Scenario& s, std::uint64_t seed,
                        int count) {
  VerifyReport (*fn)(const PolarizedLattice&, const FiniteSubgroup&) = nullptr;
  if (name == "lemma-ker") fn = &verify_lemma_ker;
  if (name == "dual-quotient") fn = &verify_dual_quotient_identity;
  if (name == "pullback") fn = &verify_pullback_lemmas;
  if (fn) {
    if (s.lattice) return fn(*s.lattice, scenario_subgroup(s, *s.lattice, "h"));
    return sweep_report(name, seed, count, fn);
  }
  if (name == "degree-ledger") {
    PolarizedLattice x_c = s.lattice ? *s.lattice : standard_principal(4);
    PolarizedLattice x_d = x_c;
    FiniteSubgroup h_c = s.subgroups.count("h_c") ? scenario_subgroup(s, x_c, "h_c")
                         : s.subgroups.count("h") ? scenario_subgroup(s, x_c, "h")
                                                  : default_h(x_c);
    FiniteSubgroup h_d = s.subgroups.count("h_d") ? scenario_subgroup(s, x_d, "h_d") : h_c;
    return degree_ledger_report(x_c, h_c, x_d, h_d);
  }
  if (name == "prym-duality") {
    if (!s.towers.empty()) return prym_duality_check(make_tower(s.towers.begin()->second));
    return prym_duality_check(paper_tower());
  }
  throw Error("ParseError",
              "unknown check \"" + name +
                  "\" (expected lemma-ker, dual-quotient, pullback, degree-ledger, "
                  "prym-duality, or all)",
              "verify");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact lattice models of polarized abelian varieties"};
  app.require_subcommand(1);

  std::string file, check_name;
  std::uint64_t seed = 1;
  int count = 100, jobs = 1, dim = 8;
  bool as_json = false, oracle = false;

  auto* c_type = app.add_subcommand("type", "polarization type of a lattice file");
  c_type->add_option("file", file)->required();
  auto* c_dual = app.add_subcommand("dual", "type of the dual polarized lattice");
  c_dual->add_option("file", file)->required();
  auto* c_quot = app.add_subcommand("quotient", "quotient by the scenario subgroup");
  c_quot->add_option("file", file)->required();
  auto* c_kern = app.add_subcommand("kernel", "kernel K(L) of the polarization isogeny");
  c_kern->add_option("file", file)->required();
  auto* c_pair = app.add_subcommand("pairing", "context pairing of the scenario points x, y");
  c_pair->add_option("file", file)->required();
  auto* c_orth = app.add_subcommand("orth", "orthogonal complement of the scenario subgroup");
  c_orth->add_option("file", file)->required();
  c_orth->add_flag("--oracle", oracle, "cross-check against the brute-force scan");

  auto* c_verify = app.add_subcommand("verify", "verify a named identity");
  c_verify->add_option("check", check_name)->required();
  c_verify->add_option("file", file);
  c_verify->add_option("--seed", seed);
  c_verify->add_option("--count", count);
  c_verify->add_flag("--json", as_json);

  auto* c_enum = app.add_subcommand("enumerate-isotropic", "isotropic plane census over F_2");
  c_enum->add_option("--dim", dim);
  c_enum->add_flag("--oracle", oracle);
  c_enum->add_option("--jobs", jobs);
  c_enum->add_flag("--json", as_json);

  auto* c_demo = app.add_subcommand("demo-paper", "run the full verification pipeline");
  c_demo->add_option("--seed", seed);
  c_demo->add_option("--count", count);
  c_demo->add_option("--jobs", jobs);
  c_demo->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (*c_type) {
      Scenario s = scenario_from_json(load_json_file(file));
      print({{"type", json_ivec(scenario_lattice(s).type())}});
      return 0;
    }
    if (*c_dual) {
      Scenario s = scenario_from_json(load_json_file(file));
      print({{"type", json_ivec(dual_polarized(scenario_lattice(s)).type())}});
      return 0;
    }
    if (*c_quot) {
      Scenario s = scenario_from_json(load_json_file(file));
      PolarizedLattice p = scenario_lattice(s);
      FiniteSubgroup h = scenario_subgroup(s, p, "h");
      PairContext ctx = s.context ? *s.context : PairContext::kernel();
      QuotientResult q = quotient_by_subgroup(p, h, ctx);
      print({{"quotient", lattice_to_json(q.quotient)},
             {"type", json_ivec(q.quotient.type())},
             {"degree", json_int(q.projection.degree)}});
      return 0;
    }
    if (*c_kern) {
      Scenario s = scenario_from_json(load_json_file(file));
      print(subgroup_to_json(kernel_subgroup(scenario_lattice(s))));
      return 0;
    }
    if (*c_pair) {
      Scenario s = scenario_from_json(load_json_file(file));
      PolarizedLattice p = scenario_lattice(s);
      if (!s.x || !s.y) throw Error("ParseError", "pairing needs points x and y", "scenario");
      PairContext ctx = s.context ? *s.context : PairContext::kernel();
      PairingExponent e = pairing(p, *s.x, *s.y, ctx);
      print({{"q", rat_str(e.q)}, {"trivial", e.is_one()}});
      return 0;
    }
    if (*c_orth) {
      Scenario s = scenario_from_json(load_json_file(file));
      PolarizedLattice p = scenario_lattice(s);
      FiniteSubgroup h = scenario_subgroup(s, p, "h");
      PairContext ctx = s.context ? *s.context : PairContext::kernel();
      FiniteSubgroup perp = orthogonal_complement(p, h, ctx);
      nlohmann::json out = subgroup_to_json(perp);
      if (oracle)
        out["oracle_agrees"] = subgroup_equal(perp, orthogonal_complement_scan(p, h, ctx));
      print(out);
      return oracle && !out["oracle_agrees"].get<bool>() ? 1 : 0;
    }
    if (*c_verify) {
      Scenario s;
      if (!file.empty()) s = scenario_from_json(load_json_file(file));
      if (s.seed && !c_verify->count("--seed")) seed = *s.seed;
      if (s.count && !c_verify->count("--count")) count = *s.count;
      std::vector<std::string> names;
      if (check_name == "all") {
        names = s.checks;
        if (names.empty())
          names = {"lemma-ker", "dual-quotient", "pullback", "degree-ledger", "prym-duality"};
      } else {
        names = {check_name};
      }
      int rc = 0;
      for (const std::string& name : names)
        rc |= finish_report(run_verify(name, s, seed, count), as_json);
      return rc;
    }
    if (*c_enum) {
      if (dim < 2 || dim % 2 != 0 || dim > 20)
        throw Error("ParseError", "--dim must be an even integer in [2, 20]", "enumerate-isotropic");
      PolarizedLattice p = standard_principal(dim / 2);
      SymplecticSpaceF2 sp = from_torsion(p);
      std::vector<PlaneF2> planes = sp.enumerate_isotropic_planes(jobs);
      if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const PlaneF2& pl : planes)
          arr.push_back({f2_str(pl.a, dim), f2_str(pl.b, dim)});
        nlohmann::json out = {{"dim", dim}, {"count", planes.size()}, {"planes", arr}};
        if (oracle) out["oracle"] = sp.count_isotropic_planes_oracle();
        print(out);
      } else {
        for (const PlaneF2& pl : planes)
          std::cout << f2_str(pl.a, dim) << " " << f2_str(pl.b, dim) << "\n";
        std::cout << "count " << planes.size();
        if (oracle) std::cout << " oracle " << sp.count_isotropic_planes_oracle();
        std::cout << "\n";
      }
      if (oracle && planes.size() != sp.count_isotropic_planes_oracle()) return 1;
      return 0;
    }
    if (*c_demo) {
      DemoReport d = run_demo(seed, count, jobs);
      if (as_json)
        print(d.to_json());
      else
        std::cout << d.render_text();
      return d.pass() ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << error_json(e).dump() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << nlohmann::json({{"code", "Internal"}, {"message", e.what()}, {"location", ""}})
                     .dump()
              << "\n";
    return 2;
  }
  return 2;
}
