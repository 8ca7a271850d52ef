#include "pav/demo.hpp"

#include "pav/covers.hpp"
#include "pav/isogeny.hpp"
#include "pav/json_base.hpp"
#include "pav/symplectic_f2.hpp"

namespace pav {

namespace {

const PolType& principal4() {
  static const PolType t{1, 1, 1, 1};
  return t;
}

const PolType& target_type() {
  static const PolType t{1, 1, 2, 2};
  return t;
}

// Order-4 isotropic subgroup span(e1/2, e2/2) of the standard principal X.
FiniteSubgroup canonical_h(const PolarizedLattice& x) {
  QVec a(x.n(), Rat(0)), b(x.n(), Rat(0));
  a[0] = Rat(1, 2);
  b[1] = Rat(1, 2);
  return make_subgroup(x, {reduce_point(a), reduce_point(b)});
}

PolarizedLattice doubled_quotient(const PolarizedLattice& x, const FiniteSubgroup& h) {
  PolarizedLattice x2 = rescale_form(x, 2);
  FiniteSubgroup h2(x2, h.lift());
  return quotient_by_subgroup(x2, h2, PairContext::kernel()).quotient;
}

VerifyReport demo_quotient_type(std::uint64_t seed, int count) {
  int failures = 0;
  nlohmann::json first_failure;
  PolType last_type;
  for (int i = 0; i < count; ++i) {
    PolarizedLattice x = random_polarized(4, principal4(), seed + i);
    FiniteSubgroup h = random_isotropic_subgroup(x, 2, seed + i);
    last_type = doubled_quotient(x, h).type();
    if (last_type != target_type() && ++failures == 1)
      first_failure = {{"seed", seed + i}, {"type", json_ivec(last_type)}};
  }
  VerifyReport r{"quotient-type", {}};
  r.checks.push_back({"(X, 2E)/H has type (1,1,2,2) for seeded principal g=4, |H| = 4 isotropic",
                      failures == 0,
                      {{"count", count},
                       {"failures", failures},
                       {"last_type", json_ivec(last_type)},
                       {"first_failure", first_failure}}});
  return r;
}

VerifyReport demo_kernel_sizes(std::uint64_t seed, int count) {
  PolarizedLattice x = standard_principal(4);
  FiniteSubgroup x2 = full_torsion(x, 2);
  PolarizedLattice a = doubled_quotient(x, canonical_h(x));
  FiniteSubgroup k = kernel_subgroup(a);

  VerifyReport r{"kernel-sizes", {}};
  r.checks.push_back({"|X_2| = 2^8", x2.order() == 256, {{"order", json_int(x2.order())}}});
  r.checks.push_back({"|ker lambda_{L_A}| = 2^4",
                      k.order() == 16,
                      {{"order", json_int(k.order())}}});
  IVec expected{2, 2, 2, 2};
  r.checks.push_back({"ker lambda_{L_A} has structure (Z/2 x Z/2)^2",
                      k.structure() == expected,
                      {{"structure", json_ivec(k.structure())}}});

  int failures = 0;
  for (int i = 0; i < count; ++i) {
    PolarizedLattice xi = random_polarized(4, principal4(), seed + i);
    FiniteSubgroup hi = random_isotropic_subgroup(xi, 2, seed + i);
    FiniteSubgroup ki = kernel_subgroup(doubled_quotient(xi, hi));
    if (ki.order() != 16 || ki.structure() != expected) ++failures;
  }
  r.checks.push_back({"seeded sweep reproduces the kernel size and structure",
                      failures == 0,
                      {{"count", count}, {"failures", failures}}});
  return r;
}

VerifyReport sweep(const char* name, std::uint64_t seed, int count,
                   VerifyReport (*verify)(const PolarizedLattice&, const FiniteSubgroup&),
                   bool with_scan_oracle) {
  int failures = 0, oracle_failures = 0;
  nlohmann::json first_failure;
  for (int i = 0; i < count; ++i) {
    PolarizedLattice x = random_polarized(4, principal4(), seed + i);
    FiniteSubgroup h = random_isotropic_subgroup(x, 2, seed + i);
    VerifyReport v = verify(x, h);
    if (!v.pass() && ++failures == 1)
      first_failure = {{"seed", seed + i}, {"report", v.to_json()}};
    if (with_scan_oracle) {
      PairContext ctx = PairContext::torsion(2);
      if (!subgroup_equal(orthogonal_complement(x, h, ctx),
                          orthogonal_complement_scan(x, h, ctx)))
        ++oracle_failures;
    }
  }
  VerifyReport r{name, {}};
  r.checks.push_back({std::string(name) + " holds on every seeded case",
                      failures == 0,
                      {{"count", count},
                       {"failures", failures},
                       {"first_failure", first_failure}}});
  if (with_scan_oracle)
    r.checks.push_back({"SNF complement agrees with the brute-force scan oracle",
                        oracle_failures == 0,
                        {{"count", count}, {"failures", oracle_failures}}});
  return r;
}

VerifyReport demo_degree_ledger() {
  PolarizedLattice x = standard_principal(4);
  FiniteSubgroup h = canonical_h(x);
  DegreeLedger l = degree_ledger(x, h, x, h);

  VerifyReport r{"degree-ledger", {}};
  r.checks.push_back({"deg(f_D) = 2^6", l.deg_f_d == 64, {{"value", json_int(l.deg_f_d)}}});
  r.checks.push_back(
      {"deg(lambda_{L_A'}) = 2^4", l.deg_lambda == 16, {{"value", json_int(l.deg_lambda)}}});
  r.checks.push_back(
      {"deg(f_C^dual) = 2^2", l.deg_f_c_dual == 4, {{"value", json_int(l.deg_f_c_dual)}}});
  r.checks.push_back(
      {"composite degree = 2^12", l.composite == 4096, {{"value", json_int(l.composite)}}});
  r.checks.push_back({"no integer m with m^8 = 2^12",
                      !l.obstruction_m.has_value(),
                      {{"obstruction_m", l.obstruction_m ? json_int(*l.obstruction_m)
                                                         : nlohmann::json(nullptr)}}});
  return r;
}

VerifyReport demo_plane_census(int jobs) {
  PolarizedLattice x = standard_principal(4);
  SymplecticSpaceF2 sp = from_torsion(x);
  std::vector<PlaneF2> planes = sp.enumerate_isotropic_planes(jobs);
  std::uint64_t oracle = sp.count_isotropic_planes_oracle();

  VerifyReport r{"plane-census", {}};
  r.checks.push_back({"enumerator count equals the pair-counting oracle (dim 8)",
                      planes.size() == oracle,
                      {{"count", planes.size()}, {"oracle", oracle}}});
  r.checks.push_back({"census size is 5355", planes.size() == 5355, {{"count", planes.size()}}});

  SymplecticSpaceF2 sp2 = from_torsion(standard_principal(1));
  // dim 2 has no isotropic planes; dim 4 has 15.
  SymplecticSpaceF2 sp4 = from_torsion(standard_principal(2));
  r.checks.push_back({"dim 2 census is empty",
                      sp2.enumerate_isotropic_planes().empty(),
                      {{"count", sp2.enumerate_isotropic_planes().size()}}});
  std::vector<PlaneF2> p4 = sp4.enumerate_isotropic_planes();
  r.checks.push_back({"dim 4 census is 15 and matches its oracle",
                      p4.size() == 15 && p4.size() == sp4.count_isotropic_planes_oracle(),
                      {{"count", p4.size()}}});

  int fiber_failures = 0;
  for (const PlaneF2& pl : planes) {
    FiniteSubgroup h = lift_to_torsion(x, {pl.a, pl.b}, sp.dim());
    if (doubled_quotient(x, h).type() != target_type()) ++fiber_failures;
  }
  r.checks.push_back({"every plane lifts to an H with quotient type (1,1,2,2)",
                      fiber_failures == 0,
                      {{"planes", planes.size()}, {"failures", fiber_failures}}});
  return r;
}

VerifyReport demo_bigonal(std::uint64_t seed, int count) {
  TowerOf2Covers t = paper_tower();
  TowerOf2Covers bt = bigonal(t);

  VerifyReport r{"bigonal", {}};
  r.checks.push_back({"genus(D) = 6", genus(t.cover) == 6, {{"genus", genus(t.cover)}}});
  r.checks.push_back(
      {"genus(C) = 2", genus(block_cover(t)) == 2, {{"genus", genus(block_cover(t))}}});
  r.checks.push_back({"genus(Gamma) = 6", genus(bt.cover) == 6, {{"genus", genus(bt.cover)}}});
  r.checks.push_back({"genus(Gamma_0) = 2",
                      genus(block_cover(bt)) == 2,
                      {{"genus", genus(block_cover(bt))}}});
  r.checks.push_back({"deg R = 18 for Gamma -> P^1",
                      ramification_degree(bt.cover) == 18,
                      {{"deg_R", ramification_degree(bt.cover)}}});
  r.checks.push_back({"deg R' = 6 for Gamma -> Gamma_0",
                      pi_ramification(bt) == 6,
                      {{"deg_R_prime", pi_ramification(bt)}}});
  r.checks.push_back({"bigonal(bigonal(t)) is simultaneously conjugate to t",
                      simultaneously_conjugate(bigonal(bt).cover, t.cover),
                      {}});

  int failures = 0;
  for (int i = 0; i < count; ++i) {
    TowerOf2Covers ti = random_tower(2, 6, seed + i);
    TowerOf2Covers bi = bigonal(ti);
    int gg = genus(bi.cover), g0 = genus(block_cover(bi));
    bool ok = genus(ti.cover) == 6 && genus(block_cover(ti)) == 2 && gg == 6 && g0 == 2 &&
              ramification_degree(bi.cover) == 18 && pi_ramification(bi) == 6 &&
              2 * gg - 2 == 2 * (2 * g0 - 2) + pi_ramification(bi) &&
              simultaneously_conjugate(bigonal(bi).cover, ti.cover);
    if (!ok) ++failures;
  }
  r.checks.push_back({"seeded generic towers (g_C = 2, r = 6) reproduce all genera",
                      failures == 0,
                      {{"count", count}, {"failures", failures}}});
  return r;
}

VerifyReport demo_prym(std::uint64_t seed) {
  VerifyReport r{"prym-duality", {}};
  PrymNumerics p = prym_numerics(2, 6);
  PolType expected{1, 1, 2, 2};
  r.checks.push_back({"(g, r) = (2, 6) gives dim 4",
                      p.dimension == 4,
                      {{"dimension", p.dimension}}});
  r.checks.push_back({"(g, r) = (2, 6) gives type (1,1,2,2)",
                      p.type == expected,
                      {{"type", json_ivec(p.type)}}});
  r.checks.push_back({"the type is its own dual",
                      dual_type(p.type) == p.type,
                      {{"dual", json_ivec(dual_type(p.type))}}});

  VerifyReport paper = prym_duality_check(paper_tower());
  r.checks.push_back(
      {"Pantazis numerics pass on the paper tower", paper.pass(), paper.to_json()});
  VerifyReport analogue = prym_duality_check(random_tower(3, 6, seed));
  r.checks.push_back({"Pantazis numerics pass on a (g_C, r) = (3, 6) analogue",
                      analogue.pass(),
                      analogue.to_json()});
  return r;
}

}  // namespace

nlohmann::json DemoReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : reports) arr.push_back(r.to_json());
  return {{"name", "demo-paper"}, {"pass", pass()}, {"reports", arr}};
}

std::string DemoReport::render_text() const {
  std::string out;
  for (const auto& r : reports) {
    out += r.name + "\n";
    for (const auto& c : r.checks)
      out += std::string("  [") + (c.pass ? "PASS" : "FAIL") + "] " + c.claim + "\n";
  }
  out += pass() ? "demo-paper: all checks pass\n" : "demo-paper: FAILURES above\n";
  return out;
}

DemoReport run_demo(std::uint64_t seed, int count, int jobs) {
  if (count < 1) throw Error("UsageError", "count must be positive", "run_demo");
  DemoReport d;
  d.reports.push_back(demo_quotient_type(seed, count));
  d.reports.push_back(demo_kernel_sizes(seed, count));
  d.reports.push_back(sweep("lemma-ker", seed, count, &verify_lemma_ker, true));
  d.reports.push_back(sweep("dual-quotient", seed, count, &verify_dual_quotient_identity, false));
  d.reports.push_back(sweep("pullback", seed, count, &verify_pullback_lemmas, false));
  d.reports.push_back(demo_degree_ledger());
  d.reports.push_back(demo_plane_census(jobs));
  d.reports.push_back(demo_bigonal(seed, count));
  d.reports.push_back(demo_prym(seed));
  d.reports.push_back(moduli_report(4, 2, 6));
  return d;
}

}  // namespace pav
