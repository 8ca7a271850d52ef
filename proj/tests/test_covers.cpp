#include <doctest.h>

#include "pav/covers.hpp"

using namespace pav;

namespace {

Perm p4(const std::string& s) { return Perm::parse_cycles(s, 4); }

std::vector<BranchPoint> sweep_branch(int g_c, int r) {
  std::vector<BranchPoint> b;
  for (int i = 0; i < 2 * g_c + 2; ++i) b.push_back({"w" + std::to_string(i + 1), p4("(1 3)(2 4)")});
  for (int i = 0; i < r; ++i) b.push_back({"b" + std::to_string(i + 1), p4("(1 2)")});
  return b;
}

bool same_cover(const BranchedCover& a, const BranchedCover& b) {
  if (a.degree != b.degree || a.branch.size() != b.branch.size()) return false;
  for (std::size_t i = 0; i < a.branch.size(); ++i)
    if (a.branch[i].label != b.branch[i].label || !(a.branch[i].perm == b.branch[i].perm))
      return false;
  return true;
}

}  // namespace

TEST_CASE("permutation parsing and cycles") {
  Perm p = Perm::parse_cycles("(1 2 3)", 4);
  CHECK(p.apply(0) == 1);
  CHECK(p.apply(3) == 3);
  CHECK(p.to_cycles() == "(1 2 3)");
  CHECK(Perm::parse_cycles("(2 3 1)", 4) == p);  // canonical smallest-first
  CHECK(Perm::parse_cycles("()", 3) == Perm::identity(3));
  CHECK(Perm::identity(3).to_cycles() == "()");
  CHECK(p4("(1 2)(3 4)").cycle_count() == 2);
  CHECK(p4("(1 2)").cycle_count() == 3);

  CHECK_THROWS_WITH_AS(Perm::parse_cycles("(1 2)(2 3)", 4), doctest::Contains("disjoint"), Error);
  CHECK_THROWS_WITH_AS(Perm::parse_cycles("(1 5)", 4), doctest::Contains("out of range"), Error);
  CHECK_THROWS_WITH_AS(Perm::parse_cycles("(1)", 4), doctest::Contains("length one"), Error);

  // left-to-right composition: first (12), then (13)
  Perm a = Perm::parse_cycles("(1 2)", 3), b = Perm::parse_cycles("(1 3)", 3);
  CHECK((a * b).to_cycles() == "(1 2 3)");
  CHECK((a * a.inverse()).is_identity());
}

TEST_CASE("covers, genus, Riemann-Hurwitz") {
  std::vector<BranchPoint> six;
  for (int i = 0; i < 6; ++i)
    six.push_back({"p" + std::to_string(i + 1), Perm::parse_cycles("(1 2)", 2)});
  BranchedCover c6 = make_cover(2, six);
  CHECK(genus(c6) == 2);
  CHECK(ramification_degree(c6) == 6);
  CHECK(genus(make_cover(2, {six[0], six[1]})) == 0);

  CHECK_THROWS_WITH_AS(make_cover(2, {six[0]}), doctest::Contains("product"), Error);
  CHECK_THROWS_WITH_AS(make_cover(2, {{"t", Perm::identity(2)}}), doctest::Contains("trivial"),
                       Error);
  CHECK_THROWS_WITH_AS(make_cover(4, {{"a", p4("(1 2)")}, {"b", p4("(1 2)")}}),
                       doctest::Contains("transitive"), Error);
  // a lone transposition on 2 sheets: 2g - 2 = -3, rejected
  BranchedCover bad{2, {{"p", Perm::parse_cycles("(1 2)", 2)}}};
  CHECK_THROWS_AS(genus(bad), Error);
}

TEST_CASE("tower construction and validation") {
  TowerOf2Covers t = make_tower(sweep_branch(0, 2));
  TowerReport rep = validate_tower(t.cover);
  CHECK(rep.valid());
  CHECK(rep.generic);
  CHECK(rep.pi_branch == 2);
  CHECK(rep.phi_branch == 2);
  REQUIRE(rep.genus_d.has_value());
  CHECK(*rep.genus_d == 0);
  CHECK(*rep.genus_c == 0);
  CHECK(genus(block_cover(t)) == 0);

  CHECK_THROWS_WITH_AS(make_tower({{"a", p4("(1 2 3 4)")}, {"b", p4("(1 4 3 2)")}}),
                       doctest::Contains("mixes the blocks"), Error);
  CHECK_THROWS_AS(make_tower(make_cover(2, {{"a", Perm::parse_cycles("(1 2)", 2)},
                                            {"b", Perm::parse_cycles("(1 2)", 2)}})),
                  Error);
  // block action must be transitive; bypass make_cover to reach the check
  BranchedCover flat{4, {{"a", p4("(1 2)")}, {"b", p4("(1 2)")}}};
  CHECK_THROWS_WITH_AS(make_tower(flat), doctest::Contains("C disconnected"), Error);
}

TEST_CASE("validate_tower diagnostics") {
  // (12)(34) entries: valid but pi is ramified over the whole phi-fiber
  TowerOf2Covers t = make_tower({{"x", p4("(1 2)(3 4)")},
                                 {"w1", p4("(1 3)(2 4)")},
                                 {"w2", p4("(1 3)(2 4)")},
                                 {"y", p4("(1 2)(3 4)")}});
  TowerReport r = validate_tower(t.cover);
  CHECK(r.valid());
  CHECK(!r.generic);
  REQUIRE(!r.issues.empty());
  CHECK(r.issues.front().find("ramified over both") != std::string::npos);
  CHECK_THROWS_WITH_AS(bigonal(t), doctest::Contains("ramified over both"), Error);

  // 4-cycles preserving the blocks: mixed local type
  TowerOf2Covers m = make_tower({{"a", p4("(1 3 2 4)")}, {"b", p4("(1 4 2 3)")}});
  TowerReport rm = validate_tower(m.cover);
  CHECK(rm.valid());
  CHECK(!rm.generic);
  CHECK(rm.issues.front().find("mixed local type") != std::string::npos);

  // shared labels
  TowerOf2Covers s = make_tower({{"w", p4("(1 3)(2 4)")},
                                 {"w", p4("(1 3)(2 4)")},
                                 {"b1", p4("(1 2)")},
                                 {"b2", p4("(1 2)")}});
  CHECK(!is_generic(s));
  CHECK_THROWS_WITH_AS(bigonal(s), doctest::Contains("shared branch label"), Error);

  // trivial entries are flagged without invalidating the tower
  BranchedCover with_id{4,
                        {{"z", Perm::identity(4)},
                         {"w1", p4("(1 3)(2 4)")},
                         {"w2", p4("(1 3)(2 4)")},
                         {"b1", p4("(1 2)")},
                         {"b2", p4("(1 2)")}}};
  TowerReport rz = validate_tower(with_id);
  CHECK(rz.valid());
  CHECK(!rz.generic);
  CHECK(rz.issues.front().find("trivial branch permutation") != std::string::npos);

  // unbranched pi: generic but bigonal refuses
  TowerOf2Covers u = make_tower({{"w1", p4("(1 3)(2 4)")},
                                 {"w2", p4("(1 4)(2 3)")},
                                 {"w3", p4("(1 3)(2 4)")},
                                 {"w4", p4("(1 4)(2 3)")}});
  CHECK(is_generic(u));
  CHECK(pi_ramification(u) == 0);
  CHECK_THROWS_WITH_AS(bigonal(u), doctest::Contains("unbranched"), Error);
}

TEST_CASE("bigonal action on branch permutations") {
  TowerOf2Covers t = make_tower({{"w1", p4("(1 3)(2 4)")},
                                 {"w2", p4("(1 3)(2 4)")},
                                 {"b1", p4("(1 2)")},
                                 {"b2", p4("(1 2)")}});
  TowerOf2Covers bt = bigonal(t);
  REQUIRE(bt.cover.branch.size() == 4);
  CHECK(bt.cover.branch[0].perm == p4("(3 4)"));
  CHECK(bt.cover.branch[1].perm == p4("(3 4)"));
  CHECK(bt.cover.branch[2].perm == p4("(1 4)(2 3)"));
  CHECK(bt.cover.branch[3].perm == p4("(1 4)(2 3)"));
  CHECK(bt.cover.branch[0].label == "w1");
  // exact involution
  CHECK(same_cover(bigonal(bt).cover, t.cover));

  // the remaining generators: (34) -> (13)(24) and (14)(23) -> (12)
  TowerOf2Covers t2 = make_tower({{"w1", p4("(1 4)(2 3)")},
                                  {"w2", p4("(1 4)(2 3)")},
                                  {"b1", p4("(3 4)")},
                                  {"b2", p4("(3 4)")}});
  TowerOf2Covers bt2 = bigonal(t2);
  CHECK(bt2.cover.branch[0].perm == p4("(1 2)"));
  CHECK(bt2.cover.branch[2].perm == p4("(1 3)(2 4)"));
  CHECK(same_cover(bigonal(bt2).cover, t2.cover));

  // iota = (12)(34) is central in the block stabilizer
  Perm iota = p4("(1 2)(3 4)");
  for (const char* s : {"()", "(1 2)", "(3 4)", "(1 2)(3 4)", "(1 3)(2 4)", "(1 4)(2 3)",
                        "(1 3 2 4)", "(1 4 2 3)"}) {
    Perm g = p4(s);
    CHECK(iota * g == g * iota);
  }
}

TEST_CASE("paper tower and its bigonal partner") {
  TowerOf2Covers t = paper_tower();
  CHECK(genus(t.cover) == 6);
  CHECK(genus(block_cover(t)) == 2);
  CHECK(pi_ramification(t) == 6);
  CHECK(ramification_degree(t.cover) == 18);

  TowerOf2Covers bt = bigonal(t);
  CHECK(genus(bt.cover) == 6);
  CHECK(genus(block_cover(bt)) == 2);
  CHECK(pi_ramification(bt) == 6);
  CHECK(ramification_degree(bt.cover) == 18);
  CHECK(same_cover(bigonal(bt).cover, t.cover));

  CHECK(prym_duality_check(t).pass());
}

TEST_CASE("simultaneous conjugacy") {
  BranchedCover a = make_cover(4, sweep_branch(0, 2));
  // relabel the sheets by (13)(24): (12) entries become (34)
  std::vector<BranchPoint> bb = sweep_branch(0, 0);
  bb.push_back({"b1", p4("(3 4)")});
  bb.push_back({"b2", p4("(3 4)")});
  BranchedCover b = make_cover(4, bb);
  CHECK(simultaneously_conjugate(a, b));
  CHECK(simultaneously_conjugate(a, a));

  // mismatched cycle types at one index
  BranchedCover c{4, {{"x", p4("(1 2)")}}};
  BranchedCover d{4, {{"x", p4("(1 2)(3 4)")}}};
  CHECK(!simultaneously_conjugate(c, d));
  // labels must match in order
  BranchedCover e{4, {{"y", p4("(1 2)")}}};
  CHECK(!simultaneously_conjugate(c, e));
  CHECK(simultaneously_conjugate(c, BranchedCover{4, {{"x", p4("(3 4)")}}}));
}

TEST_CASE("preimage labeling choice does not change the numerics") {
  // the two within-block lifts (12) and (34) give simultaneously conjugate
  // towers with identical genera, before and after the bigonal construction
  for (int g = 0; g <= 2; ++g) {
    std::vector<BranchPoint> v12 = sweep_branch(g, 4), v34 = sweep_branch(g, 0);
    for (int i = 0; i < 4; ++i) v34.push_back({"b" + std::to_string(i + 1), p4("(3 4)")});
    TowerOf2Covers t12 = make_tower(v12), t34 = make_tower(v34);
    CHECK(simultaneously_conjugate(t12.cover, t34.cover));
    CHECK(genus(t12.cover) == genus(t34.cover));
    CHECK(genus(block_cover(t12)) == genus(block_cover(t34)));
    TowerOf2Covers b12 = bigonal(t12), b34 = bigonal(t34);
    CHECK(genus(b12.cover) == genus(b34.cover));
    CHECK(genus(block_cover(b12)) == genus(block_cover(b34)));
  }
}

TEST_CASE("genus formula sweep") {
  for (int g = 0; g <= 3; ++g) {
    for (int r = 2; r <= 20; r += 2) {
      TowerOf2Covers t = make_tower(sweep_branch(g, r));
      CHECK(genus(t.cover) == 2 * g - 1 + r / 2);
      CHECK(genus(block_cover(t)) == g);
      CHECK(pi_ramification(t) == r);
      TowerReport rep = validate_tower(t.cover);
      REQUIRE(rep.valid());
      CHECK(*rep.genus_c == g);
      CHECK(*rep.genus_d == 2 * g - 1 + r / 2);
    }
  }
}

TEST_CASE("random towers") {
  TowerOf2Covers a = random_tower(2, 6, 42), b = random_tower(2, 6, 42);
  CHECK(same_cover(a.cover, b.cover));
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TowerOf2Covers t = random_tower(2, 6, seed);
    TowerReport rep = validate_tower(t.cover);
    REQUIRE(rep.valid());
    CHECK(rep.generic);
    CHECK(*rep.genus_c == 2);
    CHECK(*rep.genus_d == 6);
    CHECK(pi_ramification(t) == 6);
    TowerOf2Covers bt = bigonal(t);
    CHECK(same_cover(bigonal(bt).cover, t.cover));
  }
  CHECK_THROWS_AS(random_tower(2, 0, 1), Error);
  CHECK_THROWS_AS(random_tower(2, 5, 1), Error);
}

TEST_CASE("prym numerics and duality") {
  PrymNumerics p = prym_numerics(2, 6);
  CHECK(p.dimension == 4);
  CHECK(p.type == PolType{1, 1, 2, 2});
  CHECK(prym_numerics(3, 2).dimension == 3);
  CHECK(prym_numerics(3, 2).type == PolType{2, 2, 2});
  CHECK(prym_numerics(3, 8).type == PolType{1, 1, 1, 2, 2, 2});
  CHECK_THROWS_AS(prym_numerics(2, 0), Error);
  CHECK_THROWS_AS(prym_numerics(2, 3), Error);
  CHECK_THROWS_AS(prym_numerics(-1, 2), Error);

  // duality swaps (g_C, r) with (g_{Gamma_0}, r') on every generic tower
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    CHECK(prym_duality_check(random_tower(2, 6, seed)).pass());
    CHECK(prym_duality_check(random_tower(3, 6, seed)).pass());
    CHECK(prym_duality_check(random_tower(1, 4, seed)).pass());
  }
  VerifyReport r = prym_duality_check(paper_tower());
  REQUIRE(r.checks.size() == 4);
  for (const CheckReport& c : r.checks) CHECK(c.pass);
}

TEST_CASE("moduli dimension counts") {
  ModuliDims d = moduli_dimensions(4, 2, 6);
  CHECK(d.dim_abelian == 10);
  CHECK(d.dim_towers == 9);
  CHECK(d.dim_jacobians == 9);
  VerifyReport r = moduli_report(4, 2, 6);
  CHECK(r.pass());
  REQUIRE(r.checks.size() == 2);
  CHECK_THROWS_AS(moduli_dimensions(-1, 2, 6), Error);
}
