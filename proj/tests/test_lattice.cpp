#include <doctest.h>

#include "pav/lattice.hpp"

using namespace pav;

namespace {

QMat qmat(int rows, int cols, std::initializer_list<const char*> vals) {
  QMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = parse_rat(*it++);
  return m;
}

IMat imat(int n, std::initializer_list<int> vals) {
  IMat m(n, n);
  auto it = vals.begin();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(i, j) = *it++;
  return m;
}

// Alternating nondegenerate matrix of the given type, scrambled by a seeded
// unimodular change of basis.
IMat scrambled_form(const PolType& t, std::uint64_t seed) {
  IMat j = standard_symplectic_form(t);
  IMat v = random_unimodular(static_cast<int>(2 * t.size()), seed);
  return v.transposed() * j * v;
}

}  // namespace

TEST_CASE("lattice canonical basis") {
  QMat b1 = qmat(2, 2, {"1", "0", "0", "1"});
  QMat b2 = qmat(2, 2, {"1", "1", "2", "1"});  // det -1, same lattice
  CHECK(Lattice(b1) == Lattice(b2));

  QMat half = qmat(2, 2, {"1/2", "0", "0", "1"});
  Lattice l(half);
  CHECK(l.contains(QVec{Rat(1, 2), Rat(0)}));
  CHECK(!l.contains(QVec{Rat(0), Rat(1, 2)}));
  CHECK(l.contains(Lattice(b1)));
  CHECK(!Lattice(b1).contains(l));
  CHECK(Lattice(b1).index_in(l) == 2);
  CHECK(l.sum(Lattice(b1)) == l);
  CHECK(l.scaled(Rat(2)).contains(QVec{Rat(1), Rat(0)}));
}

TEST_CASE("standard symplectic form and types") {
  PolType t{1, 2};
  IMat j = standard_symplectic_form(t);
  CHECK(j(0, 2) == 1);
  CHECK(j(1, 3) == 2);
  CHECK(j(2, 0) == -1);
  CHECK(j(3, 1) == -2);

  CHECK(dual_type(PolType{1, 2, 2, 2}) == PolType{1, 1, 1, 2});
  CHECK(dual_type(PolType{1, 1, 2, 2}) == PolType{1, 1, 2, 2});
  CHECK(dual_type(PolType{1, 1, 1, 1}) == PolType{1, 1, 1, 1});
  CHECK(dual_type(PolType{2, 6, 12}) == PolType{2, 4, 12});
  // involution
  for (const PolType& t2 : {PolType{1, 3}, PolType{2, 2, 4}, PolType{1, 2, 6, 6}})
    CHECK(dual_type(dual_type(t2)) == t2);
}

TEST_CASE("frobenius normal form") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    PolType t;
    switch (s % 4) {
      case 0: t = {1, 1}; break;
      case 1: t = {1, 2}; break;
      case 2: t = {1, 2, 4}; break;
      default: t = {1, 1, 2, 2}; break;
    }
    IMat e = scrambled_form(t, 1000 + s);
    FrobeniusResult f = frobenius_normal_form(e);
    CHECK(f.type == t);
    CHECK(f.u.transposed() * e * f.u == standard_symplectic_form(t));
    Int du = det(f.u);
    CHECK((du == 1 || du == -1));
  }

  CHECK_THROWS_AS(frobenius_normal_form(IMat(3, 3)), Error);
  IMat zero(2, 2);
  CHECK_THROWS_WITH_AS(frobenius_normal_form(zero), doctest::Contains("degenerate"), Error);
}

TEST_CASE("validate reports violations") {
  IMat notalt = imat(2, {0, 1, 1, 0});
  QMat id = qmat(2, 2, {"1", "0", "0", "1"});
  auto v = validate(id, notalt);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "not alternating");

  IMat degen(2, 2);
  auto v2 = validate(id, degen);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0] == "degenerate form");

  CHECK_THROWS_AS(PolarizedLattice::make(id, notalt), Error);
}

TEST_CASE("polarized lattice construction") {
  PolarizedLattice p = standard_principal(2);
  CHECK(p.g() == 2);
  CHECK(p.type() == PolType{1, 1});
  CHECK(p.degree() == 1);

  PolarizedLattice q = standard_polarized(PolType{1, 2});
  CHECK(q.type() == PolType{1, 2});
  CHECK(q.degree() == 4);  // (1*2)^2

  // ambient form is basis independent: change basis, transform the form
  IMat u = random_unimodular(4, 7);
  QMat b2 = to_rational(u) * q.basis();
  IMat e2 = u * q.form() * u.transposed();
  PolarizedLattice q2 = PolarizedLattice::make(b2, e2);
  CHECK(pol_equal(q, q2));
  CHECK(q.ambient_form() == q2.ambient_form());
  CHECK(q2.type() == PolType{1, 2});

  CHECK_THROWS_AS(standard_principal(0), Error);
}

TEST_CASE("rescale and random lattices") {
  PolarizedLattice p = standard_principal(2);
  PolarizedLattice p2 = rescale_form(p, 2);
  CHECK(p2.type() == PolType{2, 2});
  CHECK(p2.lattice() == p.lattice());

  for (std::uint64_t s = 0; s < 10; ++s) {
    PolarizedLattice r = random_polarized(3, PolType{1, 2, 2}, s);
    CHECK(r.type() == PolType{1, 2, 2});
    CHECK(pol_equal(r, random_polarized(3, PolType{1, 2, 2}, s)));
  }
}
