#include <doctest.h>

#include "pav/matrix.hpp"
#include "pav/numeric.hpp"

using namespace pav;

namespace {

IMat imat(int rows, int cols, std::initializer_list<int> vals) {
  IMat m(rows, cols);
  auto it = vals.begin();
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = *it++;
  return m;
}

IMat random_imat(int rows, int cols, std::uint64_t seed, int bound) {
  std::mt19937_64 rng(seed);
  IMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = rng_range(rng, -bound, bound);
  return m;
}

}  // namespace

TEST_CASE("determinant and inverse") {
  IMat a = imat(2, 2, {3, 1, 4, 2});
  CHECK(det(a) == 2);
  QMat q = to_rational(a);
  CHECK(det(q) == Rat(2));
  QMat inv = inverse(q);
  CHECK(q * inv == QMat::identity(2));
  CHECK(inv * q == QMat::identity(2));

  for (std::uint64_t s = 0; s < 20; ++s) {
    IMat x = random_imat(4, 4, 100 + s, 5);
    IMat y = random_imat(4, 4, 200 + s, 5);
    CHECK(det(x * y) == det(x) * det(y));
  }

  QMat sing(2, 2);
  sing(0, 0) = 1;
  sing(0, 1) = 2;
  sing(1, 0) = 2;
  sing(1, 1) = 4;
  CHECK_THROWS_WITH_AS(inverse(sing), doctest::Contains("singular"), Error);
}

TEST_CASE("to_integral") {
  QMat q(1, 2);
  q(0, 0) = Rat(4, 2);
  q(0, 1) = Rat(3);
  auto i = to_integral(q);
  REQUIRE(i.has_value());
  CHECK((*i)(0, 0) == 2);
  q(0, 1) = Rat(1, 3);
  CHECK(!to_integral(q).has_value());
}

TEST_CASE("row_hnf is a canonical form") {
  for (std::uint64_t s = 0; s < 30; ++s) {
    IMat a = random_imat(4, 4, 300 + s, 6);
    if (det(a) == 0) continue;
    IMat u = random_unimodular(4, 900 + s);
    Hnf h1 = row_hnf(a);
    Hnf h2 = row_hnf(u * a);
    CHECK(h1.h == h2.h);
    CHECK(h1.rank == 4);
  }
  // pivots positive, entries above reduced
  IMat a = imat(2, 2, {2, 1, 0, 3});
  Hnf h = row_hnf(a);
  CHECK(h.h(0, 0) > 0);
  CHECK(h.h(1, 1) > 0);
  CHECK(h.h(0, 1) >= 0);
  CHECK(h.h(0, 1) < h.h(1, 1));
}

TEST_CASE("smith normal form") {
  for (std::uint64_t s = 0; s < 40; ++s) {
    int n = 2 + static_cast<int>(s % 4);
    IMat a = random_imat(n, n, 400 + s, 7);
    Snf f = smith_normal_form(a);
    CHECK(f.u * a * f.v == f.s);
    Int du = det(f.u);
    Int dv = det(f.v);
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    Int prod = 1;
    for (int i = 0; i < n; ++i) {
      CHECK(f.s(i, i) >= 0);
      if (i + 1 < n && f.s(i + 1, i + 1) != 0 && f.s(i, i) != 0)
        CHECK(f.s(i + 1, i + 1) % f.s(i, i) == 0);
      for (int j = 0; j < n; ++j)
        if (i != j) CHECK(f.s(i, j) == 0);
      prod *= f.s(i, i);
    }
    Int d = det(a);
    CHECK((prod == d || prod == -d));
  }

  IMat a = imat(2, 2, {2, 4, 6, 8});
  IVec divs = elementary_divisors(a);
  REQUIRE(divs.size() == 2);
  CHECK(divs[0] == 2);
  CHECK(divs[1] == 4);
}

TEST_CASE("random_unimodular is unimodular and deterministic") {
  for (std::uint64_t s = 0; s < 10; ++s) {
    IMat u = random_unimodular(5, s);
    Int d = det(u);
    CHECK((d == 1 || d == -1));
    CHECK(u == random_unimodular(5, s));
  }
  CHECK(random_unimodular(5, 1) != random_unimodular(5, 2));
}

TEST_CASE("form_value and mul_vec") {
  QMat j(2, 2);
  j(0, 1) = 1;
  j(1, 0) = -1;
  QVec x{Rat(1), Rat(0)}, y{Rat(0), Rat(1)};
  CHECK(form_value(x, j, y) == Rat(1));
  CHECK(form_value(y, j, x) == Rat(-1));
  QVec img = mul_vec(x, j);
  CHECK(img[0] == Rat(0));
  CHECK(img[1] == Rat(1));
}
