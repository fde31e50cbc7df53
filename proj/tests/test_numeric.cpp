#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

#include <functional>

using namespace etkk;
using namespace etkk::testutil;

TEST_CASE("gcd helpers") {
  CHECK(gcd(12, 18) == 6);
  CHECK(gcd(0, 0) == 0);
  Int s, t;
  Int g = gcdext(12, 18, s, t);
  CHECK(g == 6);
  CHECK(s * 12 + t * 18 == 6);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(ceil_div(-7, 2) == -3);
  CHECK(rat_floor(Rat(-7, 2)) == -4);
  CHECK(rat_ceil(Rat(-7, 2)) == -3);
}

TEST_CASE("hermite rows normalizes deterministically") {
  IntMat m = mat({{2, 4}, {1, 1}});
  IntMat h = hermite_rows(m);
  REQUIRE(h.rows() == 2);
  CHECK(h(0, 0) > 0);
  // Rows span the same lattice: original rows reduce to zero.
  CHECK(in_row_span(h, IntRow(m.row(0))));
  CHECK(in_row_span(h, IntRow(m.row(1))));
}

TEST_CASE("integer kernel solves m v = 0") {
  IntMat m = mat({{1, 1, -1, -1, 0}});
  IntMat ker = integer_kernel(m);
  CHECK(ker.rows() == 4);
  for (Index r = 0; r < ker.rows(); ++r)
    CHECK(is_zero(IntMat(m * ker.row(r).transpose())));
}

TEST_CASE("kernel basis spans the whole kernel (brute force)") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Index p = Index(pick(rng, 1, 4));
    IntMat m(1, p);
    for (Index j = 0; j < p; ++j) m(0, j) = pick(rng, -3, 3);
    IntMat ker = integer_kernel(m);
    IntVec v = zero_vec(p);
    std::function<void(Index)> scan = [&](Index j) {
      if (j == p) {
        Int dot = 0;
        for (Index i = 0; i < p; ++i) dot += m(0, i) * v(i);
        if (dot == 0) CHECK(in_row_span(ker, IntRow(v.transpose())));
        return;
      }
      for (long x = -3; x <= 3; ++x) {
        v(j) = x;
        scan(j + 1);
      }
    };
    scan(0);
  }
}

TEST_CASE("solve_dot prefers sparse solutions") {
  IntRow row = mat({{1, 1, -1, -1}}).row(0);
  auto mu = solve_dot(row, 1);
  REQUIRE(mu.has_value());
  CHECK((*mu)(0) == 1);
  CHECK((*mu)(1) == 0);
  CHECK((*mu)(2) == 0);
  CHECK((*mu)(3) == 0);
  CHECK(!solve_dot(mat({{2, -2}}).row(0), 1).has_value());
  auto mu2 = solve_dot(mat({{4, 6}}).row(0), 10);
  REQUIRE(mu2.has_value());
  CHECK(4 * (*mu2)(0) + 6 * (*mu2)(1) == 10);
}

TEST_CASE("exact parsing round trips") {
  CHECK(parse_int("-12345678901234567890123") ==
        Int("-12345678901234567890123"));
  CHECK(parse_rat("3/8") == Rat(3, 8));
  CHECK(parse_rat("0.25") == Rat(1, 4));
  CHECK(parse_rat("7") == Rat(7));
  CHECK(to_string(Rat(3, 8)) == "3/8");
  CHECK(to_string(Rat(4)) == "4");
  CHECK_THROWS_AS(parse_int("12x"), Error);
}
