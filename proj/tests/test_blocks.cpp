#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace etkk;
using namespace etkk::testutil;

TEST_CASE("validation enforces the block invariants") {
  CHECK_NOTHROW(make_interval_block(vec({1, 1, 1, 1, 1}), 3,
                                    vec({1, 1, 0, 0, 1}), vec({0, 0, 1, 1, 1})));
  // Unitality: alpha.k must equal n and beta.k.
  CHECK_THROWS_WITH_AS(
      make_interval_block(vec({1, 1}), 3, vec({1, 1}), vec({2, 1})),
      doctest::Contains("UnitalityViolation"), Error);
  // Minimality: no summand may be killed by both endpoint maps.
  CHECK_THROWS_WITH_AS(
      make_interval_block(vec({1, 1}), 2, vec({2, 0}), vec({2, 0})),
      doctest::Contains("ZeroColumn"), Error);
  CHECK_THROWS_WITH_AS(make_interval_block(vec({0}), 1, vec({1}), vec({1})),
                       doctest::Contains("NonpositiveSize"), Error);
  CHECK_THROWS_WITH_AS(make_finite_dim_block(vec({})),
                       doctest::Contains("NonpositiveSize"), Error);
}

TEST_CASE("canonical blocks") {
  Block s1 = canonical_circle();
  CHECK(s1.p() == 1);
  CHECK(s1.n == 1);
  CHECK(is_zero(IntMat(s1.index_row())));
  Block dd = canonical_dimension_drop(3);
  CHECK(dd.p() == 2);
  CHECK(dd.n == 3);
  CHECK(dd.index_row()(0) == 3);
  CHECK(dd.index_row()(1) == -3);
  CHECK_THROWS_WITH_AS(canonical_dimension_drop(1),
                       doctest::Contains("BadParameter"), Error);
}

TEST_CASE("alignment constant") {
  // max |(alpha_j+beta_j)/(alpha_j-beta_j)| over split summands, plus one.
  Block a = make_interval_block(vec({1, 1, 1, 1, 1}), 3, vec({1, 1, 0, 0, 1}),
                                vec({0, 0, 1, 1, 1}));
  CHECK(n_constant(a) == 2);
  Block s1 = canonical_circle();
  CHECK(n_constant(s1) == 1);  // alpha = beta: empty maximum
  Block b = make_interval_block(vec({1, 1}), 5, vec({3, 2}), vec({2, 3}));
  CHECK(n_constant(b) == 6);  // |5/1| -> ceil + 1
  CHECK_THROWS_WITH_AS(n_constant(make_finite_dim_block(vec({2}))),
                       doctest::Contains("WrongKind"), Error);
}

TEST_CASE("classification flags") {
  CHECK(classify(make_finite_dim_block(vec({2}))).is_finite_dim);
  CHECK(classify(canonical_dimension_drop(2)).is_single_endpoint);
  Block a = make_interval_block(vec({1}), 2, vec({2}), vec({2}));
  CHECK(!classify(a).is_single_endpoint);
}

TEST_CASE("random blocks satisfy the invariants") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    Block a = random_block(rng);
    CHECK(a.alpha.dot(a.k) == a.n);
    CHECK(a.beta.dot(a.k) == a.n);
    for (Index j = 0; j < a.p(); ++j)
      CHECK((a.alpha(j) != 0 || a.beta(j) != 0));
  }
}
