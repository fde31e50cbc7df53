#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "testutil.hpp"

using namespace etkk;
using namespace etkk::testutil;

namespace {

Block block_a() {
  return make_interval_block(vec({1, 1, 1, 1, 1}), 3, vec({1, 1, 0, 0, 1}),
                             vec({0, 0, 1, 1, 1}));
}

Block block_b() {
  return make_interval_block(vec({1, 1, 1, 1}), 2, vec({1, 1, 0, 0}),
                             vec({0, 0, 1, 1}));
}

Diagram lambda_ab() {
  return diagram_validate(block_a(), block_b(),
                          mat({{1, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0},
                               {0, 0, 1, 0, 0},
                               {0, 0, 0, 1, 0}}),
                          1);
}

bool diagrams_equal(const Diagram& a, const Diagram& b) {
  return a.same_shape(b) && is_zero(IntMat(a.lambda0 - b.lambda0)) &&
         a.lambda1 == b.lambda1;
}

}  // namespace

TEST_CASE("validation checks the commutation rule") {
  CHECK_NOTHROW(lambda_ab());
  CHECK_NOTHROW(identity_diagram(block_a()));
  CHECK_THROWS_WITH_AS(
      diagram_validate(block_a(), block_b(),
                       mat({{1, 0, 0, 0, 0},
                            {0, 1, 0, 0, 0},
                            {0, 0, 1, 0, 0},
                            {0, 0, 0, 1, 0}}),
                       2),
      doctest::Contains("NotCommutative"), Error);
}

TEST_CASE("membership in the trivial subgroup") {
  // Dimension-drop into a point: endpoint evaluations are not equivalent.
  Block point = make_finite_dim_block(vec({1}));
  for (long q = 2; q <= 5; ++q) {
    Block dd = canonical_dimension_drop(q);
    Diagram diff = subtract(diagram_validate(dd, point, mat({{1, 0}}), 0),
                            diagram_validate(dd, point, mat({{0, 1}}), 0));
    CHECK(!in_M(diff).has_value());
  }
  // With index row (1,-1) the same difference factors.
  Block a = make_interval_block(vec({1, 1}), 2, vec({2, 0}), vec({1, 1}));
  Diagram diff = subtract(diagram_validate(a, point, mat({{1, 0}}), 0),
                          diagram_validate(a, point, mat({{0, 1}}), 0));
  auto w = in_M(diff);
  REQUIRE(w.has_value());
  CHECK(w->mu(0) == 1);
  CHECK(in_M(zero_diagram(block_a(), block_b())).has_value());
}

TEST_CASE("in_M agrees with brute force") {
  Rng rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    Block a = random_block(rng, 3, 2);
    Block b = random_block(rng, 3, 2);
    Diagram d = pick(rng, 0, 1) ? random_diagram(rng, a, b)
                                : random_m_element(rng, a, b);
    auto fast = in_M(d);
    auto brute = in_M_brute(d, 20);
    CHECK(fast.has_value() == brute.has_value());
    if (fast) {
      // Re-verify the witness.
      CHECK(is_zero(IntMat(d.lambda0 - fast->mu * a.index_row())));
      if (a.kind == BlockKind::Interval && b.kind == BlockKind::Interval)
        CHECK(d.lambda1 == (b.index_row() * fast->mu)(0));
    }
  }
}

TEST_CASE("group and cone laws") {
  Rng rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    Block a = random_block(rng, 3, 2);
    Block b = random_block(rng, 3, 2);
    Block c = random_block(rng, 3, 2);
    Diagram d1 = random_diagram(rng, a, b);
    Diagram d2 = random_diagram(rng, a, b);
    Diagram e = random_diagram(rng, b, c);
    // C(A,B) is closed under the group operations.
    CHECK_NOTHROW(diagram_validate(a, b, IntMat(add(d1, d2).lambda0),
                                   add(d1, d2).lambda1));
    CHECK_NOTHROW(
        diagram_validate(a, b, IntMat(negate(d1).lambda0), negate(d1).lambda1));
    // M(A,B) is a subgroup.
    Diagram m1 = random_m_element(rng, a, b);
    Diagram m2 = random_m_element(rng, a, b);
    CHECK(in_M(add(m1, m2)).has_value());
    CHECK(in_M(negate(m1)).has_value());
    // Composition respects addition and associativity.
    Diagram f = random_diagram(rng, c, random_block(rng, 3, 2));
    CHECK(diagrams_equal(compose(compose(d1, e), f), compose(d1, compose(e, f))));
    CHECK(diagrams_equal(compose(add(d1, d2), e),
                         add(compose(d1, e), compose(d2, e))));
    // Positivity cone: closed under addition; under composition the matrix
    // part stays nonnegative (the composite can degenerate to lambda0 = 0
    // with a nonzero lambda1, which is no longer positive by definition).
    if (is_positive(d1) && is_positive(d2)) CHECK(is_positive(add(d1, d2)));
    if (is_positive(d1) && is_positive(e)) {
      Diagram ce = compose(d1, e);
      CHECK(is_nonnegative(ce.lambda0));
      if (!(is_zero(ce.lambda0) && ce.lambda1 != 0))
        CHECK(is_positive(ce));
    }
  }
}

TEST_CASE("positivity and representatives of the worked class") {
  Diagram lam = lambda_ab();
  CHECK(is_positive(lam));
  CHECK(is_positive(zero_diagram(block_a(), block_b())));
  Diagram zl1 = diagram_validate(canonical_circle(), block_b(),
                                 zero_mat(4, 1), 1);
  CHECK(!is_positive(zl1));
  auto pm = positive_mod_M(lam);
  REQUIRE(pm.has_value());
  CHECK(diagrams_equal(pm->rep, lam));
  auto reps = enumerate_positive_reps(lam);
  auto* list = std::get_if<std::vector<Diagram>>(&reps);
  REQUIRE(list != nullptr);
  REQUIRE(list->size() == 1);
  CHECK(diagrams_equal((*list)[0], lam));
  // Circle source: the feasibility box is unbounded.
  Diagram circ = diagram_validate(canonical_circle(), block_a(),
                                  mat({{0}, {0}, {0}, {0}, {1}}), 1);
  CHECK(std::holds_alternative<Unbounded>(enumerate_positive_reps(circ)));
}

TEST_CASE("order generators") {
  auto gens = order_generators(block_a());
  REQUIRE(gens.size() == 5);
  long dd = 0, circles = 0;
  for (const auto& g : gens) {
    CHECK(is_positive(g.diagram));
    CHECK_NOTHROW(diagram_validate(g.source, g.diagram.target,
                                   g.diagram.lambda0, g.diagram.lambda1));
    if (g.source.p() == 2)
      ++dd;
    else
      ++circles;
  }
  CHECK(dd == 4);
  CHECK(circles == 1);
  auto gens2 = order_generators(canonical_dimension_drop(2));
  REQUIRE(gens2.size() == 1);
  CHECK(gens2[0].source.n == 4);
  CHECK(is_zero(IntMat(gens2[0].diagram.lambda0 - mat({{2, 0}, {0, 2}}))));
}

TEST_CASE("order preservation and unit action") {
  Diagram lam = lambda_ab();
  CHECK(preserves_order(lam));
  CHECK(preserves_order(identity_diagram(block_a())));
  CHECK(is_zero(apply_to_k0(lam, vec({0, 0, 0, 0, 1}))));
  CHECK(!kills_unit(lam));
  CHECK(kills_unit(zero_diagram(block_a(), block_b())));
  CHECK_THROWS_WITH_AS(apply_to_k0(lam, vec({1, 0, 0, 0, 0})),
                       doctest::Contains("NotInK0"), Error);
}
