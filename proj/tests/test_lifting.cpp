#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etkk/lifting.hpp"
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

}  // namespace

TEST_CASE("row criterion") {
  // Identity: rows vanish, liftable.
  Diagram id = identity_diagram(block_a());
  CHECK(lift_d0(id).status == LiftStatus::Liftable);
  CHECK(lift_d0(id).criterion == "rows-from-0");
  // lambda1 = 0 is trivially liftable.
  Diagram z = zero_diagram(block_a(), block_b());
  CHECK(lift_d0(z).status == LiftStatus::Liftable);
  CHECK(lift_d0(z).criterion == "lambda1-zero");
  // The worked positive class stays inconclusive.
  LiftVerdict v = lift_d0(lambda_ab());
  CHECK(v.status == LiftStatus::Unknown);
  CHECK(v.criterion == "rows-from-0");
  // Non-positive input is rejected.
  Diagram bad = diagram_validate(canonical_circle(), block_b(), zero_mat(4, 1), 1);
  CHECK_THROWS_WITH_AS(lift_d0(bad), doctest::Contains("NotPositive"), Error);
}

TEST_CASE("endpoint-sum criterion") {
  CHECK(lift_suff(identity_diagram(block_a())).status == LiftStatus::Liftable);
  CHECK(lift_suff(lambda_ab()).status == LiftStatus::Unknown);
  // lambda1 = 0 with nonnegative lambda0: right-hand sides vanish.
  CHECK(lift_suff(zero_diagram(block_a(), block_b())).status ==
        LiftStatus::Liftable);
}

TEST_CASE("liftable plans re-verify") {
  Rng rng(29);
  for (int trial = 0; trial < 200; ++trial) {
    Block a = random_block(rng, 3, 2);
    Block b = random_block(rng, 3, 2);
    Diagram d = random_diagram(rng, a, b);
    if (!is_positive(d)) continue;
    for (LiftVerdict v : {lift_d0(d), lift_suff(d)}) {
      if (v.status != LiftStatus::Liftable) continue;
      for (const IntVec& row : v.witness_rows) CHECK(is_nonnegative(row));
    }
  }
}

TEST_CASE("zero-KK rigidity checker") {
  Block a = block_a();
  Block b = block_b();
  CHECK(zero_kk_check(zero_diagram(a, b)));
  // The worked class preserves order but does not kill the unit.
  CHECK_THROWS_WITH_AS(zero_kk_check(lambda_ab()),
                       doctest::Contains("PreconditionUnmet"), Error);
}

TEST_CASE("composed existence pipeline") {
  Block b = block_b();
  // g = identity on B; remainder zero; one g-vector = unit/n'.
  FinDimDecomposition dec;
  dec.psi_r_diagram = zero_diagram(b, b);
  dec.g_vectors = {vec({1, 1, 1, 1})};
  dec.psi_int_unit = b.n * vec({1, 1, 1, 1});
  dec.psi_F1_unit = vec({0, 0, 0, 0});
  LiftVerdict v = composed_existence(dec, identity_diagram(b));
  CHECK(v.status == LiftStatus::Liftable);
  CHECK(v.criterion == "finite-dimensional-image");
  // Remainder with lambda1 != 0 exercises the row route.
  FinDimDecomposition dec2 = dec;
  dec2.psi_r_diagram = identity_diagram(b);
  LiftVerdict v2 = composed_existence(dec2, identity_diagram(b));
  CHECK(v2.status == LiftStatus::Liftable);
  CHECK(v2.criterion == "composed-rows-from-0");
  // Violated order hypothesis is reported.
  FinDimDecomposition dec3 = dec;
  dec3.psi_r_diagram = identity_diagram(b);
  dec3.g_vectors = {};
  dec3.psi_int_unit = vec({0, 0, 0, 0});
  CHECK_THROWS_WITH_AS(composed_existence(dec3, identity_diagram(b)),
                       doctest::Contains("HypothesisViolation"), Error);
}

TEST_CASE("decision wrapper") {
  // Circle-source class without positive representative: certified negative.
  Block a2 = make_interval_block(vec({1, 1, 1, 1, 1}), 5, vec({2, 2, 0, 0, 1}),
                                 vec({0, 0, 2, 2, 1}));
  Block b2 = make_interval_block(vec({1, 1, 1, 1}), 4, vec({2, 2, 0, 0}),
                                 vec({0, 0, 2, 2}));
  Diagram zeta = diagram_validate(canonical_circle(), a2,
                                  mat({{0}, {0}, {0}, {0}, {1}}), 1);
  Diagram del = diagram_validate(a2, b2,
                                 mat({{1, 0, 0, 0, 0},
                                      {0, 1, 0, 0, 0},
                                      {0, 0, 1, 0, 0},
                                      {0, 0, 0, 1, 0}}),
                                 1);
  LiftVerdict v = decide_lift(compose(zeta, del));
  CHECK(v.status == LiftStatus::NotLiftable);
  CHECK(v.criterion == "no-positive-representative");
  // General source: no negative claim, only Unknown.
  CHECK(decide_lift(lambda_ab()).status != LiftStatus::NotLiftable);
  CHECK(decide_lift(identity_diagram(block_a())).status ==
        LiftStatus::Liftable);
}
