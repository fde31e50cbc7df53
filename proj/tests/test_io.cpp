#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "etkk/io.hpp"
#include "testutil.hpp"

#include <cstdio>
#include <fstream>

using namespace etkk;
using namespace etkk::testutil;

TEST_CASE("scalar codecs") {
  CHECK(json_to_int(Json("12345678901234567890")) ==
        parse_int("12345678901234567890"));
  CHECK(json_to_int(Json(-7)) == -7);
  CHECK(int_to_json(Int(42)) == Json("42"));
  CHECK(json_to_rat(Json("3/6")) == Rat(1, 2));
  CHECK(json_to_rat(Json(5)) == Rat(5));
  CHECK(rat_to_json(Rat(1, 2)) == Json("1/2"));
  CHECK_THROWS_WITH_AS(json_to_int(Json("abc")), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(json_to_int(Json(1.5)), doctest::Contains("ParseError"),
                       Error);
  CHECK_THROWS_WITH_AS(json_to_rat(Json("1/0")), doctest::Contains("ParseError"),
                       Error);
}

TEST_CASE("vector and matrix codecs") {
  IntVec v = vec({1, -2, 3});
  CHECK(is_zero(IntVec(json_to_vec(vec_to_json(v)) - v)));
  IntMat m = mat({{1, 2}, {3, 4}});
  CHECK(is_zero(IntMat(json_to_mat(mat_to_json(m)) - m)));
  CHECK_THROWS_WITH_AS(json_to_vec(Json{{"x", 1}}),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(json_to_mat(Json::parse("[[1,2],[3]]")),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("block documents round-trip") {
  Rng rng(71);
  for (int trial = 0; trial < 100; ++trial) {
    Block b = random_block(rng);
    Block back = json_to_block(block_to_json(b));
    CHECK(back == b);
  }
  Block fd = make_finite_dim_block(vec({2, 3}));
  CHECK(json_to_block(block_to_json(fd)) == fd);
  // Parsing routes through validation.
  Json bad = block_to_json(canonical_circle());
  bad["n"] = "0";
  CHECK_THROWS_WITH_AS(json_to_block(bad), doctest::Contains("NonpositiveSize"),
                       Error);
  CHECK_THROWS_WITH_AS(json_to_block(Json{{"kind", "mystery"}}),
                       doctest::Contains("ParseError"), Error);
  CHECK_THROWS_WITH_AS(json_to_block(Json::array()),
                       doctest::Contains("ParseError"), Error);
}

TEST_CASE("diagram documents round-trip") {
  Rng rng(73);
  for (int trial = 0; trial < 100; ++trial) {
    Block a = random_block(rng, 3, 2);
    Block b = random_block(rng, 3, 2);
    Diagram d = random_diagram(rng, a, b);
    Diagram back = json_to_diagram(diagram_to_json(d));
    CHECK(back.source == d.source);
    CHECK(back.target == d.target);
    CHECK(is_zero(IntMat(back.lambda0 - d.lambda0)));
    CHECK(back.lambda1 == d.lambda1);
  }
  // Inconsistent documents fail validation, not just parsing.
  Json j = diagram_to_json(identity_diagram(canonical_dimension_drop(2)));
  j["lambda1"] = "5";
  CHECK_THROWS_WITH_AS(json_to_diagram(j), doctest::Contains("NotCommutative"),
                       Error);
}

TEST_CASE("spectrum and witness documents round-trip") {
  Rng rng(79);
  for (int trial = 0; trial < 100; ++trial) {
    Block a = random_block(rng);
    Spectrum s = random_spectrum(rng, a);
    Spectrum back = json_to_spectrum(spectrum_to_json(s));
    CHECK(back.block == s.block);
    CHECK(is_zero(IntVec(back.base - s.base)));
    CHECK(back.interior == s.interior);
  }
  DistributionWitness w = offcenter_witness(3, 2);
  DistributionWitness back = json_to_witness(witness_to_json(w));
  CHECK(back.eta == w.eta);
  CHECK(back.K == w.K);
  CHECK(back.L == w.L);
  CHECK(back.intervals == w.intervals);
}

TEST_CASE("chart documents round-trip") {
  Rng rng(83);
  for (int trial = 0; trial < 50; ++trial) {
    Block a = random_block(rng, 3, 2);
    SpectralChart c = random_chart(rng, a);
    SpectralChart back = json_to_chart(chart_to_json(c));
    CHECK(back.source == c.source);
    CHECK(back.target == c.target);
    CHECK(is_zero(IntVec(back.t_interior - c.t_interior)));
    REQUIRE(back.paths.size() == c.paths.size());
    for (std::size_t i = 0; i < c.paths.size(); ++i)
      CHECK(back.paths[i].pts == c.paths[i].pts);
    REQUIRE(back.base_fibers.size() == c.base_fibers.size());
    for (std::size_t i = 0; i < c.base_fibers.size(); ++i) {
      CHECK(is_zero(IntVec(back.base_fibers[i].base - c.base_fibers[i].base)));
      CHECK(back.base_fibers[i].interior == c.base_fibers[i].interior);
    }
  }
  // A chart document with a wrong fiber is rejected by validation.
  SpectralChart c = identity_chart(canonical_dimension_drop(2));
  Json j = chart_to_json(c);
  j["t"][0] = "9";
  CHECK_THROWS_WITH_AS(json_to_chart(j), doctest::Contains("FiberDimMismatch"),
                       Error);
}

TEST_CASE("printing is deterministic") {
  Rng rng(89);
  Block a = random_block(rng, 3, 2);
  SpectralChart c = random_chart(rng, a);
  std::string once = chart_to_json(c).dump(2);
  std::string twice = chart_to_json(json_to_chart(chart_to_json(c))).dump(2);
  CHECK(once == twice);
  Diagram d = random_diagram(rng, a, random_block(rng, 3, 2));
  CHECK(diagram_to_json(d).dump(2) ==
        diagram_to_json(json_to_diagram(diagram_to_json(d))).dump(2));
}

TEST_CASE("report serializers expose the expected fields") {
  Block a = make_interval_block(vec({1, 1, 1, 1, 1}), 3, vec({1, 1, 0, 0, 1}),
                                vec({0, 0, 1, 1, 1}));
  Json kt = ktheory_to_json(compute_ktheory(a));
  CHECK(kt["k0_rank"] == Json("4"));
  CHECK(kt["k1"] == Json("Z/1"));
  CHECK(kt["unit"].size() == 5);
  CHECK(ktheory_to_json(compute_ktheory(canonical_circle()))["k1"] == Json("Z"));
  Json kc = ktheory_to_json(compute_ktheory(canonical_dimension_drop(2)));
  CHECK(kc["k1"] == Json("Z/2"));

  LiftVerdict v;
  v.status = LiftStatus::Liftable;
  v.criterion = "rows-from-0";
  v.unital_scale_ok = true;
  Json vj = verdict_to_json(v);
  CHECK(vj["status"] == Json("liftable"));
  CHECK(vj["criterion"] == Json("rows-from-0"));
  CHECK(vj["unital_scale_ok"] == Json(true));
}

TEST_CASE("file loading") {
  const char* path = "etkk_io_test.json";
  {
    std::ofstream out(path);
    out << R"({"kind":"interval","k":[2],"n":2,"alpha":[1],"beta":[1]})";
  }
  Json j = load_json(path);
  Block b = json_to_block(j);
  CHECK(b.n == 2);
  std::remove(path);
  CHECK_THROWS_WITH_AS(load_json("does-not-exist.json"),
                       doctest::Contains("ParseError"), Error);
  {
    std::ofstream out(path);
    out << "{not json";
  }
  CHECK_THROWS_WITH_AS(load_json(path), doctest::Contains("ParseError"), Error);
  std::remove(path);
}
