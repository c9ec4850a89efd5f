#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "lqw/errors.hpp"
#include "lqw/rng.hpp"
#include "lqw/weights.hpp"

using namespace lqw;

TEST_CASE("splitmix64 reference vectors") {
  SplitMix64 zero(0);
  CHECK(zero() == 0xe220a8397b1dcdafULL);
  CHECK(zero() == 0x6e789e6aa1b965f4ULL);
  CHECK(zero() == 0x06c45d188009454fULL);
  CHECK(zero() == 0xf88bb8a8724c81ecULL);

  SplitMix64 answer(42);
  CHECK(answer() == 0xbdd732262feb6e95ULL);
  CHECK(answer() == 0x28efe333b266f103ULL);
  CHECK(answer() == 0x47526757130f9f52ULL);
  CHECK(answer() == 0x581ce1ff0e4ae394ULL);
}

TEST_CASE("uniform draws use the top 53 bits") {
  SplitMix64 rng(42);
  CHECK(rng.uniform01() == 0.7415648787718233);
  CHECK(rng.uniform01() == 0.1599103928769201);
  CHECK(rng.uniform01() == 0.27860113025513866);

  SplitMix64 scaled(42);
  CHECK(scaled.uniform(0.0, 10.0) == doctest::Approx(7.415648787718233).epsilon(1e-15));

  SplitMix64 range(7);
  for (int i = 0; i < 10000; ++i) {
    const double u = range.uniform01();
    REQUIRE(u >= 0.0);
    REQUIRE(u < 1.0);
  }
}

TEST_CASE("homogeneous and two-class realization") {
  CHECK(realize_weights(Homogeneous{1.0}, 6, 0).values().size() == 6);
  CHECK(realize_weights(Homogeneous{1.0}, 6, 0) == LoopWeights({1, 1, 1, 1, 1, 1}));
  CHECK(realize_weights(TwoClass{4, 1.0, 2.0}, 6, 0) == LoopWeights({1, 1, 1, 1, 2, 2}));
  CHECK(realize_weights(TwoClass{6, 1.0, 2.0}, 6, 0).homogeneous());
  CHECK_FALSE(realize_weights(TwoClass{5, 1.0, 2.0}, 6, 0).homogeneous());
  CHECK_THROWS_AS(realize_weights(TwoClass{7, 1.0, 2.0}, 6, 0), ParameterError);
  CHECK_THROWS_AS(realize_weights(TwoClass{0, 1.0, 2.0}, 6, 0), ParameterError);
}

TEST_CASE("random realization is reproducible and keeps the marked weight") {
  const MarkedPlusUniform spec{1.0, 0.0, 10.0, 42};
  const auto a = realize_weights(spec, 256, 0);
  const auto b = realize_weights(spec, 256, 0);
  CHECK(a == b);
  CHECK(a[0] == 1.0);
  for (std::size_t v = 1; v < 256; ++v) {
    CHECK(a[v] >= 0.0);
    CHECK(a[v] < 10.0);
  }
  // Draws go to unmarked vertices in ascending order.
  SplitMix64 rng(42);
  CHECK(a[1] == rng.uniform(0.0, 10.0));
  CHECK(a[2] == rng.uniform(0.0, 10.0));

  const auto moved = realize_weights(spec, 256, 3);
  CHECK(moved[3] == 1.0);
  CHECK(moved[0] == a[1]);
  CHECK(moved[4] == a[4]);

  CHECK_FALSE(realize_weights(MarkedPlusUniform{1.0, 0.0, 10.0, 43}, 256, 0) == a);
}

TEST_CASE("degenerate random interval") {
  const auto w = realize_weights(MarkedPlusUniform{0.5, 2.0, 2.0, 1}, 5, 1);
  CHECK(w == LoopWeights({2, 0.5, 2, 2, 2}));
}

TEST_CASE("invalid weights are rejected") {
  CHECK_THROWS_AS(LoopWeights({1.0, -0.1}), ParameterError);
  CHECK_THROWS_AS(LoopWeights({std::numeric_limits<double>::quiet_NaN()}), ParameterError);
  CHECK_THROWS_AS(LoopWeights({std::numeric_limits<double>::infinity()}), ParameterError);
  CHECK_THROWS_AS(check_weight_spec(Homogeneous{-1.0}), ParameterError);
  CHECK_THROWS_AS(check_weight_spec(MarkedPlusUniform{1.0, 5.0, 2.0, 0}), ParameterError);
  CHECK_THROWS_AS(check_weight_spec(MarkedPlusUniform{1.0, -1.0, 2.0, 0}), ParameterError);
  CHECK_THROWS_AS(check_weight_spec(Explicit{{1.0, -2.0}}), ParameterError);
  CHECK_THROWS_AS(realize_weights(Explicit{{1.0, 2.0}}, 3, 0), ParameterError);
  CHECK_THROWS_AS(realize_weights(Homogeneous{1.0}, 3, 3), ParameterError);
}

TEST_CASE("weight spec text round trip") {
  const WeightSpec specs[] = {Homogeneous{0.099206}, TwoClass{4, 1.0, 2.5},
                              MarkedPlusUniform{1.0, 0.0, 10.0, 9}, Explicit{{0.0, 0.25, 3.0}}};
  for (const auto& s : specs) {
    const auto text = format_weight_spec(s);
    CAPTURE(text);
    CHECK(parse_weight_spec(text, 9) == s);
  }
  CHECK(format_weight_spec(Homogeneous{0.1}) == "homog:0.1");
  CHECK(format_weight_spec(TwoClass{4, 1.0, 2.0}) == "twoclass:4,1,2");
  CHECK(format_weight_spec(MarkedPlusUniform{1.0, 0.0, 10.0, 9}) == "rand:1,0,10");
}

TEST_CASE("weight spec parse errors") {
  CHECK_THROWS_AS(parse_weight_spec("homog", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("homog:", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("homog:1,2", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("homog:x", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("homog:-1", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("twoclass:2.5,1,1", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("rand:1,3,2", 0), ParameterError);
  CHECK_THROWS_AS(parse_weight_spec("gauss:1", 0), ParameterError);
}

TEST_CASE("shortest round-trip formatting") {
  for (double x : {0.0, 0.1, 1.0 / 3.0, 0.0008544921875, 1e-300, 12345.678}) {
    CHECK(parse_double(format_shortest(x)) == x);
  }
  CHECK_THROWS_AS(parse_double("1.0abc"), ParameterError);
  CHECK_THROWS_AS(parse_double(""), ParameterError);
}
