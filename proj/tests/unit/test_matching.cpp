#include <doctest.h>

#include "ecmg/matching.hpp"
#include "ecmg/sampler.hpp"
#include "ecmg/theorems.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using ecmg::testing::brute_matching_size;
using ecmg::testing::error_kind_of;

TEST_CASE("small matchings") {
  SimpleGraph p3(3);
  p3.add_edge(0, 1);
  p3.add_edge(1, 2);
  CHECK(maximum_matching(p3).size() == 1);

  SimpleGraph c6(6);
  for (int i = 0; i < 6; ++i) c6.add_edge(i, (i + 1) % 6);
  const auto m = maximum_matching(c6);
  CHECK(m.size() == 3);
  CHECK(is_valid_matching(c6, m));

  // Odd cycle with pendant edges forces a blossom.
  SimpleGraph b(7);
  for (int i = 0; i < 5; ++i) b.add_edge(i, (i + 1) % 5);
  b.add_edge(0, 5);
  b.add_edge(2, 6);
  CHECK(maximum_matching(b).size() == 3);
}

TEST_CASE("maximum matching agrees with brute force on sampled graphs") {
  SplitMix64 rng(7);
  for (int t = 0; t < 400; ++t) {
    const int n = 5 + static_cast<int>(rng.below(6));
    const auto m = static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(choose2(n) + 1)));
    const SimpleGraph h = sample_simple(n, m, rng);
    const Matching found = maximum_matching(h);
    CHECK(is_valid_matching(h, found));
    CHECK(static_cast<int>(found.size()) == brute_matching_size(h));
  }
}

TEST_CASE("colour matchings") {
  const auto rc = ColouredMultigraph::rainbow_complete(6, 3);
  for (Colour k = 1; k <= 3; ++k) {
    const auto m = colour_matching(rc, k);
    CHECK(m.size() == 3);
    CHECK(m.colour == k);
    CHECK(is_valid_matching(rc, m));
  }
  GraphBuilder b(4, 2);
  b.add_edge(0, 1, 1);
  CHECK(colour_matching(b.build(), 2).size() == 0);
  CHECK(colour_matching(extremal(TheoremId::S2, 9, 2), 2).size() <= 3);
  CHECK(error_kind_of([&] { colour_matching(rc, 4); }) == ErrorKind::ColourOutOfRange);
}

TEST_CASE("guaranteed two-colour matchings") {
  const auto [red, blue] = guaranteed_matchings_2col(ColouredMultigraph::rainbow_complete(14, 2));
  CHECK(red.size() == 7);
  CHECK(blue.size() == 7);

  SamplerSpec spec;
  spec.n = 15;
  spec.c = 2;
  spec.m_min = spec.m_max = choose2(15) + choose2(12) + 4;
  spec.rainbow_degree = 2;
  spec.seed = 2024;
  const auto g = sample(spec);
  const auto pair = guaranteed_matchings_2col(g);
  CHECK(pair.red.size() == 7);
  CHECK(pair.blue.size() >= 7);
  CHECK(is_valid_matching(g, pair.red));
  CHECK(is_valid_matching(g, pair.blue));

  CHECK(error_kind_of([] { guaranteed_matchings_2col(ColouredMultigraph::rainbow_complete(13, 2)); }) ==
        ErrorKind::HypothesisNotMet);
  CHECK(error_kind_of([] { guaranteed_matchings_2col(ColouredMultigraph::rainbow_complete(14, 3)); }) ==
        ErrorKind::HypothesisNotMet);
}
