#include <doctest.h>

#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"
#include "ecmg/solver.hpp"
#include "ecmg/theorems.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using namespace ecmg::testing;

TEST_CASE("rainbow complete graphs are solved by alternation") {
  const auto g = ColouredMultigraph::rainbow_complete(18, 3);
  const auto out = solve(g);
  REQUIRE(out.status == SolveStatus::Path);
  CHECK(is_proper_hamiltonian(g, *out.path));
  REQUIRE_FALSE(out.trace.empty());
  CHECK(out.trace.front().kind == StepKind::Alternation);
}

TEST_CASE("below the base threshold the solver is the exact search") {
  SplitMix64 rng(8);
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + static_cast<int>(rng.below(9));
    const auto g = random_graph(n, 3, 1 + rng.below(2), 5, rng);
    const auto out = solve(g);
    CHECK(out.status != SolveStatus::Unsolved);
    CHECK((out.status == SolveStatus::Path) == find_php(g).has_value());
    if (out.path) CHECK(is_proper_hamiltonian(g, *out.path));
  }
  CHECK(solve(extremal(TheoremId::S2, 9, 2)).status == SolveStatus::Absent);
}

TEST_CASE("constructive solutions validate and replay") {
  int solved = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SamplerSpec spec;
    spec.n = 18;
    spec.c = 3;
    spec.m_min = threshold(TheoremId::Connected, 18, 3);
    spec.m_max = spec.m_min + 18;
    spec.require_connected = true;
    spec.seed = seed;
    const auto g = sample(spec);
    SolveOptions options;
    options.use_alternation = seed % 2 == 0;
    const auto out = solve(g, options);
    if (out.status != SolveStatus::Path) continue;
    ++solved;
    CHECK(is_proper_hamiltonian(g, *out.path));
    CHECK(replay_trace(out) == *out.path);
  }
  CHECK(solved > 0);
}

TEST_CASE("four colours are merged first") {
  SamplerSpec spec;
  spec.n = 17;
  spec.c = 4;
  spec.m_min = spec.m_max = 4 * choose2(16) + 1 + 40;
  spec.require_connected = true;
  spec.seed = 3;
  const auto g = sample(spec);
  SolveOptions options;
  options.use_alternation = false;
  const auto out = solve(g, options);
  if (out.status == SolveStatus::Path) {
    CHECK(is_proper_hamiltonian(g, *out.path));
    CHECK(out.trace.front().kind == StepKind::Merge);
  }
}

TEST_CASE("two-colour alternation") {
  GraphBuilder b(5, 3);
  for (Vertex v = 0; v + 1 < 5; ++v) {
    b.add_edge(v, v + 1, 1);
    b.add_edge(v, v + 1, 3);
  }
  const auto g = b.build();
  const auto p = two_colour_alternating_path(g, 1, 3);
  REQUIRE(p);
  CHECK(is_proper_hamiltonian(g, *p));
  for (std::size_t i = 1; i < p->colours.size(); ++i) CHECK(p->colours[i] != p->colours[i - 1]);
  CHECK_FALSE(two_colour_alternating_path(g, 1, 2).has_value());

  const auto dense = ColouredMultigraph::rainbow_complete(15, 3);
  const auto q = two_colour_alternating_path(dense, 2, 3);
  REQUIRE(q);
  CHECK(is_proper_hamiltonian(dense, *q));
}

TEST_CASE("hamiltonian path heuristics agree with the exact DP when they succeed") {
  SplitMix64 rng(12);
  for (int t = 0; t < 100; ++t) {
    const SimpleGraph h = sample_simple(12, 20 + static_cast<std::int64_t>(rng.below(30)), rng);
    const auto exact = hamiltonian_path_exact(h);
    const auto heuristic = hamiltonian_path_heuristic(h);
    if (heuristic) CHECK(exact.has_value());
    CHECK(hamiltonian_path(h).has_value() == exact.has_value());
  }
}
