#include <doctest.h>

#include <numeric>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/oracle.hpp"
#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"
#include "ecmg/theorems.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using namespace ecmg::testing;

TEST_CASE("find_php basics") {
  GraphBuilder k2(2, 2);
  k2.add_edge(0, 1, 1);
  const auto p = find_php(k2.build());
  REQUIRE(p);
  CHECK(p->vertices.size() == 2);
  CHECK(p->colours == std::vector<Colour>{1});

  CHECK(find_php(ColouredMultigraph::empty(1, 2)).has_value());
  CHECK_FALSE(find_php(ColouredMultigraph::empty(2, 2)).has_value());
  CHECK_FALSE(find_php(extremal(TheoremId::S2, 9, 2)).has_value());

  const auto rc = ColouredMultigraph::rainbow_complete(5, 2);
  const auto q = find_php(rc);
  REQUIRE(q);
  CHECK(is_proper_hamiltonian(rc, *q));

  // Monochromatic path on 3 vertices has no proper Hamiltonian path.
  GraphBuilder mono(3, 2);
  mono.add_edge(0, 1, 1);
  mono.add_edge(1, 2, 1);
  CHECK_FALSE(find_php(mono.build()).has_value());
}

TEST_CASE("budget is reported, not treated as absence") {
  const auto g = ColouredMultigraph::rainbow_complete(12, 3);
  CHECK(error_kind_of([&] { find_php(g, SearchBudget{1000}); }) == ErrorKind::BudgetExceeded);
  CHECK(php_state_count(20, 3) <= SearchBudget{}.max_states);
}

TEST_CASE("exhaustive agreement at n = 4") {
  const auto report = oracle::enumerate_and_compare(4, 2);
  CHECK(report.graphs == 4096);
  CHECK(report.disagreements == 0);
  CHECK(error_kind_of([] { oracle::enumerate_and_compare(6, 2); }) == ErrorKind::InfeasibleExhaustive);
}

TEST_CASE("find_php agrees with brute force on sampled 3-coloured graphs") {
  SplitMix64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int n = 3 + static_cast<int>(rng.below(5));
    const auto g = random_graph(n, 3, 1 + rng.below(3), 6, rng);
    const auto fast = find_php(g);
    CHECK(fast.has_value() == oracle::brute_force_php(g).has_value());
    if (fast) CHECK(is_proper_hamiltonian(g, *fast));
  }
}

TEST_CASE("existence is invariant under relabelling") {
  SplitMix64 rng(5);
  for (int t = 0; t < 200; ++t) {
    const int n = 6 + static_cast<int>(rng.below(4));
    const auto g = random_graph(n, 3, 1, 4, rng);
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm, rng);
    std::vector<Colour> cperm{1, 2, 3};
    shuffle(cperm, rng);
    CHECK(find_php(g).has_value() == find_php(relabel(g, perm, cperm)).has_value());
  }
}

TEST_CASE("proper cycles on a vertex set") {
  const auto rc = ColouredMultigraph::rainbow_complete(4, 2);
  const std::vector<Vertex> s{0, 1, 2, 3};
  const auto cyc = find_proper_cycle_on(rc, s);
  REQUIRE(cyc);
  CHECK(validate(rc, *cyc));

  GraphBuilder tri(3, 2);
  tri.add_edge(0, 1, 1);
  tri.add_edge(1, 2, 1);
  tri.add_edge(0, 2, 1);
  const std::vector<Vertex> t{0, 1, 2};
  CHECK_FALSE(exists_proper_cycle_on(tri.build(), t));

  const std::vector<Vertex> two{0, 1};
  CHECK(error_kind_of([&] { exists_proper_cycle_on(rc, two); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("cycle search matches brute force and is monotone") {
  SplitMix64 rng(31);
  for (int t = 0; t < 300; ++t) {
    const int n = 7;
    auto g = random_graph(n, 2 + static_cast<int>(rng.below(2)), 1, 3, rng);
    std::vector<Vertex> s;
    for (Vertex v = 0; v < n; ++v) {
      if (rng.chance(3, 4)) s.push_back(v);
    }
    if (s.size() < 3) continue;
    const bool fast = exists_proper_cycle_on(g, s);
    CHECK(fast == brute_cycle_exists(g, s));
    if (auto cyc = find_proper_cycle_on(g, s)) CHECK(validate(g, *cyc));
    // Adding an edge inside S never destroys a cycle.
    GraphBuilder more(g);
    more.insert_edge(s[0], s[1], 1 + static_cast<Colour>(rng.below(static_cast<std::uint64_t>(g.c()))));
    if (fast) CHECK(exists_proper_cycle_on(more.build(), s));
  }
}

TEST_CASE("longest compatible path") {
  // x1 y1 x2 y2 x3 y3 with red matching edges and blue connectors.
  GraphBuilder b(6, 2);
  for (int i = 0; i < 3; ++i) b.add_edge(2 * i, 2 * i + 1, 1);
  b.add_edge(1, 2, 2);
  b.add_edge(3, 4, 2);
  const auto g = b.build();
  Matching m{1, {{0, 1}, {2, 3}, {4, 5}}};
  const auto p = longest_compatible_path(g, m);
  CHECK(p.vertices.size() == 6);
  CHECK(validate(g, p));

  Matching single{1, {{0, 1}}};
  CHECK(longest_compatible_path(g, single).vertices.size() == 2);
  CHECK(error_kind_of([&] { longest_compatible_path(g, Matching{1, {}}); }) == ErrorKind::EmptyMatching);
  Matching bad{1, {{1, 2}}};
  CHECK(error_kind_of([&] { longest_compatible_path(g, bad); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("longest compatible path matches brute force at n = 10") {
  SplitMix64 rng(10);
  for (int t = 0; t < 100; ++t) {
    GraphBuilder b(10, 3);
    Matching m{1, {}};
    for (int i = 0; i < 5; ++i) {
      b.add_edge(2 * i, 2 * i + 1, 1);
      m.pairs.emplace_back(2 * i, 2 * i + 1);
    }
    for (Vertex u = 0; u < 10; ++u) {
      for (Vertex v = u + 1; v < 10; ++v) {
        for (Colour k = 1; k <= 3; ++k) {
          if (rng.chance(1, 6)) b.insert_edge(u, v, k);
        }
      }
    }
    const auto g = b.build();
    const auto p = longest_compatible_path(g, m);
    CHECK(validate(g, p));
    CHECK(static_cast<int>(p.vertices.size()) == brute_compatible_length(g, m));
  }
}
