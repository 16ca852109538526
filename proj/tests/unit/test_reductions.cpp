#include <doctest.h>

#include <bit>
#include <vector>

#include "ecmg/reductions.hpp"
#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using namespace ecmg::testing;

namespace {

std::size_t overlap(const ColouredMultigraph& g, Colour j, Colour l) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) count += g.has_edge(u, v, j) && g.has_edge(u, v, l);
  }
  return count;
}

}  // namespace

TEST_CASE("merge drops exactly the doubled pairs") {
  GraphBuilder b(6, 4);
  for (Vertex u = 0; u < 6; ++u) {
    for (Vertex v = u + 1; v < 6; ++v) {
      b.add_edge(u, v, 1);
      if ((u + v) % 2 == 0) b.add_edge(u, v, 4);
      if (u == 0) b.add_edge(u, v, 2);
    }
  }
  const auto g = b.build();
  const auto [merged, rec] = merge_colour(g, 4, 1);
  CHECK(merged.c() == 3);
  CHECK(merged.m() == g.m() - g.colour_class_size(4));
  CHECK(rec.recoloured.empty());
  CHECK(is_connected(merged));

  const auto [merged2, rec2] = merge_colour(g, 4, 3);
  CHECK(merged2.m() == g.m());
  CHECK(rec2.deleted.empty());
  CHECK(rec2.recoloured.size() == g.colour_class_size(4));

  CHECK(error_kind_of([] { merge_least_frequent_colour(ColouredMultigraph::rainbow_complete(4, 2)); }) ==
        ErrorKind::TooFewColours);
}

TEST_CASE("merge keeps the edge-count bound and the rainbow degree") {
  SamplerSpec spec;
  spec.n = 10;
  spec.c = 4;
  spec.m_min = spec.m_max = 4 * 10 + 1;
  spec.require_connected = true;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    spec.seed = seed;
    const auto g = sample(spec);
    const auto [h, rec] = merge_least_frequent_colour(g);
    CHECK(h.m() >= 31);
    CHECK(h.m() == g.m() - overlap(g, rec.merged, rec.target));
    CHECK(is_connected(h));
    if (rainbow_degree_graph(g) == 4) CHECK(rainbow_degree_graph(h) == 3);
  }
}

TEST_CASE("merge lift") {
  GraphBuilder b(3, 3);
  b.add_edge(0, 1, 3);
  b.add_edge(1, 2, 2);
  const auto g = b.build();
  const auto [h, rec] = merge_colour(g, 3, 1);
  // 0-1 now carries colour 1 in h.
  const ProperPath reduced{{0, 1, 2}, {1, 2}};
  REQUIRE(validate(h, reduced));
  const auto lifted = lift_merged_path(reduced, rec, g);
  CHECK(lifted.colours == std::vector<Colour>{3, 2});
  CHECK(validate(g, lifted));

  const ProperPath untouched{{1, 2}, {2}};
  CHECK(lift_merged_path(untouched, rec, g) == untouched);
}

TEST_CASE("merge round trips") {
  SplitMix64 rng(17);
  int lifted = 0;
  for (int t = 0; t < 300; ++t) {
    const auto g = random_graph(8, 4, 1, 3, rng);
    if (!is_connected(g)) continue;
    const auto [h, rec] = merge_least_frequent_colour(g);
    if (auto p = find_php(h)) {
      CHECK(validate(g, lift_merged_path(*p, rec, g)));
      ++lifted;
    }
  }
  CHECK(lifted > 0);
}

TEST_CASE("two-vertex contraction") {
  // x = 0 has the unique neighbour y = 1.
  GraphBuilder b(4, 3);
  b.add_edge(0, 1, 2);
  b.add_edge(1, 2, 1);
  b.add_edge(1, 2, 3);
  b.add_edge(1, 3, 2);
  b.add_edge(2, 3, 1);
  const auto g = b.build();
  const auto [h, rec] = contract_two(g, 0, 1, StripChoice::RemoveBR);
  CHECK(h.n() == 3);
  CHECK(rec.kept == 3);
  const Vertex s = rec.s;
  for (Vertex v = 0; v < h.n(); ++v) {
    if (v == s) continue;
    CHECK((h.colours(s, v).bits() & ~ColourSet::single(3).bits()) == 0);
  }
  CHECK(g.m() - h.m() == rec.edges_deleted);

  GraphBuilder two(2, 3);
  two.add_edge(0, 1, 1);
  const auto tiny = two.build();
  const auto [t, trec] = contract_two(tiny, 0, 1);
  const auto lifted = lift_two(ProperPath{{trec.s}, {}}, trec, tiny);
  CHECK(lifted.vertices == std::vector<Vertex>{0, 1});
  CHECK(lifted.colours == std::vector<Colour>{1});

  GraphBuilder bad(4, 3);
  bad.add_edge(0, 1, 1);
  bad.add_edge(0, 2, 2);
  bad.add_edge(1, 2, 1);
  bad.add_edge(2, 3, 1);
  CHECK(error_kind_of([&] { contract_two(bad.build(), 0, 1); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("two-vertex contraction of a monochromatic vertex counts its deletions") {
  SplitMix64 rng(23);
  for (int t = 0; t < 100; ++t) {
    GraphBuilder b(random_graph(9, 3, 1, 2, rng));
    b.isolate(0);
    for (Vertex v = 1; v < 9; ++v) b.add_edge(0, v, 2);
    const auto g = b.build();
    const Vertex y = 1 + static_cast<Vertex>(rng.below(8));
    const auto [h, rec] = contract_two(g, 0, y);
    // Independent recount: x's edges, plus y's edges in the stripped classes.
    std::size_t expected = static_cast<std::size_t>(g.degree(0));
    for (Colour k : rec.stripped) {
      expected += static_cast<std::size_t>(std::popcount(g.colour_neighbours(y, k) & ~vertex_bit(0)));
    }
    CHECK(g.m() - h.m() == expected);
    CHECK(rec.edges_deleted == expected);
    if (auto p = find_php(h)) CHECK(is_proper_hamiltonian(g, lift_two(*p, rec, g)));
  }
}

TEST_CASE("three-vertex contraction neighbourhoods") {
  SplitMix64 rng(41);
  for (int t = 0; t < 200; ++t) {
    GraphBuilder b(random_graph(9, 3, 1, 2, rng));
    b.insert_edge(0, 1, 2);
    b.insert_edge(0, 2, 1);
    const auto g = b.build();
    const auto [h, rec] = contract_three(g, 0, 1, 2, 2, 1);
    CHECK(h.n() == 7);
    const VertexMask trio = vertex_bit(0) | vertex_bit(1) | vertex_bit(2);
    auto mapped = [&](VertexMask reduced) {
      VertexMask out = 0;
      for (Vertex v = 0; v < h.n(); ++v) {
        if ((reduced >> v) & 1u) out |= vertex_bit(rec.new_to_old[static_cast<std::size_t>(v)]);
      }
      return out;
    };
    CHECK(mapped(h.colour_neighbours(rec.s, 2)) == (g.colour_neighbours(2, 2) & ~trio));
    CHECK(mapped(h.colour_neighbours(rec.s, 1)) == (g.colour_neighbours(1, 1) & ~trio));
    CHECK(mapped(h.colour_neighbours(rec.s, 3)) == (g.colour_neighbours(1, 3) & g.colour_neighbours(2, 3) & ~trio));
    if (auto p = find_php(h)) CHECK(is_proper_hamiltonian(g, lift_three(*p, rec, g)));
  }
}

TEST_CASE("three-vertex lift orientation") {
  // x=0, y=1, z=2, u=3, w=4; xy blue(2), xz red(1).
  GraphBuilder b(5, 3);
  b.add_edge(0, 1, 2);
  b.add_edge(0, 2, 1);
  b.add_edge(1, 3, 1);
  b.add_edge(1, 4, 3);
  b.add_edge(2, 4, 3);
  const auto g = b.build();
  const auto [h, rec] = contract_three(g, 0, 1, 2, 2, 1);
  REQUIRE(h.n() == 3);
  const Vertex u = 0;
  const Vertex w = 1;
  const ProperPath reduced{{u, rec.s, w}, {1, 3}};
  REQUIRE(validate(h, reduced));
  const auto lifted = lift_three(reduced, rec, g);
  CHECK(lifted.vertices == std::vector<Vertex>{3, 1, 0, 2, 4});
  CHECK(lifted.colours == std::vector<Colour>{1, 2, 1, 3});

  const ProperPath ending{{u, rec.s}, {1}};
  const auto lifted_end = lift_three(ending, rec, g);
  CHECK(lifted_end.vertices == std::vector<Vertex>{3, 1, 0, 2});

  CHECK(error_kind_of([&] { contract_three(g, 0, 1, 3, 2, 1); }) == ErrorKind::PreconditionViolated);
}
