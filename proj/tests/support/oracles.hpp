#pragma once

// Test-only brute-force references. Nothing here calls into the DP searches
// or the blossom matcher.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/graph.hpp"
#include "ecmg/sampler.hpp"

namespace ecmg::testing {

/// Largest matching by exhaustive recursion over the lowest unmatched vertex.
inline int brute_matching_size(const SimpleGraph& h) {
  const int n = h.n();
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int from) -> int {
    while (from < n && used[static_cast<std::size_t>(from)]) ++from;
    if (from >= n) return 0;
    used[static_cast<std::size_t>(from)] = true;
    int best = self(self, from + 1);  // leave `from` unmatched
    for (int v = from + 1; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)] || !h.has_edge(from, v)) continue;
      used[static_cast<std::size_t>(v)] = true;
      best = std::max(best, 1 + self(self, from + 1));
      used[static_cast<std::size_t>(v)] = false;
    }
    used[static_cast<std::size_t>(from)] = false;
    return best;
  };
  return rec(rec, 0);
}

/// Whether the vertex sequence admits a proper colouring of its edges
/// (closed = also the wrap-around edge).
inline bool colourable(const ColouredMultigraph& g, const std::vector<Vertex>& order, bool closed) {
  const std::size_t k = order.size();
  const std::size_t edges = closed ? k : k - 1;
  std::vector<Colour> chosen(edges, 0);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == edges) return !closed || chosen.front() != chosen.back();
    for (Colour c = 1; c <= g.c(); ++c) {
      if (i > 0 && chosen[i - 1] == c) continue;
      if (!g.has_edge(order[i], order[(i + 1) % k], c)) continue;
      chosen[i] = c;
      if (self(self, i + 1)) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

/// Proper cycle on exactly `vertices`: all cyclic orders with the first
/// vertex fixed.
inline bool brute_cycle_exists(const ColouredMultigraph& g, std::vector<Vertex> vertices) {
  std::sort(vertices.begin() + 1, vertices.end());
  do {
    if (colourable(g, vertices, true)) return true;
  } while (std::next_permutation(vertices.begin() + 1, vertices.end()));
  return false;
}

/// Longest compatible path length in vertices: every ordered subset of the
/// matching edges, every orientation, connectors of any non-matching colour.
inline int brute_compatible_length(const ColouredMultigraph& g, const Matching& m) {
  const int k = static_cast<int>(m.size());
  int best = 0;
  std::vector<int> idx(static_cast<std::size_t>(k));
  std::iota(idx.begin(), idx.end(), 0);
  for (unsigned subset = 1; subset < (1u << k); ++subset) {
    std::vector<int> chosen;
    for (int i = 0; i < k; ++i) {
      if (subset & (1u << i)) chosen.push_back(i);
    }
    const int len = 2 * static_cast<int>(chosen.size());
    if (len <= best) continue;
    bool found = false;
    do {
      for (unsigned orient = 0; orient < (1u << chosen.size()) && !found; ++orient) {
        // Each connector needs a colour that is not the matching colour.
        bool ok = true;
        for (std::size_t i = 0; i + 1 < chosen.size() && ok; ++i) {
          const auto& a = m.pairs[static_cast<std::size_t>(chosen[i])];
          const auto& b = m.pairs[static_cast<std::size_t>(chosen[i + 1])];
          const Vertex tail = (orient >> i) & 1u ? a.first : a.second;
          const Vertex head = (orient >> (i + 1)) & 1u ? b.second : b.first;
          ok = !g.colours(tail, head).without(ColourSet::single(m.colour)).empty();
        }
        found = ok;
      }
    } while (!found && std::next_permutation(chosen.begin(), chosen.end()));
    if (found) best = len;
  }
  return best;
}

/// Random multigraph with each slot present with probability num/den.
inline ColouredMultigraph random_graph(int n, int c, std::uint64_t num, std::uint64_t den, SplitMix64& rng) {
  GraphBuilder b(n, c);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      for (Colour k = 1; k <= c; ++k) {
        if (rng.chance(num, den)) b.add_edge(u, v, k);
      }
    }
  }
  return b.build();
}

/// g with vertices relabelled by perm (old v -> perm[v]) and colours by
/// colour_perm (old k -> colour_perm[k - 1]).
inline ColouredMultigraph relabel(const ColouredMultigraph& g, const std::vector<Vertex>& perm,
                                  const std::vector<Colour>& colour_perm) {
  GraphBuilder b(g.n(), g.c());
  for (const Edge& e : g.edges()) {
    b.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)],
               colour_perm[static_cast<std::size_t>(e.colour - 1)]);
  }
  return b.build();
}

template <typename T>
void shuffle(std::vector<T>& items, SplitMix64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[rng.below(i)]);
}

template <typename F>
std::optional<ErrorKind> error_kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

}  // namespace ecmg::testing
