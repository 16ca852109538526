#include "ecmg/search.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "ecmg/error.hpp"

namespace ecmg {

namespace {

// DP cells hold the set of colours with which a path can arrive at its last
// vertex. Bits 0..14 are colours 1..15; bit 15 marks "path start, no edge yet".
using Reach = std::uint16_t;
constexpr Reach kStart = 0x8000;

static_assert(kMaxColours <= 15, "colour bits must leave room for the start marker");

std::uint64_t saturating_states(std::uint64_t width, int exponent) {
  constexpr std::uint64_t kCap = ~std::uint64_t{0};
  if (exponent >= 63) return kCap;
  const std::uint64_t subsets = std::uint64_t{1} << exponent;
  if (width != 0 && subsets > kCap / width) return kCap;
  return subsets * width;
}

void check_budget(std::uint64_t states, SearchBudget budget, const char* what) {
  if (states > budget.max_states) {
    fail(ErrorKind::BudgetExceeded, std::string(what) + " needs " + std::to_string(states) +
                                        " states, budget is " + std::to_string(budget.max_states));
  }
}

/// Colours usable for the next edge given the arrival set: anything differing
/// from the incoming colour. If more than one arrival colour is possible,
/// every colour is usable.
constexpr Reach blocked_by(Reach arrival) noexcept {
  return std::popcount(arrival) == 1 ? arrival : Reach{0};
}

Colour lowest_colour(Reach bits) noexcept {
  return std::countr_zero(static_cast<unsigned>(bits & static_cast<Reach>(~kStart))) + 1;
}

Reach colour_bit(Colour k) noexcept { return static_cast<Reach>(1u << (k - 1)); }

}  // namespace

std::uint64_t php_state_count(int n, int c) {
  return saturating_states(static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(c + 1), n);
}

std::optional<ProperPath> find_php(const ColouredMultigraph& g, SearchBudget budget) {
  const int n = g.n();
  if (n == 1) return ProperPath{{0}, {}};
  check_budget(php_state_count(n, g.c()), budget, "proper Hamiltonian path search");
  if (!is_connected(g)) return std::nullopt;

  const auto width = static_cast<std::size_t>(n);
  const std::size_t masks = std::size_t{1} << n;
  std::vector<Reach> reach(masks * width, 0);
  auto cell = [&](std::size_t mask, Vertex v) -> Reach& {
    return reach[mask * width + static_cast<std::size_t>(v)];
  };

  for (Vertex v = 0; v < n; ++v) cell(vertex_bit(v), v) = kStart;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (VertexMask ends = mask; ends != 0; ends &= ends - 1) {
      const Vertex last = std::countr_zero(ends);
      const Reach arrival = cell(mask, last);
      if (arrival == 0) continue;
      const Reach blocked = blocked_by(arrival);
      for (VertexMask next = g.neighbours(last) & ~VertexMask{mask}; next != 0; next &= next - 1) {
        const Vertex v = std::countr_zero(next);
        const auto usable = static_cast<Reach>(g.colours(last, v).bits() & ~blocked);
        if (usable != 0) cell(mask | vertex_bit(v), v) |= usable;
      }
    }
  }

  const std::size_t full = masks - 1;
  Vertex end = -1;
  for (Vertex v = 0; v < n && end < 0; ++v) {
    if (cell(full, v) != 0) end = v;
  }
  if (end < 0) return std::nullopt;

  // Walk backwards: at (mask, v) arriving with colour k, pick a predecessor u
  // whose own arrival set contains a colour other than k.
  std::vector<Vertex> vertices{end};
  std::vector<Colour> colours;
  std::size_t mask = full;
  Vertex v = end;
  Colour k = lowest_colour(cell(full, end));
  while (std::popcount(mask) > 1) {
    const std::size_t prev = mask & ~vertex_bit(v);
    bool stepped = false;
    for (VertexMask cand = VertexMask{prev} & g.neighbours(v); cand != 0; cand &= cand - 1) {
      const Vertex u = std::countr_zero(cand);
      if (!g.has_edge(u, v, k)) continue;
      const auto other = static_cast<Reach>(cell(prev, u) & ~colour_bit(k));
      if (other == 0) continue;
      vertices.push_back(u);
      colours.push_back(k);
      if ((other & ~kStart) != 0) k = lowest_colour(other);
      mask = prev;
      v = u;
      stepped = true;
      break;
    }
    if (!stepped) fail(ErrorKind::InvariantViolated, "proper path reconstruction stalled");
  }
  // vertices runs end -> start; report it starting from the smaller endpoint.
  if (vertices.front() > vertices.back()) {
    std::reverse(vertices.begin(), vertices.end());
    std::reverse(colours.begin(), colours.end());
  }
  return ProperPath{std::move(vertices), std::move(colours)};
}

std::optional<ProperCycle> find_proper_cycle_on(const ColouredMultigraph& g,
                                                std::span<const Vertex> vertices,
                                                SearchBudget budget) {
  const int s = static_cast<int>(vertices.size());
  if (s < 3) fail(ErrorKind::PreconditionViolated, "proper cycles need at least 3 vertices");
  VertexMask seen = 0;
  for (Vertex v : vertices) {
    if (v < 0 || v >= g.n()) fail(ErrorKind::VertexOutOfRange, "cycle vertex " + std::to_string(v));
    if ((seen & vertex_bit(v)) != 0) fail(ErrorKind::PreconditionViolated, "repeated cycle vertex");
    seen |= vertex_bit(v);
  }
  check_budget(saturating_states(static_cast<std::uint64_t>(s) * static_cast<std::uint64_t>(g.c() + 1), s),
               budget, "proper cycle search");

  const auto width = static_cast<std::size_t>(s);
  std::vector<Reach> local(width * width, 0);
  std::vector<VertexMask> local_adj(width, 0);
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (i == j) continue;
      const Reach bits = g.colours(vertices[static_cast<std::size_t>(i)], vertices[static_cast<std::size_t>(j)]).bits();
      local[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)] = bits;
      if (bits != 0) local_adj[static_cast<std::size_t>(i)] |= vertex_bit(j);
    }
  }
  auto pair = [&](int i, int j) { return local[static_cast<std::size_t>(i) * width + static_cast<std::size_t>(j)]; };

  const std::size_t masks = std::size_t{1} << s;
  std::vector<Reach> reach(masks * width);
  auto cell = [&](std::size_t mask, int v) -> Reach& { return reach[mask * width + static_cast<std::size_t>(v)]; };

  // Local vertex 0 is the fixed start; the first edge colour is fixed per pass
  // so the closing edge can be checked against it.
  for (Colour first = 1; first <= g.c(); ++first) {
    std::fill(reach.begin(), reach.end(), 0);
    const Reach first_bit = colour_bit(first);
    for (int v = 1; v < s; ++v) {
      if ((pair(0, v) & first_bit) != 0) cell(1u | vertex_bit(v), v) = first_bit;
    }
    for (std::size_t mask = 3; mask < masks; mask += 2) {
      for (VertexMask ends = mask & ~std::size_t{1}; ends != 0; ends &= ends - 1) {
        const int last = std::countr_zero(ends);
        const Reach arrival = cell(mask, last);
        if (arrival == 0) continue;
        const Reach blocked = blocked_by(arrival);
        for (VertexMask next = local_adj[static_cast<std::size_t>(last)] & ~VertexMask{mask}; next != 0;
             next &= next - 1) {
          const int v = std::countr_zero(next);
          const auto usable = static_cast<Reach>(pair(last, v) & ~blocked);
          if (usable != 0) cell(mask | vertex_bit(v), v) |= usable;
        }
      }
    }

    const std::size_t full = masks - 1;
    for (int end = 1; end < s; ++end) {
      const Reach arrival = cell(full, end);
      if (arrival == 0) continue;
      const auto closing = static_cast<Reach>(pair(end, 0) & ~first_bit & ~blocked_by(arrival));
      if (closing == 0) continue;

      const Colour close_colour = lowest_colour(closing);
      std::vector<int> order{end};
      std::vector<Colour> colours;  // colours[i] joins order[i+1] -> order[i] (reversed later)
      Colour k = lowest_colour(static_cast<Reach>(arrival & ~colour_bit(close_colour)));
      std::size_t mask = full;
      int v = end;
      while (true) {
        const std::size_t prev = mask & ~vertex_bit(v);
        if (prev == 1) {
          colours.push_back(k);  // equals `first`
          order.push_back(0);
          break;
        }
        bool stepped = false;
        for (VertexMask cand = VertexMask{prev} & ~VertexMask{1} & local_adj[static_cast<std::size_t>(v)]; cand != 0;
             cand &= cand - 1) {
          const int u = std::countr_zero(cand);
          if ((pair(u, v) & colour_bit(k)) == 0) continue;
          const auto other = static_cast<Reach>(cell(prev, u) & ~colour_bit(k));
          if (other == 0) continue;
          order.push_back(u);
          colours.push_back(k);
          k = lowest_colour(other);
          mask = prev;
          v = u;
          stepped = true;
          break;
        }
        if (!stepped) fail(ErrorKind::InvariantViolated, "proper cycle reconstruction stalled");
      }
      std::reverse(order.begin(), order.end());
      std::reverse(colours.begin(), colours.end());
      colours.push_back(close_colour);
      ProperCycle cycle;
      for (int i : order) cycle.vertices.push_back(vertices[static_cast<std::size_t>(i)]);
      cycle.colours = std::move(colours);
      return cycle;
    }
  }
  return std::nullopt;
}

bool exists_proper_cycle_on(const ColouredMultigraph& g, std::span<const Vertex> vertices,
                            SearchBudget budget) {
  return find_proper_cycle_on(g, vertices, budget).has_value();
}

ProperPath longest_compatible_path(const ColouredMultigraph& g, const Matching& matching,
                                   SearchBudget budget) {
  if (matching.empty()) fail(ErrorKind::EmptyMatching, "compatible paths need a matching edge");
  if (!is_valid_matching(g, matching)) {
    fail(ErrorKind::PreconditionViolated, "matching is not a colour matching of the graph");
  }
  const int q = static_cast<int>(matching.size());
  const auto width = static_cast<std::size_t>(2 * q);
  check_budget(saturating_states(width, q), budget, "compatible path search");

  const Colour red = matching.colour;
  const auto off_colour = static_cast<ColourSet::Bits>(~ColourSet::bit(red));
  // Orientation 0 traverses pairs[i] as first -> second, orientation 1 reversed.
  auto entry = [&](int state) {
    const auto& e = matching.pairs[static_cast<std::size_t>(state / 2)];
    return state % 2 == 0 ? e.first : e.second;
  };
  auto exit = [&](int state) {
    const auto& e = matching.pairs[static_cast<std::size_t>(state / 2)];
    return state % 2 == 0 ? e.second : e.first;
  };
  auto connects = [&](Vertex x, Vertex y) { return (g.colours(x, y).bits() & off_colour) != 0; };

  constexpr std::int16_t kUnreached = -2;
  constexpr std::int16_t kRoot = -1;
  const std::size_t masks = std::size_t{1} << q;
  std::vector<std::int16_t> parent(masks * width, kUnreached);
  auto cell = [&](std::size_t mask, int state) -> std::int16_t& {
    return parent[mask * width + static_cast<std::size_t>(state)];
  };

  for (int state = 0; state < 2 * q; ++state) cell(std::size_t{1} << (state / 2), state) = kRoot;

  std::size_t best_mask = 1;
  int best_state = 0;
  int best_len = 1;
  for (std::size_t mask = 1; mask < masks; ++mask) {
    for (int state = 0; state < 2 * q; ++state) {
      if (((mask >> (state / 2)) & 1u) == 0 || cell(mask, state) == kUnreached) continue;
      const int len = std::popcount(mask);
      if (len > best_len) {
        best_len = len;
        best_mask = mask;
        best_state = state;
      }
      const Vertex from = exit(state);
      for (int next = 0; next < 2 * q; ++next) {
        if (((mask >> (next / 2)) & 1u) != 0) continue;
        const std::size_t grown = mask | (std::size_t{1} << (next / 2));
        if (cell(grown, next) != kUnreached || !connects(from, entry(next))) continue;
        cell(grown, next) = static_cast<std::int16_t>(state);
      }
    }
  }

  std::vector<int> chain;
  std::size_t mask = best_mask;
  int state = best_state;
  while (true) {
    chain.push_back(state);
    const std::int16_t prev = cell(mask, state);
    if (prev == kRoot) break;
    mask &= ~(std::size_t{1} << (state / 2));
    state = prev;
  }
  std::reverse(chain.begin(), chain.end());

  ProperPath path;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i > 0) {
      const Vertex from = path.vertices.back();
      const Vertex to = entry(chain[i]);
      path.colours.push_back(ColourSet(static_cast<ColourSet::Bits>(g.colours(from, to).bits() & off_colour)).lowest());
    }
    path.vertices.push_back(entry(chain[i]));
    path.vertices.push_back(exit(chain[i]));
    path.colours.push_back(red);
  }
  return path;
}

bool validate(const ColouredMultigraph& g, const ProperPath& path) {
  if (path.vertices.empty() || path.colours.size() + 1 != path.vertices.size()) return false;
  VertexMask seen = 0;
  for (Vertex v : path.vertices) {
    if (v < 0 || v >= g.n() || (seen & vertex_bit(v)) != 0) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < path.colours.size(); ++i) {
    const Colour k = path.colours[i];
    if (k < 1 || k > g.c()) return false;
    if (!g.has_edge(path.vertices[i], path.vertices[i + 1], k)) return false;
    if (i > 0 && path.colours[i - 1] == k) return false;
  }
  return true;
}

bool is_proper_hamiltonian(const ColouredMultigraph& g, const ProperPath& path) {
  return static_cast<int>(path.vertices.size()) == g.n() && validate(g, path);
}

bool validate(const ColouredMultigraph& g, const ProperCycle& cycle) {
  const std::size_t len = cycle.vertices.size();
  if (len < 3 || cycle.colours.size() != len) return false;
  VertexMask seen = 0;
  for (Vertex v : cycle.vertices) {
    if (v < 0 || v >= g.n() || (seen & vertex_bit(v)) != 0) return false;
    seen |= vertex_bit(v);
  }
  for (std::size_t i = 0; i < len; ++i) {
    const Colour k = cycle.colours[i];
    if (k < 1 || k > g.c()) return false;
    if (!g.has_edge(cycle.vertices[i], cycle.vertices[(i + 1) % len], k)) return false;
    if (cycle.colours[(i + 1) % len] == k) return false;
  }
  return true;
}

}  // namespace ecmg
