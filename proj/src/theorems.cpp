#include "ecmg/theorems.hpp"

#include <string>

#include "ecmg/error.hpp"

namespace ecmg {

std::string_view to_string(TheoremId id) noexcept {
  switch (id) {
    case TheoremId::S2: return "s2";
    case TheoremId::RD2: return "rd2";
    case TheoremId::General: return "general";
    case TheoremId::Connected: return "connected";
    case TheoremId::Rainbow: return "rainbow";
  }
  return "unknown";
}

std::optional<TheoremId> parse_theorem(std::string_view name) noexcept {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == name) return id;
  }
  return std::nullopt;
}

int default_colours(TheoremId id) noexcept {
  return id == TheoremId::S2 || id == TheoremId::RD2 ? 2 : 3;
}

bool in_stated_range(TheoremId id, int n, int c) noexcept {
  switch (id) {
    case TheoremId::S2: return n >= 8 && c == 2;
    case TheoremId::RD2: return n >= 14 && c == 2;
    case TheoremId::General: return n >= 2 && c >= 3;
    case TheoremId::Connected: return n >= 9 && c >= 3 && 2 * c < n;
    case TheoremId::Rainbow: return n >= 11 && c >= 3;
  }
  return false;
}

std::int64_t threshold(TheoremId id, int n, int c) {
  if (!in_stated_range(id, n, c)) {
    fail(ErrorKind::OutOfStatedRange, std::string(to_string(id)) + " is not stated for n=" + std::to_string(n) +
                                          ", c=" + std::to_string(c));
  }
  const std::int64_t cc = c;
  switch (id) {
    case TheoremId::S2: return choose2(n) + choose2(n - 2) + 1;
    case TheoremId::RD2: return choose2(n) + choose2(n - 3) + 4;
    case TheoremId::General: return cc * choose2(n - 1) + 1;
    case TheoremId::Connected: return cc * choose2(n - 2) + n;
    case TheoremId::Rainbow: return cc * choose2(n - 2) + 2 * cc + 1;
  }
  fail(ErrorKind::InvalidArgument, "unknown theorem");
}

bool hypothesis_holds(const ColouredMultigraph& g, TheoremId id) {
  if (!in_stated_range(id, g.n(), g.c())) return false;
  if (static_cast<std::int64_t>(g.m()) < threshold(id, g.n(), g.c())) return false;
  switch (id) {
    case TheoremId::RD2: return rainbow_degree_graph(g) == 2;
    case TheoremId::Rainbow: return rainbow_degree_graph(g) == g.c();
    case TheoremId::Connected: return is_connected(g);
    case TheoremId::S2:
    case TheoremId::General: return true;
  }
  return false;
}

bool extremal_defined(TheoremId id, int n, int c) noexcept {
  switch (id) {
    case TheoremId::S2: return c == 2 && n >= 9 && n % 2 == 1;
    case TheoremId::RD2: return c == 2 && n >= 15 && n % 2 == 1;
    case TheoremId::General: return n >= 2 && c >= 3 && c <= kMaxColours;
    case TheoremId::Connected: return n >= 9 && c >= 3 && 2 * c < n;
    case TheoremId::Rainbow: return n >= 11 && c >= 3;
  }
  return false;
}

namespace {

/// Rainbow complete block on vertices 0..k-1.
void add_rainbow_block(GraphBuilder& builder, int k) {
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) builder.set_colours(u, v, ColourSet::all(builder.c()));
  }
}

constexpr Colour kRed = 1;
constexpr Colour kBlue = 2;

}  // namespace

ColouredMultigraph extremal(TheoremId id, int n, int c) {
  if (!extremal_defined(id, n, c) || n > kMaxVertices) {
    fail(ErrorKind::OutOfStatedRange, "no " + std::string(to_string(id)) + " construction for n=" +
                                          std::to_string(n) + ", c=" + std::to_string(c));
  }
  GraphBuilder builder(n, c);
  switch (id) {
    case TheoremId::S2: {
      // Rainbow complete on n-2 vertices; x1, x2 joined to each other and to
      // the block by red edges only. No blue matching of size (n-1)/2.
      const int block = n - 2;
      add_rainbow_block(builder, block);
      const Vertex x1 = block;
      const Vertex x2 = block + 1;
      builder.add_edge(x1, x2, kRed);
      for (Vertex v = 0; v < block; ++v) {
        builder.add_edge(v, x1, kRed);
        builder.add_edge(v, x2, kRed);
      }
      break;
    }
    case TheoremId::RD2: {
      // Complete blue A on n-3 vertices, v1..v3 hung on one vertex of A in
      // blue, then a complete red graph on all n vertices.
      const int block = n - 3;
      for (Vertex u = 0; u < block; ++u) {
        for (Vertex v = u + 1; v < block; ++v) builder.add_edge(u, v, kBlue);
      }
      const Vertex hub = 0;
      for (Vertex leaf = block; leaf < n; ++leaf) builder.add_edge(hub, leaf, kBlue);
      for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) builder.add_edge(u, v, kRed);
      }
      break;
    }
    case TheoremId::General:
      // Rainbow complete on n-1 vertices plus an isolated vertex.
      add_rainbow_block(builder, n - 1);
      break;
    case TheoremId::Connected: {
      // Rainbow complete on n-2 vertices; y joined to the block and to x,
      // all in one colour, so x hangs off a monochromatic vertex.
      const int block = n - 2;
      add_rainbow_block(builder, block);
      const Vertex x = block;
      const Vertex y = block + 1;
      builder.add_edge(x, y, kRed);
      for (Vertex v = 0; v < block; ++v) builder.add_edge(v, y, kRed);
      break;
    }
    case TheoremId::Rainbow: {
      // Rainbow complete A on n-2 vertices; v1, v2 joined to one vertex of A
      // in every colour. Both must be endpoints adjacent to the same vertex.
      const int block = n - 2;
      add_rainbow_block(builder, block);
      const Vertex hub = 0;
      builder.set_colours(hub, block, ColourSet::all(c));
      builder.set_colours(hub, block + 1, ColourSet::all(c));
      break;
    }
  }
  ColouredMultigraph g = builder.build();
  if (static_cast<std::int64_t>(g.m()) != threshold(id, n, c) - 1) {
    fail(ErrorKind::InvariantViolated, "extremal construction has the wrong edge count");
  }
  return g;
}

std::string_view to_string(MatchingCase which) noexcept {
  switch (which) {
    case MatchingCase::EvenFull: return "even-full";
    case MatchingCase::Odd: return "odd";
    case MatchingCase::EvenDeficient: return "even-deficient";
  }
  return "unknown";
}

std::optional<MatchingCase> parse_matching_case(std::string_view name) noexcept {
  for (MatchingCase which : {MatchingCase::EvenFull, MatchingCase::Odd, MatchingCase::EvenDeficient}) {
    if (to_string(which) == name) return which;
  }
  return std::nullopt;
}

namespace {

void check_parity(int n, MatchingCase which) {
  const bool even = n % 2 == 0;
  if (even != (which != MatchingCase::Odd)) {
    fail(ErrorKind::ParityMismatch, "n=" + std::to_string(n) + " does not fit case " + std::string(to_string(which)));
  }
}

}  // namespace

int matching_size(int n, MatchingCase which) {
  check_parity(n, which);
  switch (which) {
    case MatchingCase::EvenFull: return n / 2;
    case MatchingCase::Odd: return (n - 1) / 2;
    case MatchingCase::EvenDeficient: return (n - 2) / 2;
  }
  return 0;
}

int path_limit(int n, MatchingCase which) {
  check_parity(n, which);
  switch (which) {
    case MatchingCase::EvenFull: return n;
    case MatchingCase::Odd: return n - 1;
    case MatchingCase::EvenDeficient: return n - 2;
  }
  return 0;
}

std::int64_t f_lower_bound(int n, int c, MatchingCase which) {
  check_parity(n, which);
  if (c < 2) fail(ErrorKind::InvalidArgument, "need at least two colours");
  const std::int64_t factor = c - 1;
  switch (which) {
    case MatchingCase::EvenFull: return (2 * std::int64_t{n} - 4) * factor;
    case MatchingCase::Odd: return (2 * std::int64_t{n} - 6) * factor;
    case MatchingCase::EvenDeficient: return (2 * std::int64_t{n} - 8) * factor;
  }
  return 0;
}

}  // namespace ecmg
