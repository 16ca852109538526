#include "ecmg/graph.hpp"

#include <algorithm>
#include <string>

#include "ecmg/error.hpp"

namespace ecmg {

namespace {

void check_shape(int n, int c) {
  if (n < 1 || n > kMaxVertices) {
    fail(ErrorKind::InvalidArgument,
         "vertex count " + std::to_string(n) + " outside 1.." + std::to_string(kMaxVertices));
  }
  if (c < 2 || c > kMaxColours) {
    fail(ErrorKind::InvalidArgument,
         "colour count " + std::to_string(c) + " outside 2.." + std::to_string(kMaxColours));
  }
}

}  // namespace

std::vector<Colour> ColourSet::to_vector() const {
  std::vector<Colour> out;
  for (Bits rest = bits_; rest != 0; rest = static_cast<Bits>(rest & (rest - 1))) {
    out.push_back(std::countr_zero(rest) + 1);
  }
  return out;
}

// ---------------------------------------------------------------------------
// SimpleGraph

SimpleGraph::SimpleGraph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    fail(ErrorKind::InvalidArgument, "simple graph size " + std::to_string(n) + " unsupported");
  }
}

bool SimpleGraph::add_edge(Vertex u, Vertex v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    fail(ErrorKind::VertexOutOfRange, "edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
  }
  if (u == v) fail(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
  if (has_edge(u, v)) return false;
  adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
  adj_[static_cast<std::size_t>(v)] |= vertex_bit(u);
  ++m_;
  return true;
}

bool SimpleGraph::has_edge(Vertex u, Vertex v) const {
  return (adj_[static_cast<std::size_t>(u)] & vertex_bit(v)) != 0;
}

std::vector<std::pair<Vertex, Vertex>> SimpleGraph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      if (has_edge(u, v)) out.emplace_back(u, v);
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// ColouredMultigraph

ColouredMultigraph::ColouredMultigraph(int n, int c)
    : n_(n),
      c_(c),
      pairs_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n)),
      any_adj_(static_cast<std::size_t>(n), 0),
      colour_adj_(static_cast<std::size_t>(n) * static_cast<std::size_t>(c), 0) {}

ColouredMultigraph ColouredMultigraph::build(int n, int c, std::span<const Edge> edges) {
  GraphBuilder builder(n, c);
  for (const Edge& e : edges) builder.add_edge(e.u, e.v, e.colour);
  return builder.build();
}

ColouredMultigraph ColouredMultigraph::rainbow_complete(int n, int c) {
  GraphBuilder builder(n, c);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) builder.set_colours(u, v, ColourSet::all(c));
  }
  return builder.build();
}

ColouredMultigraph ColouredMultigraph::empty(int n, int c) { return GraphBuilder(n, c).build(); }

void ColouredMultigraph::rebuild_adjacency() {
  m_ = 0;
  std::fill(any_adj_.begin(), any_adj_.end(), 0);
  std::fill(colour_adj_.begin(), colour_adj_.end(), 0);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = 0; v < n_; ++v) {
      const ColourSet set = pairs_[index(u, v)];
      if (set.empty()) continue;
      any_adj_[static_cast<std::size_t>(u)] |= vertex_bit(v);
      for (Colour k : set.to_vector()) {
        colour_adj_[static_cast<std::size_t>((k - 1) * n_ + u)] |= vertex_bit(v);
      }
      if (u < v) m_ += static_cast<std::size_t>(set.size());
    }
  }
}

int ColouredMultigraph::degree(Vertex x) const {
  int total = 0;
  for (Colour k = 1; k <= c_; ++k) total += std::popcount(colour_neighbours(x, k));
  return total;
}

std::size_t ColouredMultigraph::colour_class_size(Colour k) const {
  std::size_t total = 0;
  for (Vertex x = 0; x < n_; ++x) total += static_cast<std::size_t>(std::popcount(colour_neighbours(x, k)));
  return total / 2;
}

std::vector<Edge> ColouredMultigraph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v = u + 1; v < n_; ++v) {
      for (Colour k : colours(u, v).to_vector()) out.push_back({u, v, k});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// GraphBuilder

GraphBuilder::GraphBuilder(int n, int c) : n_(n), c_(c) {
  check_shape(n, c);
  pairs_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), ColourSet{});
}

GraphBuilder::GraphBuilder(const ColouredMultigraph& g) : n_(g.n()), c_(g.c()), pairs_(g.pairs_) {}

void GraphBuilder::check_pair(Vertex u, Vertex v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    fail(ErrorKind::VertexOutOfRange, "pair {" + std::to_string(u) + "," + std::to_string(v) +
                                          "} with n=" + std::to_string(n_));
  }
  if (u == v) fail(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
}

void GraphBuilder::check_colour(Colour k) const {
  if (k < 1 || k > c_) {
    fail(ErrorKind::ColourOutOfRange, "colour " + std::to_string(k) + " with c=" + std::to_string(c_));
  }
}

void GraphBuilder::add_edge(Vertex u, Vertex v, Colour k) {
  if (!insert_edge(u, v, k)) {
    fail(ErrorKind::DuplicateParallelEdge, "edge {" + std::to_string(u) + "," + std::to_string(v) +
                                               "} colour " + std::to_string(k));
  }
}

bool GraphBuilder::insert_edge(Vertex u, Vertex v, Colour k) {
  check_pair(u, v);
  check_colour(k);
  ColourSet& set = pairs_[index(u, v)];
  if (set.contains(k)) return false;
  set.insert(k);
  pairs_[index(v, u)] = set;
  return true;
}

bool GraphBuilder::remove_edge(Vertex u, Vertex v, Colour k) {
  check_pair(u, v);
  check_colour(k);
  ColourSet& set = pairs_[index(u, v)];
  if (!set.contains(k)) return false;
  set.erase(k);
  pairs_[index(v, u)] = set;
  return true;
}

void GraphBuilder::set_colours(Vertex u, Vertex v, ColourSet colours) {
  check_pair(u, v);
  if (!colours.without(ColourSet::all(c_)).empty()) {
    fail(ErrorKind::ColourOutOfRange, "colour set exceeds c=" + std::to_string(c_));
  }
  pairs_[index(u, v)] = colours;
  pairs_[index(v, u)] = colours;
}

ColourSet GraphBuilder::colours(Vertex u, Vertex v) const {
  check_pair(u, v);
  return pairs_[index(u, v)];
}

void GraphBuilder::isolate(Vertex x) {
  for (Vertex v = 0; v < n_; ++v) {
    if (v == x) continue;
    pairs_[index(x, v)] = ColourSet{};
    pairs_[index(v, x)] = ColourSet{};
  }
}

ColouredMultigraph GraphBuilder::build() const {
  ColouredMultigraph g(n_, c_);
  g.pairs_ = pairs_;
  g.rebuild_adjacency();
  return g;
}

// ---------------------------------------------------------------------------
// Matchings

bool is_valid_matching(const SimpleGraph& h, const Matching& matching) {
  VertexMask used = 0;
  for (auto [u, v] : matching.pairs) {
    if (u < 0 || v < 0 || u >= h.n() || v >= h.n() || u == v) return false;
    if (!h.has_edge(u, v)) return false;
    const VertexMask both = vertex_bit(u) | vertex_bit(v);
    if ((used & both) != 0) return false;
    used |= both;
  }
  return true;
}

bool is_valid_matching(const ColouredMultigraph& g, const Matching& matching) {
  if (matching.colour < 1 || matching.colour > g.c()) return false;
  VertexMask used = 0;
  for (auto [u, v] : matching.pairs) {
    if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || u == v) return false;
    if (!g.has_edge(u, v, matching.colour)) return false;
    const VertexMask both = vertex_bit(u) | vertex_bit(v);
    if ((used & both) != 0) return false;
    used |= both;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Derived quantities

namespace {

void check_vertex(const ColouredMultigraph& g, Vertex x) {
  if (x < 0 || x >= g.n()) {
    fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(x) + " with n=" + std::to_string(g.n()));
  }
}

void check_colour(const ColouredMultigraph& g, Colour k) {
  if (k < 1 || k > g.c()) {
    fail(ErrorKind::ColourOutOfRange, "colour " + std::to_string(k) + " with c=" + std::to_string(g.c()));
  }
}

}  // namespace

int colour_degree(const ColouredMultigraph& g, Vertex x, Colour k) {
  check_vertex(g, x);
  check_colour(g, k);
  return std::popcount(g.colour_neighbours(x, k));
}

int rainbow_degree(const ColouredMultigraph& g, Vertex x) {
  check_vertex(g, x);
  int count = 0;
  for (Colour k = 1; k <= g.c(); ++k) count += g.colour_neighbours(x, k) != 0 ? 1 : 0;
  return count;
}

int rainbow_degree_graph(const ColouredMultigraph& g) {
  int best = g.c();
  for (Vertex x = 0; x < g.n(); ++x) best = std::min(best, rainbow_degree(g, x));
  return best;
}

ColouredMultigraph complement(const ColouredMultigraph& g) {
  GraphBuilder builder(g.n(), g.c());
  const ColourSet full = ColourSet::all(g.c());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) builder.set_colours(u, v, full.without(g.colours(u, v)));
  }
  return builder.build();
}

SimpleGraph colour_subgraph(const ColouredMultigraph& g, Colour k) {
  check_colour(g, k);
  SimpleGraph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (g.has_edge(u, v, k)) h.add_edge(u, v);
    }
  }
  return h;
}

SimpleGraph underlying_graph(const ColouredMultigraph& g) {
  SimpleGraph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      if (!g.colours(u, v).empty()) h.add_edge(u, v);
    }
  }
  return h;
}

namespace {

template <typename NeighbourFn>
bool connected_by(int n, NeighbourFn neighbours) {
  if (n <= 1) return true;
  VertexMask seen = vertex_bit(0);
  VertexMask frontier = seen;
  while (frontier != 0) {
    VertexMask next = 0;
    for (VertexMask rest = frontier; rest != 0; rest &= rest - 1) {
      next |= neighbours(std::countr_zero(rest));
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == all_vertices(n);
}

}  // namespace

bool is_connected(const ColouredMultigraph& g) {
  return connected_by(g.n(), [&](Vertex v) { return g.neighbours(v); });
}

bool is_connected(const SimpleGraph& h) {
  return connected_by(h.n(), [&](Vertex v) { return h.neighbours(v); });
}

std::size_t missing_edges_excluding(const ColouredMultigraph& g, Colour excluded) {
  std::size_t missing = 0;
  const auto pairs = static_cast<std::size_t>(choose2(g.n()));
  for (Colour k = 1; k <= g.c(); ++k) {
    if (k == excluded) continue;
    missing += pairs - g.colour_class_size(k);
  }
  return missing;
}

}  // namespace ecmg
