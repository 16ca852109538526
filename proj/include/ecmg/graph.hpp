#pragma once

// Coloured multigraph data model.
//
// A c-edge-coloured multigraph on n vertices stores, for each unordered pair
// {u, v} with u != v, the set of colours present on that pair. Colours are
// 1-indexed (1..c); vertices are 0-indexed (0..n-1). Two parallel edges on
// the same pair never share a colour, so a set is the exact representation.

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace ecmg {

using Vertex = int;
using Colour = int;

/// Bitmask over vertices; bit v is vertex v.
using VertexMask = std::uint64_t;

inline constexpr int kMaxVertices = 64;
inline constexpr int kMaxColours = 15;

constexpr VertexMask vertex_bit(Vertex v) noexcept { return VertexMask{1} << v; }
constexpr VertexMask all_vertices(int n) noexcept {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

/// Small set of colours in 1..kMaxColours, stored as a bitmask (bit k-1 is colour k).
class ColourSet {
 public:
  using Bits = std::uint16_t;

  constexpr ColourSet() noexcept = default;
  constexpr explicit ColourSet(Bits bits) noexcept : bits_(bits) {}

  static constexpr ColourSet single(Colour k) noexcept { return ColourSet(bit(k)); }
  static constexpr ColourSet all(int c) noexcept {
    return ColourSet(static_cast<Bits>((1u << c) - 1u));
  }
  static constexpr Bits bit(Colour k) noexcept { return static_cast<Bits>(1u << (k - 1)); }

  constexpr bool contains(Colour k) const noexcept { return (bits_ & bit(k)) != 0; }
  constexpr void insert(Colour k) noexcept { bits_ = static_cast<Bits>(bits_ | bit(k)); }
  constexpr void erase(Colour k) noexcept { bits_ = static_cast<Bits>(bits_ & ~bit(k)); }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr int size() const noexcept { return std::popcount(bits_); }
  constexpr Bits bits() const noexcept { return bits_; }

  /// Smallest colour in the set; undefined when empty.
  constexpr Colour lowest() const noexcept { return std::countr_zero(bits_) + 1; }

  std::vector<Colour> to_vector() const;

  constexpr ColourSet operator&(ColourSet o) const noexcept {
    return ColourSet(static_cast<Bits>(bits_ & o.bits_));
  }
  constexpr ColourSet operator|(ColourSet o) const noexcept {
    return ColourSet(static_cast<Bits>(bits_ | o.bits_));
  }
  constexpr ColourSet without(ColourSet o) const noexcept {
    return ColourSet(static_cast<Bits>(bits_ & ~o.bits_));
  }
  constexpr bool operator==(const ColourSet&) const noexcept = default;

 private:
  Bits bits_ = 0;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Colour colour = 1;

  auto operator<=>(const Edge&) const = default;
};

/// Uncoloured simple graph with bitmask adjacency (n <= 64).
class SimpleGraph {
 public:
  explicit SimpleGraph(int n = 0);

  int n() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return m_; }

  /// Adds {u, v}; returns false if it was already present.
  bool add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;
  VertexMask neighbours(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return std::popcount(neighbours(v)); }
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  friend bool operator==(const SimpleGraph&, const SimpleGraph&) = default;

 private:
  int n_;
  std::size_t m_ = 0;
  std::vector<VertexMask> adj_;
};

class GraphBuilder;

/// Immutable c-edge-coloured multigraph. Construct through `build` or a `GraphBuilder`.
class ColouredMultigraph {
 public:
  /// Validating constructor: rejects self-loops, out-of-range vertices or
  /// colours, and duplicate (u, v, colour) triples.
  static ColouredMultigraph build(int n, int c, std::span<const Edge> edges);
  static ColouredMultigraph rainbow_complete(int n, int c);
  static ColouredMultigraph empty(int n, int c);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  std::size_t m() const noexcept { return m_; }

  ColourSet colours(Vertex u, Vertex v) const { return pairs_[index(u, v)]; }
  bool has_edge(Vertex u, Vertex v, Colour k) const { return colours(u, v).contains(k); }

  /// Vertices joined to x by an edge of any colour.
  VertexMask neighbours(Vertex x) const { return any_adj_[static_cast<std::size_t>(x)]; }
  /// N^k(x).
  VertexMask colour_neighbours(Vertex x, Colour k) const {
    return colour_adj_[static_cast<std::size_t>((k - 1) * n_ + x)];
  }
  /// Number of edges (counted with multiplicity) incident to x.
  int degree(Vertex x) const;
  std::size_t colour_class_size(Colour k) const;

  /// All edges in canonical order: sorted by (u, v, colour) with u < v.
  std::vector<Edge> edges() const;

  friend bool operator==(const ColouredMultigraph& a, const ColouredMultigraph& b) {
    return a.n_ == b.n_ && a.c_ == b.c_ && a.pairs_ == b.pairs_;
  }

 private:
  friend class GraphBuilder;
  ColouredMultigraph(int n, int c);

  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }
  void rebuild_adjacency();

  int n_ = 0;
  int c_ = 0;
  std::size_t m_ = 0;
  std::vector<ColourSet> pairs_;         // n*n, symmetric
  std::vector<VertexMask> any_adj_;      // n
  std::vector<VertexMask> colour_adj_;   // c*n
};

/// Single-owner mutable staging area for graphs. Range checks apply to every
/// mutation; `build()` snapshots the current state.
class GraphBuilder {
 public:
  GraphBuilder(int n, int c);
  explicit GraphBuilder(const ColouredMultigraph& g);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }

  /// Throws DuplicateParallelEdge if (u, v, k) is already present.
  void add_edge(Vertex u, Vertex v, Colour k);
  /// Returns false (and does nothing) if the edge already exists.
  bool insert_edge(Vertex u, Vertex v, Colour k);
  bool remove_edge(Vertex u, Vertex v, Colour k);
  void set_colours(Vertex u, Vertex v, ColourSet colours);
  ColourSet colours(Vertex u, Vertex v) const;
  /// Removes every edge incident to x.
  void isolate(Vertex x);

  ColouredMultigraph build() const;

 private:
  void check_pair(Vertex u, Vertex v) const;
  void check_colour(Colour k) const;
  std::size_t index(Vertex u, Vertex v) const {
    return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(v);
  }

  int n_;
  int c_;
  std::vector<ColourSet> pairs_;
};

/// Disjoint vertex pairs, all of one colour. Colour 0 marks an untagged
/// matching of a simple graph.
struct Matching {
  Colour colour = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;

  std::size_t size() const noexcept { return pairs.size(); }
  bool empty() const noexcept { return pairs.empty(); }
};

bool is_valid_matching(const SimpleGraph& h, const Matching& matching);
/// Disjoint pairs, each carrying an edge of `matching.colour` in g.
bool is_valid_matching(const ColouredMultigraph& g, const Matching& matching);

/// A path given as its vertex sequence and the colours of its edges in order.
struct ProperPath {
  std::vector<Vertex> vertices;
  std::vector<Colour> colours;  // size vertices.size() - 1

  friend bool operator==(const ProperPath&, const ProperPath&) = default;
};

/// A closed walk v0 v1 ... v_{k-1} v0; colours[i] is the colour of the edge
/// (v_i, v_{i+1 mod k}), so the last entry is the closing edge.
struct ProperCycle {
  std::vector<Vertex> vertices;
  std::vector<Colour> colours;  // size vertices.size()

  friend bool operator==(const ProperCycle&, const ProperCycle&) = default;
};

// Derived quantities.

/// d^k(x) = |N^k(x)|.
int colour_degree(const ColouredMultigraph& g, Vertex x, Colour k);
/// Number of distinct colours on edges at x.
int rainbow_degree(const ColouredMultigraph& g, Vertex x);
/// Minimum rainbow degree over all vertices.
int rainbow_degree_graph(const ColouredMultigraph& g);
/// Multigraph holding exactly the (pair, colour) slots missing from g.
ColouredMultigraph complement(const ColouredMultigraph& g);
/// G^k: the spanning simple graph of colour-k edges.
SimpleGraph colour_subgraph(const ColouredMultigraph& g, Colour k);
/// The simple graph of pairs carrying at least one edge.
SimpleGraph underlying_graph(const ColouredMultigraph& g);
/// Connectivity of the underlying simple graph.
bool is_connected(const ColouredMultigraph& g);
bool is_connected(const SimpleGraph& h);
/// Number of missing (pair, colour) slots whose colour is not `excluded`.
std::size_t missing_edges_excluding(const ColouredMultigraph& g, Colour excluded);

/// Binomial coefficient C(n, 2) as a 64-bit integer; 0 for n < 2.
constexpr std::int64_t choose2(std::int64_t n) noexcept { return n < 2 ? 0 : n * (n - 1) / 2; }

}  // namespace ecmg
