#include "ecmg/matching.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <vector>

#include "ecmg/error.hpp"

namespace ecmg {

namespace {

// Edmonds' blossom algorithm, O(n^3): grow an alternating BFS tree from each
// exposed vertex, contracting odd cycles (blossoms) onto their base.
class Blossom {
 public:
  explicit Blossom(const SimpleGraph& h)
      : h_(h),
        n_(h.n()),
        mate_(static_cast<std::size_t>(n_), -1),
        parent_(static_cast<std::size_t>(n_), -1),
        base_(static_cast<std::size_t>(n_), 0),
        in_tree_(static_cast<std::size_t>(n_), false),
        in_blossom_(static_cast<std::size_t>(n_), false) {}

  std::vector<Vertex> run() {
    // Greedy warm start; the augmenting phase corrects any suboptimal choice.
    for (Vertex u = 0; u < n_; ++u) {
      if (mate(u) != -1) continue;
      for (VertexMask rest = h_.neighbours(u); rest != 0; rest &= rest - 1) {
        const Vertex v = std::countr_zero(rest);
        if (mate(v) == -1) {
          set_mate(u, v);
          set_mate(v, u);
          break;
        }
      }
    }
    for (Vertex root = 0; root < n_; ++root) {
      if (mate(root) != -1) continue;
      const Vertex end = find_augmenting_path(root);
      if (end != -1) augment(end);
    }
    return mate_;
  }

 private:
  Vertex mate(Vertex v) const { return mate_[static_cast<std::size_t>(v)]; }
  void set_mate(Vertex v, Vertex w) { mate_[static_cast<std::size_t>(v)] = w; }
  Vertex parent(Vertex v) const { return parent_[static_cast<std::size_t>(v)]; }
  Vertex base(Vertex v) const { return base_[static_cast<std::size_t>(v)]; }

  Vertex lowest_common_ancestor(Vertex a, Vertex b) const {
    std::vector<bool> on_path(static_cast<std::size_t>(n_), false);
    while (true) {
      a = base(a);
      on_path[static_cast<std::size_t>(a)] = true;
      if (mate(a) == -1) break;
      a = parent(mate(a));
    }
    while (true) {
      b = base(b);
      if (on_path[static_cast<std::size_t>(b)]) return b;
      b = parent(mate(b));
    }
  }

  void mark_path(Vertex v, Vertex b, Vertex child) {
    while (base(v) != b) {
      in_blossom_[static_cast<std::size_t>(base(v))] = true;
      in_blossom_[static_cast<std::size_t>(base(mate(v)))] = true;
      parent_[static_cast<std::size_t>(v)] = child;
      child = mate(v);
      v = parent(mate(v));
    }
  }

  Vertex find_augmenting_path(Vertex root) {
    std::fill(in_tree_.begin(), in_tree_.end(), false);
    std::fill(parent_.begin(), parent_.end(), -1);
    for (Vertex v = 0; v < n_; ++v) base_[static_cast<std::size_t>(v)] = v;

    std::deque<Vertex> queue{root};
    in_tree_[static_cast<std::size_t>(root)] = true;
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (VertexMask rest = h_.neighbours(v); rest != 0; rest &= rest - 1) {
        const Vertex to = std::countr_zero(rest);
        if (base(v) == base(to) || mate(v) == to) continue;
        if (to == root || (mate(to) != -1 && parent(mate(to)) != -1)) {
          const Vertex current_base = lowest_common_ancestor(v, to);
          std::fill(in_blossom_.begin(), in_blossom_.end(), false);
          mark_path(v, current_base, to);
          mark_path(to, current_base, v);
          for (Vertex i = 0; i < n_; ++i) {
            if (!in_blossom_[static_cast<std::size_t>(base(i))]) continue;
            base_[static_cast<std::size_t>(i)] = current_base;
            if (!in_tree_[static_cast<std::size_t>(i)]) {
              in_tree_[static_cast<std::size_t>(i)] = true;
              queue.push_back(i);
            }
          }
        } else if (parent(to) == -1) {
          parent_[static_cast<std::size_t>(to)] = v;
          if (mate(to) == -1) return to;
          in_tree_[static_cast<std::size_t>(mate(to))] = true;
          queue.push_back(mate(to));
        }
      }
    }
    return -1;
  }

  void augment(Vertex v) {
    while (v != -1) {
      const Vertex pv = parent(v);
      const Vertex next = mate(pv);
      set_mate(v, pv);
      set_mate(pv, v);
      v = next;
    }
  }

  const SimpleGraph& h_;
  int n_;
  std::vector<Vertex> mate_;
  std::vector<Vertex> parent_;
  std::vector<Vertex> base_;
  std::vector<bool> in_tree_;
  std::vector<bool> in_blossom_;
};

}  // namespace

Matching maximum_matching(const SimpleGraph& h) {
  const std::vector<Vertex> mate = Blossom(h).run();
  Matching out;
  for (Vertex u = 0; u < h.n(); ++u) {
    const Vertex v = mate[static_cast<std::size_t>(u)];
    if (v > u) out.pairs.emplace_back(u, v);
  }
  return out;
}

Matching colour_matching(const ColouredMultigraph& g, Colour k) {
  Matching out = maximum_matching(colour_subgraph(g, k));
  out.colour = k;
  return out;
}

ColourMatchings guaranteed_matchings_2col(const ColouredMultigraph& g) {
  const int n = g.n();
  if (g.c() != 2) fail(ErrorKind::HypothesisNotMet, "requires exactly two colours");
  if (n < 14) fail(ErrorKind::HypothesisNotMet, "requires n >= 14, got " + std::to_string(n));
  if (rainbow_degree_graph(g) != 2) fail(ErrorKind::HypothesisNotMet, "requires rd(G) = 2");
  const std::int64_t bound = choose2(n) + choose2(n - 3) + 4;
  if (static_cast<std::int64_t>(g.m()) < bound) {
    fail(ErrorKind::HypothesisNotMet,
         "m=" + std::to_string(g.m()) + " below " + std::to_string(bound));
  }

  const Colour red = g.colour_class_size(1) >= g.colour_class_size(2) ? 1 : 2;
  const Colour blue = 3 - red;
  ColourMatchings out{colour_matching(g, red), colour_matching(g, blue)};

  const auto red_needed = static_cast<std::size_t>(n / 2);
  const auto blue_needed = static_cast<std::size_t>((n - 1) / 2);  // ceil((n-2)/2)
  if (out.red.size() != red_needed || out.blue.size() < blue_needed) {
    fail(ErrorKind::GuaranteeViolated,
         "matching sizes red=" + std::to_string(out.red.size()) + " blue=" +
             std::to_string(out.blue.size()) + " on n=" + std::to_string(n));
  }
  return out;
}

}  // namespace ecmg
