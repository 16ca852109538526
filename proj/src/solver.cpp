#include "ecmg/solver.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <utility>

#include "ecmg/error.hpp"

namespace ecmg {

std::string_view to_string(StepKind kind) noexcept {
  switch (kind) {
    case StepKind::Exact: return "exact";
    case StepKind::Merge: return "merge";
    case StepKind::Alternation: return "alternation";
    case StepKind::ContractTwo: return "contract-two";
    case StepKind::ContractThree: return "contract-three";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus status) noexcept {
  switch (status) {
    case SolveStatus::Path: return "path";
    case SolveStatus::Absent: return "absent";
    case SolveStatus::Unsolved: return "unsolved";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Hamiltonian paths in simple graphs

std::optional<std::vector<Vertex>> hamiltonian_path_exact(const SimpleGraph& h) {
  const int n = h.n();
  if (n > 20) fail(ErrorKind::BudgetExceeded, "exact Hamiltonian path DP limited to n <= 20");
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  if (!is_connected(h)) return std::nullopt;

  const std::size_t masks = std::size_t{1} << n;
  std::vector<std::uint32_t> ends(masks, 0);
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = static_cast<std::uint32_t>(h.neighbours(v));
  for (Vertex v = 0; v < n; ++v) ends[std::size_t{1} << v] = std::uint32_t{1} << v;

  for (std::size_t mask = 1; mask < masks; ++mask) {
    const std::uint32_t here = ends[mask];
    if (here == 0) continue;
    for (auto rest = static_cast<std::uint32_t>(~mask & (masks - 1)); rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      if ((here & adj[static_cast<std::size_t>(v)]) != 0) ends[mask | (std::size_t{1} << v)] |= std::uint32_t{1} << v;
    }
  }

  std::size_t mask = masks - 1;
  if (ends[mask] == 0) return std::nullopt;
  std::vector<Vertex> path{std::countr_zero(ends[mask])};
  while (std::popcount(mask) > 1) {
    const Vertex v = path.back();
    mask &= ~(std::size_t{1} << v);
    const std::uint32_t options = ends[mask] & adj[static_cast<std::size_t>(v)];
    if (options == 0) fail(ErrorKind::InvariantViolated, "Hamiltonian path reconstruction stalled");
    path.push_back(std::countr_zero(options));
  }
  return path;
}

std::optional<std::vector<Vertex>> hamiltonian_path_heuristic(const SimpleGraph& h) {
  const int n = h.n();
  if (n == 0) return std::nullopt;
  if (n == 1) return std::vector<Vertex>{0};
  if (!is_connected(h)) return std::nullopt;

  std::vector<Vertex> starts(static_cast<std::size_t>(n));
  std::iota(starts.begin(), starts.end(), 0);
  std::stable_sort(starts.begin(), starts.end(), [&](Vertex a, Vertex b) { return h.degree(a) < h.degree(b); });
  starts.resize(std::min<std::size_t>(starts.size(), 8));

  for (Vertex start : starts) {
    std::vector<Vertex> path{start};
    VertexMask used = vertex_bit(start);
    for (int iter = 0; iter < 50 * n; ++iter) {
      const Vertex end = path.back();
      if (const VertexMask open = h.neighbours(end) & ~used; open != 0) {
        // Extend towards the unvisited neighbour with fewest unvisited neighbours.
        Vertex pick = -1;
        int pick_degree = n + 1;
        for (VertexMask rest = open; rest != 0; rest &= rest - 1) {
          const Vertex w = std::countr_zero(rest);
          const int d = std::popcount(h.neighbours(w) & ~used);
          if (d < pick_degree) {
            pick = w;
            pick_degree = d;
          }
        }
        path.push_back(pick);
        used |= vertex_bit(pick);
        if (static_cast<int>(path.size()) == n) return path;
        continue;
      }
      if ((h.neighbours(path.front()) & ~used) != 0) {
        std::reverse(path.begin(), path.end());
        continue;
      }
      // Posa rotation: for an edge end-path[i], reversing path[i+1..] makes
      // path[i+1] the new end. Prefer a rotation that exposes a free neighbour.
      std::vector<std::size_t> pivots;
      for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        if (h.has_edge(end, path[i])) pivots.push_back(i);
      }
      if (pivots.empty()) break;
      std::size_t chosen = pivots[static_cast<std::size_t>(iter) % pivots.size()];
      for (std::size_t i : pivots) {
        if ((h.neighbours(path[i + 1]) & ~used) != 0) {
          chosen = i;
          break;
        }
      }
      std::reverse(path.begin() + static_cast<std::ptrdiff_t>(chosen) + 1, path.end());
    }
  }
  return std::nullopt;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const SimpleGraph& h) {
  if (auto found = hamiltonian_path_heuristic(h)) return found;
  if (h.n() <= 20) return hamiltonian_path_exact(h);
  return std::nullopt;
}

SimpleGraph intersection_graph(const ColouredMultigraph& g, Colour j, Colour l) {
  SimpleGraph h(g.n());
  for (Vertex u = 0; u < g.n(); ++u) {
    for (VertexMask rest = g.colour_neighbours(u, j) & g.colour_neighbours(u, l) & ~all_vertices(u + 1); rest != 0;
         rest &= rest - 1) {
      h.add_edge(u, std::countr_zero(rest));
    }
  }
  return h;
}

std::optional<ProperPath> two_colour_alternating_path(const ColouredMultigraph& g, Colour j, Colour l) {
  if (j == l) fail(ErrorKind::PreconditionViolated, "alternation needs two distinct colours");
  if (j < 1 || j > g.c() || l < 1 || l > g.c()) fail(ErrorKind::ColourOutOfRange, "alternation colours");
  const auto order = hamiltonian_path(intersection_graph(g, j, l));
  if (!order) return std::nullopt;
  ProperPath path{*order, {}};
  for (std::size_t i = 0; i + 1 < order->size(); ++i) path.colours.push_back(i % 2 == 0 ? j : l);
  return path;
}

// ---------------------------------------------------------------------------
// Recursive reduction

namespace {

struct Branch {
  ProperPath path;
  std::vector<TraceStep> steps;
  ProperPath base;
};

class Solver {
 public:
  explicit Solver(const SolveOptions& options) : options_(options) {}

  int exact_calls() const { return exact_calls_; }

  std::optional<ProperPath> exact(const ColouredMultigraph& g) {
    ++exact_calls_;
    return find_php(g, options_.budget);
  }

  std::optional<Branch> run(const ColouredMultigraph& g) {
    if (g.n() <= options_.base_threshold) {
      if (exact_calls_ >= options_.max_exact_calls) return std::nullopt;
      std::optional<ProperPath> found;
      try {
        found = exact(g);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::BudgetExceeded) throw;
      }
      if (!found) return std::nullopt;
      return Branch{*found, {TraceStep{StepKind::Exact, g, {}, {}, 0, 0}}, *found};
    }
    if (!is_connected(g)) return std::nullopt;

    if (options_.use_merge && g.c() >= 4) {
      MergeResult merged = merge_least_frequent_colour(g);
      if (auto sub = run(merged.graph)) {
        ProperPath lifted = lift_merged_path(sub->path, merged.record, g);
        return wrap(std::move(*sub), std::move(lifted),
                    TraceStep{StepKind::Merge, g, std::move(merged.record), {}, 0, 0});
      }
    }

    if (options_.use_alternation) {
      for (Colour j = 1; j <= g.c(); ++j) {
        for (Colour l = j + 1; l <= g.c(); ++l) {
          if (auto path = two_colour_alternating_path(g, j, l)) {
            return Branch{*path, {TraceStep{StepKind::Alternation, g, {}, {}, j, l}}, *path};
          }
        }
      }
    }

    if (g.c() != 3) return std::nullopt;

    if (options_.use_contract_two) {
      if (auto found = try_contract_two(g)) return found;
    }
    if (options_.use_contract_three) {
      if (auto found = try_contract_three(g)) return found;
    }
    return std::nullopt;
  }

 private:
  static Branch wrap(Branch sub, ProperPath lifted, TraceStep step) {
    sub.steps.insert(sub.steps.begin(), std::move(step));
    sub.path = std::move(lifted);
    return sub;
  }

  std::optional<Branch> try_contract_two(const ColouredMultigraph& g) {
    for (Vertex x = 0; x < g.n(); ++x) {
      const VertexMask around = g.neighbours(x);
      const bool single = std::popcount(around) == 1;
      const bool mono = around != 0 && rainbow_degree(g, x) == 1;
      if (!single && !mono) continue;

      // Prefer neighbours that are not themselves monochromatic.
      std::vector<Vertex> candidates;
      for (VertexMask rest = around; rest != 0; rest &= rest - 1) candidates.push_back(std::countr_zero(rest));
      std::stable_sort(candidates.begin(), candidates.end(), [&](Vertex a, Vertex b) {
        return (rainbow_degree(g, a) == 1) < (rainbow_degree(g, b) == 1);
      });
      if (static_cast<int>(candidates.size()) > options_.retries) {
        candidates.resize(static_cast<std::size_t>(options_.retries));
      }
      for (Vertex y : candidates) {
        ContractionResult reduced = contract_two(g, x, y);
        if (reduced.graph.n() > 1 && !is_connected(reduced.graph)) continue;
        if (auto sub = run(reduced.graph)) {
          ProperPath lifted = lift_two(sub->path, reduced.record, g);
          return wrap(std::move(*sub), std::move(lifted),
                      TraceStep{StepKind::ContractTwo, g, {}, std::move(reduced.record), 0, 0});
        }
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  std::optional<Branch> try_contract_three(const ColouredMultigraph& g) {
    const int n = g.n();
    std::vector<Vertex> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });

    for (Vertex x : order) {
      if (g.degree(x) > 3 * n - 6) break;
      struct Choice {
        Vertex y, z;
        Colour b, r;
      };
      std::vector<Choice> choices;
      for (VertexMask ys = g.neighbours(x); ys != 0 && static_cast<int>(choices.size()) < options_.retries;
           ys &= ys - 1) {
        const Vertex y = std::countr_zero(ys);
        for (VertexMask zs = g.neighbours(x) & ~vertex_bit(y);
             zs != 0 && static_cast<int>(choices.size()) < options_.retries; zs &= zs - 1) {
          const Vertex z = std::countr_zero(zs);
          for (Colour b : g.colours(x, y).to_vector()) {
            for (Colour r : g.colours(x, z).to_vector()) {
              if (b != r && static_cast<int>(choices.size()) < options_.retries) choices.push_back({y, z, b, r});
            }
          }
        }
      }
      if (choices.empty()) continue;

      for (const Choice& choice : choices) {
        ContractionResult reduced = contract_three(g, x, choice.y, choice.z, choice.b, choice.r);
        if (reduced.graph.n() > 1 && !is_connected(reduced.graph)) continue;
        if (auto sub = run(reduced.graph)) {
          ProperPath lifted = lift_three(sub->path, reduced.record, g);
          return wrap(std::move(*sub), std::move(lifted),
                      TraceStep{StepKind::ContractThree, g, {}, std::move(reduced.record), 0, 0});
        }
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  const SolveOptions& options_;
  int exact_calls_ = 0;
};

}  // namespace

SolveOutcome solve(const ColouredMultigraph& g, const SolveOptions& options) {
  SolveOutcome outcome;
  Solver solver(options);

  if (g.n() <= options.base_threshold) {
    auto found = solver.exact(g);
    outcome.exact_calls = solver.exact_calls();
    if (found) {
      outcome.status = SolveStatus::Path;
      outcome.trace.push_back(TraceStep{StepKind::Exact, g, {}, {}, 0, 0});
      outcome.base_path = found;
      outcome.path = std::move(found);
    } else {
      outcome.status = SolveStatus::Absent;
      outcome.notes.emplace_back("exact search below base threshold: no proper Hamiltonian path");
    }
    return outcome;
  }

  if (!is_connected(g)) {
    outcome.status = SolveStatus::Absent;
    outcome.notes.emplace_back("underlying graph is disconnected");
    return outcome;
  }

  outcome.notes.emplace_back(
      "contraction case analysis approximated by bounded neighbour retries with exact base case");
  auto branch = solver.run(g);
  outcome.exact_calls = solver.exact_calls();
  if (!branch) {
    outcome.status = SolveStatus::Unsolved;
    return outcome;
  }
  if (!is_proper_hamiltonian(g, branch->path)) {
    fail(ErrorKind::InvariantViolated, "constructive solver produced an invalid path");
  }
  outcome.status = SolveStatus::Path;
  outcome.path = std::move(branch->path);
  outcome.trace = std::move(branch->steps);
  outcome.base_path = std::move(branch->base);
  return outcome;
}

ProperPath replay_trace(const SolveOutcome& outcome) {
  if (!outcome.base_path) fail(ErrorKind::PreconditionViolated, "outcome carries no path to replay");
  ProperPath path = *outcome.base_path;
  for (auto it = outcome.trace.rbegin(); it != outcome.trace.rend(); ++it) {
    switch (it->kind) {
      case StepKind::Exact:
      case StepKind::Alternation:
        break;
      case StepKind::Merge:
        path = lift_merged_path(path, *it->merge, it->graph);
        break;
      case StepKind::ContractTwo:
        path = lift_two(path, *it->contraction, it->graph);
        break;
      case StepKind::ContractThree:
        path = lift_three(path, *it->contraction, it->graph);
        break;
    }
  }
  return path;
}

}  // namespace ecmg
