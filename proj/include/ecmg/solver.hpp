#pragma once

// Constructive proper Hamiltonian path solver.
//
// Reduces the instance the way the sufficiency arguments do (merge down to
// three colours, contract low-degree vertices, recurse) and falls back to the
// exact DP once the graph is small. It never claims non-existence for graphs
// above the base threshold: failure there is reported as Unsolved.

#include <optional>
#include <string>
#include <vector>

#include "ecmg/graph.hpp"
#include "ecmg/reductions.hpp"
#include "ecmg/search.hpp"

namespace ecmg {

struct SolveOptions {
  int base_threshold = 16;
  /// Alternative (y, z) choices tried per three-vertex contraction level, and
  /// alternative neighbours per two-vertex contraction level.
  int retries = 8;
  /// Cap on exact base-case searches across one solve call.
  int max_exact_calls = 256;
  SearchBudget budget{};

  bool use_merge = true;
  bool use_alternation = true;
  bool use_contract_two = true;
  bool use_contract_three = true;
};

enum class SolveStatus { Path, Absent, Unsolved };

enum class StepKind { Exact, Merge, Alternation, ContractTwo, ContractThree };

std::string_view to_string(StepKind kind) noexcept;
std::string_view to_string(SolveStatus status) noexcept;

/// One level of the successful reduction chain, outermost first. `graph` is
/// the graph at that level, before the step was applied.
struct TraceStep {
  StepKind kind = StepKind::Exact;
  ColouredMultigraph graph = ColouredMultigraph::empty(1, 2);
  std::optional<MergeRecord> merge;
  std::optional<ContractionRecord> contraction;
  /// For Alternation: the colour pair used.
  Colour first_colour = 0;
  Colour second_colour = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::Unsolved;
  std::optional<ProperPath> path;
  /// Reduction chain that produced `path` (empty unless status == Path).
  std::vector<TraceStep> trace;
  /// Path found at the innermost level, before any lifting.
  std::optional<ProperPath> base_path;
  std::vector<std::string> notes;
  int exact_calls = 0;
};

SolveOutcome solve(const ColouredMultigraph& g, const SolveOptions& options = {});

/// Re-lifts `outcome.base_path` through `outcome.trace`, innermost first.
ProperPath replay_trace(const SolveOutcome& outcome);

/// Hamiltonian path of a simple graph. Tries a degree-greedy extension with
/// rotations first; if that fails and n <= 20 it runs an exact subset DP, so
/// nullopt is a proof of non-existence only when n <= 20.
std::optional<std::vector<Vertex>> hamiltonian_path(const SimpleGraph& h);
/// The exact subset DP alone (n <= 20).
std::optional<std::vector<Vertex>> hamiltonian_path_exact(const SimpleGraph& h);
/// The heuristic alone.
std::optional<std::vector<Vertex>> hamiltonian_path_heuristic(const SimpleGraph& h);

/// Simple graph of pairs carrying both colour j and colour l.
SimpleGraph intersection_graph(const ColouredMultigraph& g, Colour j, Colour l);

/// Proper Hamiltonian path whose colours strictly alternate j, l, j, ... along
/// a Hamiltonian path of the j/l intersection graph.
std::optional<ProperPath> two_colour_alternating_path(const ColouredMultigraph& g, Colour j, Colour l);

}  // namespace ecmg
