#pragma once

// Exact search over proper paths and cycles.
//
// All searches are dynamic programs over vertex subsets. Their table sizes are
// bounded by a SearchBudget so that callers get a BudgetExceeded error (never
// a silent "absent") when an instance is too large.

#include <cstdint>
#include <optional>
#include <span>

#include "ecmg/graph.hpp"

namespace ecmg {

struct SearchBudget {
  /// Cap on DP table entries. The default admits proper Hamiltonian path
  /// search on 3-coloured graphs up to n = 20.
  std::uint64_t max_states = std::uint64_t{1} << 27;
};

/// Number of states used by `find_php`: n * (c + 1) * 2^n (saturating).
std::uint64_t php_state_count(int n, int c);

/// A proper Hamiltonian path of g, or nullopt if none exists.
/// Throws BudgetExceeded when the state count exceeds the budget.
std::optional<ProperPath> find_php(const ColouredMultigraph& g, SearchBudget budget = {});

/// A proper cycle whose vertex set is exactly `vertices` (|vertices| >= 3).
std::optional<ProperCycle> find_proper_cycle_on(const ColouredMultigraph& g,
                                                std::span<const Vertex> vertices,
                                                SearchBudget budget = {});
bool exists_proper_cycle_on(const ColouredMultigraph& g, std::span<const Vertex> vertices,
                            SearchBudget budget = {});

/// A longest proper path compatible with `matching`: edges alternate between
/// matching edges and non-matching edges, beginning and ending with a
/// matching edge. Throws EmptyMatching for an empty matching and
/// PreconditionViolated if `matching` is not a colour matching of g.
ProperPath longest_compatible_path(const ColouredMultigraph& g, const Matching& matching,
                                   SearchBudget budget = {});

/// True iff path is a proper path of g: distinct in-range vertices, one
/// colour per edge, every edge present, consecutive colours distinct.
bool validate(const ColouredMultigraph& g, const ProperPath& path);
/// validate() plus the path visits all n vertices.
bool is_proper_hamiltonian(const ColouredMultigraph& g, const ProperPath& path);
/// Proper cycle check including the wrap-around adjacency; length >= 3.
bool validate(const ColouredMultigraph& g, const ProperCycle& cycle);

}  // namespace ecmg
