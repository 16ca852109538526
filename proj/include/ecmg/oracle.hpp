#pragma once

// Brute-force reference answers, deliberately sharing no code with the DP
// searches they are compared against.

#include <cstdint>
#include <optional>

#include "ecmg/graph.hpp"

namespace ecmg::oracle {

/// Tries every vertex order (n! of them) and, for each, backtracks over the
/// colour choices of its edges. Intended for n <= 8.
std::optional<ProperPath> brute_force_php(const ColouredMultigraph& g);

struct EnumerationReport {
  int n = 0;
  int c = 0;
  std::uint64_t graphs = 0;
  std::uint64_t with_path = 0;
  std::uint64_t disagreements = 0;
};

/// Runs find_php and brute_force_php on every c-coloured multigraph on n
/// labelled vertices ((2^c)^C(n,2) graphs). Feasible only for c = 2 and
/// n <= 5; throws InfeasibleExhaustive otherwise.
EnumerationReport enumerate_and_compare(int n, int c);

}  // namespace ecmg::oracle
