#include "ecmg/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/search.hpp"

namespace ecmg::oracle {

namespace {

bool colour_edges(const ColouredMultigraph& g, const std::vector<Vertex>& order, std::size_t edge,
                  Colour previous, std::vector<Colour>& chosen) {
  if (edge + 1 >= order.size()) return true;
  for (Colour k = 1; k <= g.c(); ++k) {
    if (k == previous || !g.has_edge(order[edge], order[edge + 1], k)) continue;
    chosen[edge] = k;
    if (colour_edges(g, order, edge + 1, k, chosen)) return true;
  }
  return false;
}

}  // namespace

std::optional<ProperPath> brute_force_php(const ColouredMultigraph& g) {
  std::vector<Vertex> order(static_cast<std::size_t>(g.n()));
  std::iota(order.begin(), order.end(), 0);
  std::vector<Colour> chosen(order.size() > 0 ? order.size() - 1 : 0);
  do {
    if (colour_edges(g, order, 0, 0, chosen)) return ProperPath{order, chosen};
  } while (std::next_permutation(order.begin(), order.end()));
  return std::nullopt;
}

EnumerationReport enumerate_and_compare(int n, int c) {
  if (c != 2 || n < 1 || n > 5) {
    fail(ErrorKind::InfeasibleExhaustive,
         "exhaustive enumeration supports c = 2 and n <= 5, got n=" + std::to_string(n) + ", c=" + std::to_string(c));
  }
  EnumerationReport report;
  report.n = n;
  report.c = c;

  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  const unsigned per_pair = 1u << c;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < pairs.size(); ++i) total *= per_pair;

  for (std::uint64_t code = 0; code < total; ++code) {
    GraphBuilder builder(n, c);
    std::uint64_t rest = code;
    for (const auto& [u, v] : pairs) {
      builder.set_colours(u, v, ColourSet(static_cast<ColourSet::Bits>(rest % per_pair)));
      rest /= per_pair;
    }
    const ColouredMultigraph g = builder.build();
    const auto fast = find_php(g);
    const auto slow = brute_force_php(g);
    ++report.graphs;
    if (slow) ++report.with_path;
    const bool fast_sound = !fast || is_proper_hamiltonian(g, *fast);
    if (fast.has_value() != slow.has_value() || !fast_sound) ++report.disagreements;
  }
  return report;
}

}  // namespace ecmg::oracle
