#pragma once

// Edge-count sufficient conditions for proper Hamiltonian paths, together
// with the constructions showing each bound is tight.
//
//   id         range                   threshold
//   S2         n >= 8,  c = 2          C(n,2) + C(n-2,2) + 1
//   RD2        n >= 14, c = 2, rd = 2  C(n,2) + C(n-3,2) + 4
//   General    n >= 2,  c >= 3         c*C(n-1,2) + 1
//   Connected  n >= 9,  3 <= c < n/2,  c*C(n-2,2) + n
//              connected
//   Rainbow    n >= 11, c >= 3, rd = c c*C(n-2,2) + 2c + 1

#include <cstdint>
#include <optional>
#include <string_view>

#include "ecmg/graph.hpp"

namespace ecmg {

enum class TheoremId { S2, RD2, General, Connected, Rainbow };

inline constexpr TheoremId kAllTheorems[] = {TheoremId::S2, TheoremId::RD2, TheoremId::General,
                                             TheoremId::Connected, TheoremId::Rainbow};

std::string_view to_string(TheoremId id) noexcept;
std::optional<TheoremId> parse_theorem(std::string_view name) noexcept;

/// Colour count used when a caller does not specify one (2 for S2/RD2, else 3).
int default_colours(TheoremId id) noexcept;

/// Whether (n, c) lies in the theorem's stated range.
bool in_stated_range(TheoremId id, int n, int c) noexcept;

/// Minimum edge count in the hypothesis. Throws OutOfStatedRange.
std::int64_t threshold(TheoremId id, int n, int c);

/// Full hypothesis: stated range, m >= threshold, and the side conditions.
bool hypothesis_holds(const ColouredMultigraph& g, TheoremId id);

/// Whether the tightness construction exists for (n, c).
bool extremal_defined(TheoremId id, int n, int c) noexcept;

/// Tightness construction with exactly threshold - 1 edges and no proper
/// Hamiltonian path. Throws OutOfStatedRange outside:
///   S2: odd n >= 9, c = 2      RD2: odd n >= 15, c = 2     General: n >= 2, c >= 3
///   Connected: n >= 9, 3 <= c < n/2                        Rainbow: n >= 11, c >= 3
ColouredMultigraph extremal(TheoremId id, int n, int c);

enum class MatchingCase { EvenFull, Odd, EvenDeficient };

std::string_view to_string(MatchingCase which) noexcept;
std::optional<MatchingCase> parse_matching_case(std::string_view name) noexcept;

/// Matching size for the case: n/2, (n-1)/2 or (n-2)/2.
int matching_size(int n, MatchingCase which);
/// The case applies when 2p < path_limit(n, case): n, n-1 or n-2.
int path_limit(int n, MatchingCase which);

/// Lower bound on non-red missing edges: (2n-4)(c-1), (2n-6)(c-1) or
/// (2n-8)(c-1). Throws ParityMismatch if n's parity does not fit the case.
std::int64_t f_lower_bound(int n, int c, MatchingCase which);

}  // namespace ecmg
