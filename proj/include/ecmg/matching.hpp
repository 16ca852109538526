#pragma once

#include <utility>

#include "ecmg/graph.hpp"

namespace ecmg {

/// Maximum-cardinality matching of a general simple graph (Edmonds' blossom
/// algorithm). Ties between maximum matchings are broken by search order.
Matching maximum_matching(const SimpleGraph& h);

/// Maximum matching of G^k, tagged with colour k.
Matching colour_matching(const ColouredMultigraph& g, Colour k);

struct ColourMatchings {
  Matching red;   // the larger colour class
  Matching blue;
};

/// For 2-coloured g with n >= 14, rd(g) = 2 and m >= C(n,2)+C(n-3,2)+4,
/// returns maximum matchings of both colour classes after relabelling so the
/// red role goes to the larger class (ties keep colour 1 as red).
///
/// Throws HypothesisNotMet if the preconditions fail and GuaranteeViolated if
/// |red| != floor(n/2) or |blue| < ceil((n-2)/2).
ColourMatchings guaranteed_matchings_2col(const ColouredMultigraph& g);

}  // namespace ecmg
