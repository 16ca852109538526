#pragma once

// Reduction steps that shrink a coloured multigraph while keeping a recipe for
// turning a proper Hamiltonian path of the smaller graph back into one of the
// original:
//
//  * colour merging  - recolour the least frequent colour j into a target l,
//                      dropping pairs that then carry l twice (c -> c-1);
//  * two-vertex contraction   - delete x and keep a single colour class at
//                               its neighbour y, which becomes an endpoint s;
//  * three-vertex contraction - replace x, y, z (xy colour b, xz colour r) by
//                               one vertex s with prescribed neighbourhoods.
//
// Every `lift_*` function re-validates its output against the original graph
// and throws LiftFailed if that ever fails.

#include <optional>
#include <utility>
#include <vector>

#include "ecmg/graph.hpp"

namespace ecmg {

struct MergeRecord {
  Colour merged = 0;  // j, in the original colour numbering
  Colour target = 0;  // l, in the original colour numbering
  /// Pairs that carried j but not l; they carry l after the merge.
  std::vector<std::pair<Vertex, Vertex>> recoloured;
  /// Pairs that carried both j and l; their j edge is dropped.
  std::vector<std::pair<Vertex, Vertex>> deleted;
  /// new_to_old[k'] is the original colour for reduced colour k' (index 0 unused).
  std::vector<Colour> new_to_old;
};

struct MergeResult {
  ColouredMultigraph graph;
  MergeRecord record;
};

/// Merges colour j into colour l explicitly.
MergeResult merge_colour(const ColouredMultigraph& g, Colour merged, Colour target);

/// Merges the colour with the fewest edges (smallest index on ties) into the
/// colour sharing the fewest pairs with it (smallest index on ties). Requires
/// c >= 3 (TooFewColours otherwise).
MergeResult merge_least_frequent_colour(const ColouredMultigraph& g);

ProperPath lift_merged_path(const ProperPath& reduced_path, const MergeRecord& record,
                            const ColouredMultigraph& original);

enum class ContractionKind { Two, Three };

/// Which colour class survives at y in a two-vertex contraction. With attach
/// colour b and the other two colours r < g, RemoveBR keeps g and RemoveBG
/// keeps r. Auto prefers the option that keeps the result connected, then
/// RemoveBR.
enum class StripChoice { Auto, RemoveBR, RemoveBG };

struct ContractionRecord {
  ContractionKind kind = ContractionKind::Two;
  /// Two: {x}. Three: {x, y, z}.
  std::vector<Vertex> removed;
  /// Original vertex renamed to s (y for Two; -1 for Three, where s is new).
  Vertex renamed_from = -1;
  /// Index of s in the reduced graph.
  Vertex s = -1;
  /// Two: {b}. Three: {b, r} (colours of xy and xz).
  std::vector<Colour> attach_colours;
  /// Two only: colour classes removed at y, and the class that was kept.
  std::vector<Colour> stripped;
  Colour kept = 0;
  /// new_to_old[v'] is the original vertex for reduced vertex v' (for s: y
  /// in Two, -1 in Three).
  std::vector<Vertex> new_to_old;
  /// Edge accounting, m - m'.
  std::size_t edges_deleted = 0;
};

struct ContractionResult {
  ColouredMultigraph graph;
  ContractionRecord record;
};

/// Two-vertex contraction of x into its neighbour y (c = 3). Requires
/// |N(x)| = 1 or x monochromatic. The attach colour b is x's colour when x is
/// monochromatic, otherwise `attach` if given, otherwise chosen by `choice`.
ContractionResult contract_two(const ColouredMultigraph& g, Vertex x, Vertex y,
                               StripChoice choice = StripChoice::Auto,
                               std::optional<Colour> attach = std::nullopt);

ProperPath lift_two(const ProperPath& reduced_path, const ContractionRecord& record,
                    const ColouredMultigraph& original);

/// Three-vertex contraction with xy of colour b and xz of colour r (c = 3, b != r).
/// The reduced graph keeps the other vertices in order and appends s last.
ContractionResult contract_three(const ColouredMultigraph& g, Vertex x, Vertex y, Vertex z,
                                 Colour b, Colour r);
/// Same, with (b, r) the lexicographically first usable pair of colours.
ContractionResult contract_three(const ColouredMultigraph& g, Vertex x, Vertex y, Vertex z);

ProperPath lift_three(const ProperPath& reduced_path, const ContractionRecord& record,
                      const ColouredMultigraph& original);

}  // namespace ecmg
