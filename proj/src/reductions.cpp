#include "ecmg/reductions.hpp"

#include <algorithm>
#include <string>

#include "ecmg/error.hpp"
#include "ecmg/search.hpp"

namespace ecmg {

namespace {

void check_vertex(const ColouredMultigraph& g, Vertex v) {
  if (v < 0 || v >= g.n()) fail(ErrorKind::VertexOutOfRange, "vertex " + std::to_string(v));
}

[[noreturn]] void lift_failed(const std::string& why) { fail(ErrorKind::LiftFailed, why); }

std::size_t pair_overlap(const ColouredMultigraph& g, Colour a, Colour b) {
  std::size_t count = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    count += static_cast<std::size_t>(
        std::popcount(g.colour_neighbours(u, a) & g.colour_neighbours(u, b) & ~all_vertices(u + 1)));
  }
  return count;
}

/// Copies the subgraph induced by `keep` (in that order) into a builder with
/// `extra` additional trailing vertices.
GraphBuilder induced(const GraphBuilder& source, const std::vector<Vertex>& keep, int extra) {
  GraphBuilder out(static_cast<int>(keep.size()) + extra, source.c());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = i + 1; j < keep.size(); ++j) {
      out.set_colours(static_cast<Vertex>(i), static_cast<Vertex>(j), source.colours(keep[i], keep[j]));
    }
  }
  return out;
}

std::vector<Vertex> map_to_original(const ProperPath& reduced, const ContractionRecord& record) {
  std::vector<Vertex> out;
  out.reserve(reduced.vertices.size());
  for (Vertex v : reduced.vertices) {
    if (v < 0 || v >= static_cast<Vertex>(record.new_to_old.size())) lift_failed("vertex outside reduced graph");
    out.push_back(record.new_to_old[static_cast<std::size_t>(v)]);
  }
  return out;
}

ProperPath checked(ProperPath path, const ColouredMultigraph& original, std::size_t expected_len) {
  if (path.vertices.size() != expected_len || !validate(original, path)) {
    lift_failed("lifted path does not validate in the original graph");
  }
  return path;
}

void reverse_path(ProperPath& path) {
  std::reverse(path.vertices.begin(), path.vertices.end());
  std::reverse(path.colours.begin(), path.colours.end());
}

}  // namespace

// ---------------------------------------------------------------------------
// Colour merging

MergeResult merge_colour(const ColouredMultigraph& g, Colour merged, Colour target) {
  const int c = g.c();
  if (c < 3) fail(ErrorKind::TooFewColours, "merging needs at least 3 colours, got " + std::to_string(c));
  if (merged < 1 || merged > c || target < 1 || target > c) {
    fail(ErrorKind::ColourOutOfRange, "merge colours out of range");
  }
  if (merged == target) fail(ErrorKind::PreconditionViolated, "cannot merge a colour into itself");

  MergeRecord record;
  record.merged = merged;
  record.target = target;
  record.new_to_old.push_back(0);
  std::vector<Colour> old_to_new(static_cast<std::size_t>(c + 1), 0);
  for (Colour k = 1; k <= c; ++k) {
    if (k == merged) continue;
    old_to_new[static_cast<std::size_t>(k)] = static_cast<Colour>(record.new_to_old.size());
    record.new_to_old.push_back(k);
  }
  old_to_new[static_cast<std::size_t>(merged)] = old_to_new[static_cast<std::size_t>(target)];

  GraphBuilder builder(g.n(), c - 1);
  for (Vertex u = 0; u < g.n(); ++u) {
    for (Vertex v = u + 1; v < g.n(); ++v) {
      const ColourSet set = g.colours(u, v);
      if (set.empty()) continue;
      if (set.contains(merged)) {
        (set.contains(target) ? record.deleted : record.recoloured).emplace_back(u, v);
      }
      ColourSet reduced;
      for (Colour k : set.to_vector()) reduced.insert(old_to_new[static_cast<std::size_t>(k)]);
      builder.set_colours(u, v, reduced);
    }
  }
  MergeResult result{builder.build(), std::move(record)};

  if (result.graph.m() != g.m() - result.record.deleted.size()) {
    fail(ErrorKind::InvariantViolated, "merge edge accounting broken");
  }
  if (is_connected(result.graph) != is_connected(g)) {
    fail(ErrorKind::InvariantViolated, "merge changed connectivity");
  }
  return result;
}

MergeResult merge_least_frequent_colour(const ColouredMultigraph& g) {
  if (g.c() < 3) fail(ErrorKind::TooFewColours, "merging needs at least 3 colours, got " + std::to_string(g.c()));
  Colour merged = 1;
  for (Colour k = 2; k <= g.c(); ++k) {
    if (g.colour_class_size(k) < g.colour_class_size(merged)) merged = k;
  }
  Colour target = 0;
  std::size_t best_overlap = 0;
  for (Colour k = 1; k <= g.c(); ++k) {
    if (k == merged) continue;
    const std::size_t overlap = pair_overlap(g, merged, k);
    if (target == 0 || overlap < best_overlap) {
      target = k;
      best_overlap = overlap;
    }
  }
  return merge_colour(g, merged, target);
}

ProperPath lift_merged_path(const ProperPath& reduced_path, const MergeRecord& record,
                            const ColouredMultigraph& original) {
  ProperPath out;
  out.vertices = reduced_path.vertices;
  out.colours.reserve(reduced_path.colours.size());
  for (std::size_t i = 0; i < reduced_path.colours.size(); ++i) {
    const Colour reduced = reduced_path.colours[i];
    if (reduced < 1 || reduced >= static_cast<Colour>(record.new_to_old.size())) {
      lift_failed("colour outside reduced palette");
    }
    Colour colour = record.new_to_old[static_cast<std::size_t>(reduced)];
    if (colour == record.target && i + 1 < out.vertices.size() &&
        !original.has_edge(out.vertices[i], out.vertices[i + 1], record.target)) {
      colour = record.merged;
    }
    out.colours.push_back(colour);
  }
  return checked(std::move(out), original, reduced_path.vertices.size());
}

// ---------------------------------------------------------------------------
// Two-vertex contraction

namespace {

struct TwoOption {
  Colour attach;
  Colour kept;
};

ContractionResult apply_two(const ColouredMultigraph& g, Vertex x, Vertex y, TwoOption option) {
  GraphBuilder staged(g);
  staged.isolate(x);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == y || v == x) continue;
    staged.set_colours(y, v, g.colours(y, v) & ColourSet::single(option.kept));
  }

  ContractionRecord record;
  record.kind = ContractionKind::Two;
  record.removed = {x};
  record.renamed_from = y;
  record.attach_colours = {option.attach};
  record.kept = option.kept;
  for (Colour k = 1; k <= g.c(); ++k) {
    if (k != option.kept) record.stripped.push_back(k);
  }
  for (Vertex v = 0; v < g.n(); ++v) {
    if (v == x) continue;
    if (v == y) record.s = static_cast<Vertex>(record.new_to_old.size());
    record.new_to_old.push_back(v);
  }
  ColouredMultigraph reduced = induced(staged, record.new_to_old, 0).build();
  record.edges_deleted = g.m() - reduced.m();
  return {std::move(reduced), std::move(record)};
}

}  // namespace

ContractionResult contract_two(const ColouredMultigraph& g, Vertex x, Vertex y, StripChoice choice,
                               std::optional<Colour> attach) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (g.c() != 3) fail(ErrorKind::PreconditionViolated, "contractions are defined for 3 colours");
  if (x == y || g.colours(x, y).empty()) {
    fail(ErrorKind::PreconditionViolated, "y must be a neighbour of x");
  }
  const bool single_neighbour = std::popcount(g.neighbours(x)) == 1;
  const bool monochromatic = rainbow_degree(g, x) == 1;
  if (!single_neighbour && !monochromatic) {
    fail(ErrorKind::PreconditionViolated, "x needs a unique neighbour or a single colour");
  }

  std::vector<Colour> attach_candidates;
  if (monochromatic) {
    const Colour only = g.colours(x, y).lowest();
    if (attach && *attach != only) fail(ErrorKind::PreconditionViolated, "x is monochromatic in another colour");
    attach_candidates = {only};
  } else if (attach) {
    if (!g.has_edge(x, y, *attach)) fail(ErrorKind::PreconditionViolated, "xy lacks the attach colour");
    attach_candidates = {*attach};
  } else {
    attach_candidates = g.colours(x, y).to_vector();
  }

  auto option_for = [&](Colour b, StripChoice which) {
    std::vector<Colour> others;
    for (Colour k = 1; k <= 3; ++k) {
      if (k != b) others.push_back(k);
    }
    // others = {r, g} with r < g. RemoveBR keeps g, RemoveBG keeps r.
    return TwoOption{b, which == StripChoice::RemoveBG ? others[0] : others[1]};
  };

  if (choice != StripChoice::Auto) return apply_two(g, x, y, option_for(attach_candidates.front(), choice));

  for (Colour b : attach_candidates) {
    for (StripChoice which : {StripChoice::RemoveBR, StripChoice::RemoveBG}) {
      ContractionResult result = apply_two(g, x, y, option_for(b, which));
      if (is_connected(result.graph)) return result;
    }
  }
  return apply_two(g, x, y, option_for(attach_candidates.front(), StripChoice::RemoveBR));
}

ProperPath lift_two(const ProperPath& reduced_path, const ContractionRecord& record,
                    const ColouredMultigraph& original) {
  if (record.kind != ContractionKind::Two) lift_failed("record is not a two-vertex contraction");
  const Vertex x = record.removed.at(0);
  const Colour b = record.attach_colours.at(0);

  ProperPath path{map_to_original(reduced_path, record), reduced_path.colours};
  const Vertex y = record.renamed_from;
  if (path.vertices.empty()) lift_failed("empty path");
  if (path.vertices.back() == y) reverse_path(path);
  if (path.vertices.front() != y) lift_failed("contracted vertex is not an endpoint");

  path.vertices.insert(path.vertices.begin(), x);
  path.colours.insert(path.colours.begin(), b);
  return checked(std::move(path), original, reduced_path.vertices.size() + 1);
}

// ---------------------------------------------------------------------------
// Three-vertex contraction

ContractionResult contract_three(const ColouredMultigraph& g, Vertex x, Vertex y, Vertex z, Colour b,
                                 Colour r) {
  check_vertex(g, x);
  check_vertex(g, y);
  check_vertex(g, z);
  if (g.c() != 3) fail(ErrorKind::PreconditionViolated, "contractions are defined for 3 colours");
  if (x == y || y == z || x == z) fail(ErrorKind::PreconditionViolated, "x, y, z must be distinct");
  if (b < 1 || b > 3 || r < 1 || r > 3 || b == r) fail(ErrorKind::PreconditionViolated, "need two distinct colours");
  if (!g.has_edge(x, y, b) || !g.has_edge(x, z, r)) {
    fail(ErrorKind::PreconditionViolated, "requires xy in colour b and xz in colour r");
  }
  const Colour green = 6 - b - r;

  const VertexMask trio = vertex_bit(x) | vertex_bit(y) | vertex_bit(z);
  const VertexMask rest = all_vertices(g.n()) & ~trio;
  const VertexMask blue_side = g.colour_neighbours(z, b) & rest;
  const VertexMask red_side = g.colour_neighbours(y, r) & rest;
  const VertexMask green_side = g.colour_neighbours(y, green) & g.colour_neighbours(z, green) & rest;

  ContractionRecord record;
  record.kind = ContractionKind::Three;
  record.removed = {x, y, z};
  record.attach_colours = {b, r};
  for (Vertex v = 0; v < g.n(); ++v) {
    if ((rest & vertex_bit(v)) != 0) record.new_to_old.push_back(v);
  }
  record.s = static_cast<Vertex>(record.new_to_old.size());

  GraphBuilder builder = induced(GraphBuilder(g), record.new_to_old, 1);
  for (std::size_t i = 0; i < record.new_to_old.size(); ++i) {
    const VertexMask w = vertex_bit(record.new_to_old[i]);
    ColourSet set;
    if ((blue_side & w) != 0) set.insert(b);
    if ((red_side & w) != 0) set.insert(r);
    if ((green_side & w) != 0) set.insert(green);
    builder.set_colours(static_cast<Vertex>(i), record.s, set);
  }
  record.new_to_old.push_back(-1);
  ColouredMultigraph reduced = builder.build();
  record.edges_deleted = g.m() - reduced.m();

  const auto inside = static_cast<std::size_t>(g.colours(y, z).size());
  const auto bound = static_cast<std::size_t>(g.degree(x)) + 3 * static_cast<std::size_t>(g.n() - 3) + inside;
  if (record.edges_deleted > bound) fail(ErrorKind::InvariantViolated, "three-vertex contraction deleted too much");
  return {std::move(reduced), std::move(record)};
}

ContractionResult contract_three(const ColouredMultigraph& g, Vertex x, Vertex y, Vertex z) {
  check_vertex(g, x);
  check_vertex(g, y);
  check_vertex(g, z);
  for (Colour b : g.colours(x, y).to_vector()) {
    for (Colour r : g.colours(x, z).to_vector()) {
      if (b != r) return contract_three(g, x, y, z, b, r);
    }
  }
  fail(ErrorKind::PreconditionViolated, "xy and xz share no pair of distinct colours");
}

ProperPath lift_three(const ProperPath& reduced_path, const ContractionRecord& record,
                      const ColouredMultigraph& original) {
  if (record.kind != ContractionKind::Three) lift_failed("record is not a three-vertex contraction");
  const Vertex x = record.removed.at(0);
  const Vertex y = record.removed.at(1);
  const Vertex z = record.removed.at(2);
  const Colour b = record.attach_colours.at(0);
  const Colour r = record.attach_colours.at(1);
  const Colour green = 6 - b - r;
  const std::size_t expected = reduced_path.vertices.size() + 2;

  const auto pos_it = std::find(reduced_path.vertices.begin(), reduced_path.vertices.end(), record.s);
  if (pos_it == reduced_path.vertices.end()) lift_failed("contracted vertex missing from path");
  const auto pos = static_cast<std::size_t>(pos_it - reduced_path.vertices.begin());

  ProperPath mapped{map_to_original(reduced_path, record), reduced_path.colours};

  // The segment y-[b]-x-[r]-z accepts r or g at the y end and b or g at the z end.
  auto fits_y = [&](Colour k) { return k == r || k == green; };
  auto fits_z = [&](Colour k) { return k == b || k == green; };
  const std::vector<Vertex> forward{y, x, z};
  const std::vector<Colour> forward_colours{b, r};
  const std::vector<Vertex> backward{z, x, y};
  const std::vector<Colour> backward_colours{r, b};

  auto splice = [&](const std::vector<Vertex>& seg, const std::vector<Colour>& seg_colours) {
    ProperPath out;
    out.vertices.assign(mapped.vertices.begin(), mapped.vertices.begin() + static_cast<std::ptrdiff_t>(pos));
    out.vertices.insert(out.vertices.end(), seg.begin(), seg.end());
    out.vertices.insert(out.vertices.end(), mapped.vertices.begin() + static_cast<std::ptrdiff_t>(pos) + 1,
                        mapped.vertices.end());
    out.colours.assign(mapped.colours.begin(), mapped.colours.begin() + static_cast<std::ptrdiff_t>(pos));
    out.colours.insert(out.colours.end(), seg_colours.begin(), seg_colours.end());
    out.colours.insert(out.colours.end(), mapped.colours.begin() + static_cast<std::ptrdiff_t>(pos),
                       mapped.colours.end());
    return out;
  };

  const bool has_before = pos > 0;
  const bool has_after = pos + 1 < mapped.vertices.size();
  // 0 stands for "no edge on that side".
  const Colour before = has_before ? mapped.colours[pos - 1] : 0;
  const Colour after = has_after ? mapped.colours[pos] : 0;

  // Forward orientation puts y next to the predecessor and z next to the successor.
  const bool forward_ok = (before == 0 || fits_y(before)) && (after == 0 || fits_z(after));
  const bool backward_ok = (before == 0 || fits_z(before)) && (after == 0 || fits_y(after));

  ProperPath lifted;
  if (has_before || !has_after) {
    // Interior, last vertex, or lone vertex: y attachment first.
    if (forward_ok) {
      lifted = splice(forward, forward_colours);
    } else if (backward_ok) {
      lifted = splice(backward, backward_colours);
    } else {
      lift_failed("no orientation of the contracted segment is proper");
    }
  } else {
    // s is the first vertex: attach the successor at y first.
    if (backward_ok) {
      lifted = splice(backward, backward_colours);
    } else if (forward_ok) {
      lifted = splice(forward, forward_colours);
    } else {
      lift_failed("no orientation of the contracted segment is proper");
    }
  }
  return checked(std::move(lifted), original, expected);
}

}  // namespace ecmg
