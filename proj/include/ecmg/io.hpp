#pragma once

// Text formats.
//
// Graph file:
//   ecmg 1
//   <n> <c>
//   <u> <v> <k>      one line per edge, u < v, colour k in 1..c
// Blank lines and anything after '#' are ignored. Serialization writes the
// edges sorted by (u, v, k).
//
// Certificate: `path: 0 -[1]- 1 -[2]- 2`, `absent` or `unsolved`.

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ecmg/graph.hpp"

namespace ecmg {

/// Throws ParseError (with a line number) on malformed input, and the
/// graph's own errors (SelfLoop, DuplicateParallelEdge, ...) rethrown as
/// ParseError.
ColouredMultigraph parse_graph(std::string_view text);
ColouredMultigraph read_graph_file(const std::string& path);

std::string serialize_graph(const ColouredMultigraph& g);
void write_graph_file(const std::string& path, const ColouredMultigraph& g);

enum class CertificateKind { Path, Absent, Unsolved };

struct Certificate {
  CertificateKind kind = CertificateKind::Absent;
  ProperPath path;
};

std::string format_certificate(const Certificate& cert);
std::string format_path(const ProperPath& path);
Certificate parse_certificate(std::string_view text);

}  // namespace ecmg
