#include "ecmg/io.hpp"

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "ecmg/error.hpp"

namespace ecmg {

namespace {

[[noreturn]] void parse_fail(int line, const std::string& what) {
  fail(ErrorKind::ParseError, "line " + std::to_string(line) + ": " + what);
}

std::string strip_comment(std::string line) {
  if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  return line;
}

// Reads exactly `count` integers from the line; anything else is an error.
std::vector<long long> read_ints(const std::string& line, std::size_t count, int lineno) {
  std::istringstream in(line);
  std::vector<long long> values;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    long long value = 0;
    try {
      value = std::stoll(token, &used);
    } catch (const std::exception&) {
      parse_fail(lineno, "expected an integer, got '" + token + "'");
    }
    if (used != token.size()) parse_fail(lineno, "expected an integer, got '" + token + "'");
    values.push_back(value);
  }
  if (values.size() != count) {
    parse_fail(lineno, "expected " + std::to_string(count) + " integers, got " + std::to_string(values.size()));
  }
  return values;
}

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

ColouredMultigraph parse_graph(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  int stage = 0;
  std::optional<GraphBuilder> builder;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = strip_comment(raw);
    if (blank(line)) continue;
    if (stage == 0) {
      std::istringstream header(line);
      std::string magic;
      std::string version;
      std::string extra;
      header >> magic >> version;
      if (magic != "ecmg" || version != "1" || (header >> extra)) parse_fail(lineno, "expected header 'ecmg 1'");
      stage = 1;
      continue;
    }
    if (stage == 1) {
      const auto nc = read_ints(line, 2, lineno);
      if (nc[0] < 1 || nc[0] > kMaxVertices) parse_fail(lineno, "n out of range");
      if (nc[1] < 2 || nc[1] > kMaxColours) parse_fail(lineno, "c out of range");
      builder.emplace(static_cast<int>(nc[0]), static_cast<int>(nc[1]));
      stage = 2;
      continue;
    }
    const auto e = read_ints(line, 3, lineno);
    if (e[0] == e[1]) parse_fail(lineno, "self-loop");
    if (e[0] > e[1]) parse_fail(lineno, "edge endpoints must satisfy u < v");
    try {
      builder->add_edge(static_cast<Vertex>(e[0]), static_cast<Vertex>(e[1]), static_cast<Colour>(e[2]));
    } catch (const Error& err) {
      parse_fail(lineno, err.what());
    }
  }
  if (stage < 2) parse_fail(lineno, stage == 0 ? "missing header" : "missing 'n c' line");
  return builder->build();
}

ColouredMultigraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

std::string serialize_graph(const ColouredMultigraph& g) {
  std::ostringstream out;
  out << "ecmg 1\n" << g.n() << ' ' << g.c() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << ' ' << e.colour << '\n';
  return out.str();
}

void write_graph_file(const std::string& path, const ColouredMultigraph& g) {
  std::ofstream out(path);
  if (!out) fail(ErrorKind::InvalidArgument, "cannot write " + path);
  out << serialize_graph(g);
}

std::string format_path(const ProperPath& path) {
  std::ostringstream out;
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    if (i > 0) out << " -[" << path.colours[i - 1] << "]- ";
    out << path.vertices[i];
  }
  return out.str();
}

std::string format_certificate(const Certificate& cert) {
  switch (cert.kind) {
    case CertificateKind::Path: return "path: " + format_path(cert.path);
    case CertificateKind::Absent: return "absent";
    case CertificateKind::Unsolved: return "unsolved";
  }
  return "unsolved";
}

Certificate parse_certificate(std::string_view text) {
  std::string s(text);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
  if (s == "absent") return {CertificateKind::Absent, {}};
  if (s == "unsolved") return {CertificateKind::Unsolved, {}};
  if (s.rfind("path:", 0) != 0) fail(ErrorKind::ParseError, "unrecognised certificate");
  std::istringstream in(s.substr(5));
  Certificate cert{CertificateKind::Path, {}};
  std::string token;
  bool want_vertex = true;
  while (in >> token) {
    try {
      if (want_vertex) {
        std::size_t used = 0;
        cert.path.vertices.push_back(std::stoi(token, &used));
        if (used != token.size()) throw std::invalid_argument(token);
      } else {
        if (token.size() < 5 || token.rfind("-[", 0) != 0 || token.substr(token.size() - 2) != "]-") {
          throw std::invalid_argument(token);
        }
        std::size_t used = 0;
        const std::string inner = token.substr(2, token.size() - 4);
        cert.path.colours.push_back(std::stoi(inner, &used));
        if (used != inner.size()) throw std::invalid_argument(token);
      }
    } catch (const std::exception&) {
      fail(ErrorKind::ParseError, "malformed certificate token '" + token + "'");
    }
    want_vertex = !want_vertex;
  }
  if (cert.path.vertices.empty() || want_vertex) fail(ErrorKind::ParseError, "certificate path is incomplete");
  return cert;
}

}  // namespace ecmg
