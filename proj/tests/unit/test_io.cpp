#include <doctest.h>

#include "ecmg/io.hpp"
#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using ecmg::testing::error_kind_of;

TEST_CASE("graph file round trip") {
  SplitMix64 rng(77);
  for (int t = 0; t < 100; ++t) {
    const int n = 1 + static_cast<int>(rng.below(12));
    const auto g = ecmg::testing::random_graph(n, 2 + static_cast<int>(rng.below(4)), 1, 3, rng);
    CHECK(parse_graph(serialize_graph(g)) == g);
  }
}

TEST_CASE("graph file parsing") {
  const auto g = parse_graph("# comment\necmg 1\n\n3 2  # n c\n0 1 1\n1 2 2\n");
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(serialize_graph(g) == "ecmg 1\n3 2\n0 1 1\n1 2 2\n");

  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n0 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n0 1 1\n0 1 1\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n1 0 1\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n0 1 3\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n0 1\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 2\n3 2\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_graph("ecmg 1\n3 2\n0 1 x\n"); }) == ErrorKind::ParseError);
}

TEST_CASE("certificates") {
  const ProperPath p{{0, 2, 1}, {1, 2}};
  const Certificate cert{CertificateKind::Path, p};
  CHECK(format_certificate(cert) == "path: 0 -[1]- 2 -[2]- 1");
  const auto back = parse_certificate(format_certificate(cert));
  CHECK(back.kind == CertificateKind::Path);
  CHECK(back.path == p);
  CHECK(parse_certificate("absent\n").kind == CertificateKind::Absent);
  CHECK(parse_certificate("unsolved").kind == CertificateKind::Unsolved);
  CHECK(parse_certificate("path: 3").path.vertices.size() == 1);
  CHECK(error_kind_of([] { parse_certificate("path: 0 -[1]-"); }) == ErrorKind::ParseError);
  CHECK(error_kind_of([] { parse_certificate("maybe"); }) == ErrorKind::ParseError);

  // Emitted certificates re-validate against their graph.
  SplitMix64 rng(4);
  for (int t = 0; t < 50; ++t) {
    const auto g = ecmg::testing::random_graph(7, 3, 1, 2, rng);
    if (auto found = find_php(g)) {
      const auto again = parse_certificate(format_certificate({CertificateKind::Path, *found}));
      CHECK(is_proper_hamiltonian(parse_graph(serialize_graph(g)), again.path));
    }
  }
}
