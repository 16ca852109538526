#include <doctest.h>

#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"
#include "ecmg/theorems.hpp"
#include "ecmg/verification.hpp"
#include "support/oracles.hpp"

using namespace ecmg;
using ecmg::testing::error_kind_of;

TEST_CASE("threshold formulas") {
  CHECK(threshold(TheoremId::S2, 8, 2) == 44);
  CHECK(threshold(TheoremId::General, 10, 3) == 109);
  CHECK(threshold(TheoremId::Connected, 10, 3) == 94);
  CHECK(threshold(TheoremId::Rainbow, 11, 3) == 115);
  CHECK(threshold(TheoremId::RD2, 14, 2) == 91 + 55 + 4);
  CHECK(error_kind_of([] { threshold(TheoremId::S2, 7, 2); }) == ErrorKind::OutOfStatedRange);
  CHECK(error_kind_of([] { threshold(TheoremId::Connected, 9, 5); }) == ErrorKind::OutOfStatedRange);
}

TEST_CASE("hypothesis predicates") {
  const auto rc = ColouredMultigraph::rainbow_complete(14, 2);
  CHECK(hypothesis_holds(rc, TheoremId::S2));
  CHECK(hypothesis_holds(rc, TheoremId::RD2));
  CHECK_FALSE(hypothesis_holds(extremal(TheoremId::General, 8, 3), TheoremId::General));
  CHECK_FALSE(hypothesis_holds(ColouredMultigraph::empty(12, 3), TheoremId::Connected));
  CHECK_FALSE(hypothesis_holds(ColouredMultigraph::rainbow_complete(7, 2), TheoremId::S2));
}

TEST_CASE("extremal constructions are tight") {
  struct Case {
    TheoremId id;
    int n;
    int c;
    std::size_t m;
  };
  for (const Case& k : {Case{TheoremId::S2, 9, 2, 57}, Case{TheoremId::RD2, 15, 2, 174},
                        Case{TheoremId::General, 8, 3, 63}, Case{TheoremId::Connected, 9, 3, 71},
                        Case{TheoremId::Rainbow, 11, 3, 114}}) {
    const auto g = extremal(k.id, k.n, k.c);
    CHECK(g.m() == k.m);
    CHECK(static_cast<std::int64_t>(g.m()) == threshold(k.id, k.n, k.c) - 1);
    CHECK_FALSE(find_php(g).has_value());
  }
  CHECK(rainbow_degree_graph(extremal(TheoremId::Rainbow, 11, 3)) == 3);
  const auto con = extremal(TheoremId::Connected, 9, 3);
  CHECK(is_connected(con));
  CHECK(con.degree(7) == 1);
  CHECK(error_kind_of([] { extremal(TheoremId::S2, 8, 2); }) == ErrorKind::OutOfStatedRange);

  // Other legal sizes, including c > 3.
  for (int n = 9; n <= 13; n += 2) CHECK_FALSE(find_php(extremal(TheoremId::S2, n, 2)).has_value());
  CHECK_FALSE(find_php(extremal(TheoremId::General, 9, 4)).has_value());
  CHECK_FALSE(find_php(extremal(TheoremId::Connected, 11, 4)).has_value());
  CHECK_FALSE(find_php(extremal(TheoremId::Rainbow, 12, 4)).has_value());
}

TEST_CASE("f lower bound") {
  CHECK(f_lower_bound(10, 3, MatchingCase::EvenFull) == 32);
  CHECK(f_lower_bound(11, 2, MatchingCase::Odd) == 16);
  CHECK(f_lower_bound(10, 2, MatchingCase::EvenDeficient) == 12);
  for (int c = 2; c <= 6; ++c) {
    CHECK(f_lower_bound(12, c, MatchingCase::EvenFull) == (c - 1) * f_lower_bound(12, 2, MatchingCase::EvenFull));
  }
  CHECK(error_kind_of([] { f_lower_bound(9, 2, MatchingCase::EvenFull); }) == ErrorKind::ParityMismatch);
}

TEST_CASE("sampler") {
  SamplerSpec full;
  full.n = 6;
  full.c = 3;
  full.m_min = full.m_max = 45;
  CHECK(sample(full) == ColouredMultigraph::rainbow_complete(6, 3));

  SamplerSpec zero;
  zero.n = 4;
  zero.c = 2;
  zero.require_connected = true;
  CHECK(error_kind_of([&] { sample(zero); }) == ErrorKind::ConstraintUnsatisfiable);

  SamplerSpec rd;
  rd.n = 10;
  rd.c = 3;
  rd.m_min = rd.m_max = 10;
  rd.rainbow_degree = 3;
  CHECK(error_kind_of([&] { sample(rd); }) == ErrorKind::ConstraintUnsatisfiable);

  SamplerSpec fixed;
  fixed.n = 10;
  fixed.c = 3;
  fixed.m_min = fixed.m_max = 100;
  fixed.seed = 42;
  const auto a = sample(fixed);
  CHECK(a.m() == 100);
  CHECK(a == sample(fixed));
  fixed.seed = 43;
  CHECK_FALSE(a == sample(fixed));

  SplitMix64 rng(0);
  CHECK(rng.next() == 0xE220A8397B1DCDAFull);
}

TEST_CASE("verification campaigns are deterministic across thread counts") {
  const int ns[] = {9};
  const auto one = verify_theorem(TheoremId::S2, ns, 2, 40, 5, CampaignOptions{1});
  const auto many = verify_theorem(TheoremId::S2, ns, 2, 40, 5, CampaignOptions{4});
  CHECK(format_report(one) == format_report(many));
  CHECK(one.successes == one.hypothesis_met);
  CHECK(one.hypothesis_met <= one.trials);
}

TEST_CASE("lemma checkers at small scale") {
  const auto ewc = check_lemma_edges_without_cycle(3, 2, CheckMode::Exhaustive);
  CHECK(ewc.trials == 8192);
  CHECK(ewc.exhaustive);
  CHECK(ewc.violation_count() == 0);
  CHECK(ewc.hypothesis_met > 0);
  CHECK(error_kind_of([] { check_lemma_edges_without_cycle(5, 2, CheckMode::Exhaustive); }) ==
        ErrorKind::InfeasibleExhaustive);

  const auto sampled = check_lemma_edges_without_cycle(4, 3, CheckMode::Sampled, 300, 9);
  CHECK(sampled.violation_count() == 0);

  const auto mem = check_lemma_missing_edges_matching(8, 2, MatchingCase::EvenFull, 500, 3);
  CHECK(mem.violation_count() == 0);
  CHECK(mem.hypothesis_met > 0);
  CHECK(error_kind_of([] { check_lemma_missing_edges_matching(9, 2, MatchingCase::EvenFull, 1, 1); }) ==
        ErrorKind::ParityMismatch);

  CHECK(check_lemma_matchings_perfect(9, 300, 1).violation_count() == 0);
  CHECK(check_lemma_matching(14, 300, 1).violation_count() == 0);
  const int ns[] = {14};
  CHECK(check_lemma_matchings12(ns, 50, 1).violation_count() == 0);
}
