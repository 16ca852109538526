#include "ecmg/verification.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ecmg/error.hpp"
#include "ecmg/matching.hpp"
#include "ecmg/sampler.hpp"
#include "ecmg/search.hpp"

namespace ecmg {

void VerificationReport::merge(const VerificationReport& other) {
  trials += other.trials;
  hypothesis_met += other.hypothesis_met;
  successes += other.successes;
  for (const auto& g : other.violations) {
    if (violations.size() >= kMaxWitnesses) break;
    violations.push_back(g);
  }
}

std::string format_report(const VerificationReport& report) {
  std::ostringstream out;
  out << "trials=" << report.trials << " met=" << report.hypothesis_met << " ok=" << report.successes
      << " violations=" << report.violation_count() << " mode=" << (report.exhaustive ? "exhaustive" : "sampled")
      << " seed=" << report.seed;
  return out.str();
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ECMG_THREADS")) {
    char* end = nullptr;
    const long value = std::strtol(env, &end, 10);
    if (end != env && value > 0) return static_cast<int>(std::min<long>(value, 256));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

using Instance = std::function<VerificationReport(std::uint64_t)>;

// Splits [0, count) into contiguous chunks, one per worker; each chunk is
// merged in index order and the chunks are merged in order, so the result
// does not depend on the thread count.
VerificationReport run_campaign(std::uint64_t count, const CampaignOptions& options, const Instance& instance) {
  const auto workers =
      static_cast<std::uint64_t>(std::max(1, std::min<int>(resolve_threads(options.threads),
                                                           static_cast<int>(std::min<std::uint64_t>(count, 256)))));
  std::vector<VerificationReport> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](std::uint64_t w) {
    const std::uint64_t lo = count * w / workers;
    const std::uint64_t hi = count * (w + 1) / workers;
    try {
      for (std::uint64_t i = lo; i < hi; ++i) partial[w].merge(instance(i));
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  VerificationReport total;
  for (std::uint64_t w = 0; w < workers; ++w) {
    if (errors[w]) std::rethrow_exception(errors[w]);
    total.merge(partial[w]);
  }
  return total;
}

VerificationReport outcome(const ColouredMultigraph& g, bool met, bool ok) {
  VerificationReport r;
  r.trials = 1;
  if (met) {
    r.hypothesis_met = 1;
    if (ok) {
      r.successes = 1;
    } else {
      r.violations.push_back(g);
    }
  }
  return r;
}

ColouredMultigraph as_multigraph(const SimpleGraph& h) {
  GraphBuilder builder(h.n(), 2);
  for (const auto& [u, v] : h.edges()) builder.add_edge(u, v, 1);
  return builder.build();
}

constexpr Colour kRed = 1;

// Density in [1/8, 7/8], drawn per instance so samples spread over sparse
// and dense graphs alike.
std::uint64_t draw_density(SplitMix64& rng) { return 1 + rng.below(7); }

// Lays out the path 0 1 2 ... 2p-1: red on (2i, 2i+1), colour 2 on the
// connectors (2i+1, 2i+2).
GraphBuilder path_skeleton(int p, int c) {
  GraphBuilder builder(2 * p, c);
  for (int i = 0; i < p; ++i) builder.add_edge(2 * i, 2 * i + 1, kRed);
  for (int i = 0; i + 1 < p; ++i) builder.add_edge(2 * i + 1, 2 * i + 2, 2);
  return builder;
}

bool is_path_pair(Vertex u, Vertex v) { return v == u + 1; }

VerificationReport judge_cycle_instance(const ColouredMultigraph& g, int p) {
  std::vector<Vertex> all(static_cast<std::size_t>(2 * p));
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<Vertex>(i);
  const bool no_cycle = !exists_proper_cycle_on(g, all);
  const auto bound = static_cast<std::size_t>((g.c() - 1) * (2 * p - 2));
  return outcome(g, no_cycle, missing_edges_excluding(g, kRed) >= bound);
}

}  // namespace

VerificationReport check_lemma_edges_without_cycle(int p, int c, CheckMode mode, std::uint64_t samples,
                                                   std::uint64_t seed, const CampaignOptions& options) {
  if (p < 3 || c < 2 || c > kMaxColours || 2 * p > 20) {
    fail(ErrorKind::InvalidArgument, "edges_without_cycle needs p >= 3 (2p <= 20) and 2 <= c <= 15");
  }
  VerificationReport report;
  if (mode == CheckMode::Exhaustive) {
    if (p != 3 || c != 2) {
      fail(ErrorKind::InfeasibleExhaustive, "exhaustive edges_without_cycle supports p = 3, c = 2 only, got p=" +
                                                std::to_string(p) + ", c=" + std::to_string(c));
    }
    std::vector<std::pair<Vertex, Vertex>> free_pairs;
    for (Vertex u = 0; u < 2 * p; ++u) {
      for (Vertex v = u + 1; v < 2 * p; ++v) {
        if (!(is_path_pair(u, v) && u % 2 == 1)) free_pairs.emplace_back(u, v);
      }
    }
    const std::uint64_t total = std::uint64_t{1} << free_pairs.size();
    report = run_campaign(total, options, [&](std::uint64_t code) {
      GraphBuilder builder = path_skeleton(p, c);
      for (std::size_t i = 0; i < free_pairs.size(); ++i) {
        if ((code >> i) & 1u) builder.add_edge(free_pairs[i].first, free_pairs[i].second, 2);
      }
      return judge_cycle_instance(builder.build(), p);
    });
    report.exhaustive = true;
  } else {
    report = run_campaign(samples, options, [&](std::uint64_t index) {
      SplitMix64 rng = SplitMix64::for_instance(seed, index);
      const std::uint64_t density = draw_density(rng);
      GraphBuilder builder = path_skeleton(p, c);
      for (Vertex u = 0; u < 2 * p; ++u) {
        for (Vertex v = u + 1; v < 2 * p; ++v) {
          for (Colour k = 1; k <= c; ++k) {
            if (builder.colours(u, v).contains(k)) continue;
            // Extra red edges are kept sparse: they only make cycles easier.
            const bool take = k == kRed ? rng.chance(1, 8) : rng.chance(density, 8);
            if (take) builder.insert_edge(u, v, k);
          }
        }
      }
      return judge_cycle_instance(builder.build(), p);
    });
  }
  report.label = "edges-without-cycle p=" + std::to_string(p) + " c=" + std::to_string(c);
  report.seed = seed;
  return report;
}

VerificationReport check_lemma_missing_edges_matching(int n, int c, MatchingCase which, std::uint64_t samples,
                                                      std::uint64_t seed, const CampaignOptions& options) {
  const int size = matching_size(n, which);
  const int limit = path_limit(n, which);
  const std::int64_t bound = f_lower_bound(n, c, which);
  if (n > 20 || c > kMaxColours) fail(ErrorKind::InvalidArgument, "missing_edges_matching needs n <= 20");

  VerificationReport report = run_campaign(samples, options, [&](std::uint64_t index) {
    SplitMix64 rng = SplitMix64::for_instance(seed, index);
    const std::uint64_t density = draw_density(rng);
    GraphBuilder builder(n, c);
    Matching m;
    m.colour = kRed;
    for (int i = 0; i < size; ++i) {
      builder.add_edge(2 * i, 2 * i + 1, kRed);
      m.pairs.emplace_back(2 * i, 2 * i + 1);
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        for (Colour k = 1; k <= c; ++k) {
          if (builder.colours(u, v).contains(k)) continue;
          // Extra red edges must not enlarge the matching beyond its case;
          // only pairs touching an unmatched vertex could, so skip those.
          if (k == kRed && (u >= 2 * size || v >= 2 * size)) continue;
          const bool take = k == kRed ? rng.chance(1, 8) : rng.chance(density, 8);
          if (take) builder.insert_edge(u, v, k);
        }
      }
    }
    const ColouredMultigraph g = builder.build();
    bool met = is_connected(g);
    bool ok = true;
    if (met) {
      const ProperPath longest = longest_compatible_path(g, m);
      const int two_p = static_cast<int>(longest.vertices.size());
      met = two_p >= 6 && two_p < limit;
      ok = static_cast<std::int64_t>(missing_edges_excluding(g, kRed)) >= bound;
    }
    return outcome(g, met, ok);
  });
  report.label = "missing-edges-matching n=" + std::to_string(n) + " c=" + std::to_string(c) + " case=" +
                 std::string(to_string(which));
  report.seed = seed;
  return report;
}

VerificationReport check_lemma_matchings_perfect(int n, std::uint64_t samples, std::uint64_t seed,
                                                 const CampaignOptions& options) {
  if (n < 9 || n > kMaxVertices) fail(ErrorKind::OutOfStatedRange, "matchingsPerfect is stated for n >= 9");
  const std::int64_t lo = choose2(n - 2) + 3;
  const std::int64_t hi = std::min(lo + n, choose2(n));
  VerificationReport report = run_campaign(samples, options, [&](std::uint64_t index) {
    SplitMix64 rng = SplitMix64::for_instance(seed, index);
    const auto m = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    const SimpleGraph h = sample_simple(n, m, rng);
    const bool met = is_connected(h);
    const bool ok = !met || static_cast<int>(maximum_matching(h).size()) == n / 2;
    return outcome(as_multigraph(h), met, ok);
  });
  report.label = "matchings-perfect n=" + std::to_string(n);
  report.seed = seed;
  return report;
}

VerificationReport check_lemma_matching(int n, std::uint64_t samples, std::uint64_t seed,
                                        const CampaignOptions& options) {
  if (n < 14 || n > kMaxVertices) fail(ErrorKind::OutOfStatedRange, "matching lemma is stated for n >= 14");
  const std::int64_t lo = choose2(n - 3) + 4;
  const std::int64_t hi = std::min(lo + n, choose2(n));
  VerificationReport report = run_campaign(samples, options, [&](std::uint64_t index) {
    SplitMix64 rng = SplitMix64::for_instance(seed, index);
    const auto m = lo + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(hi - lo + 1)));
    const SimpleGraph h = sample_simple(n, m, rng);
    bool met = true;
    for (Vertex v = 0; v < n; ++v) met = met && h.degree(v) >= 1;
    const bool ok = !met || static_cast<int>(maximum_matching(h).size()) >= (n - 1) / 2;
    return outcome(as_multigraph(h), met, ok);
  });
  report.label = "matching n=" + std::to_string(n);
  report.seed = seed;
  return report;
}

VerificationReport check_lemma_matchings12(std::span<const int> ns, std::uint64_t samples_per_n, std::uint64_t seed,
                                           const CampaignOptions& options) {
  VerificationReport report;
  std::uint64_t offset = 0;
  for (int n : ns) {
    if (n < 14 || n > kMaxVertices) fail(ErrorKind::OutOfStatedRange, "matchings12 is stated for n >= 14");
    SamplerSpec spec;
    spec.n = n;
    spec.c = 2;
    spec.m_min = choose2(n) + choose2(n - 3) + 4;
    spec.m_max = std::min(spec.m_min + n, 2 * choose2(n));
    spec.rainbow_degree = 2;
    const std::uint64_t base = offset;
    report.merge(run_campaign(samples_per_n, options, [&](std::uint64_t index) {
      SplitMix64 rng = SplitMix64::for_instance(seed, base + index);
      const ColouredMultigraph g = sample(spec, rng);
      bool ok = true;
      try {
        guaranteed_matchings_2col(g);
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::GuaranteeViolated) throw;
        ok = false;
      }
      return outcome(g, true, ok);
    }));
    offset += samples_per_n;
  }
  report.label = "matchings12";
  report.seed = seed;
  return report;
}

VerificationReport verify_theorem(TheoremId id, std::span<const int> ns, int c, std::uint64_t samples_per_n,
                                  std::uint64_t seed, const CampaignOptions& options) {
  VerificationReport report;
  std::uint64_t offset = 0;
  for (int n : ns) {
    SamplerSpec spec;
    spec.n = n;
    spec.c = c;
    spec.m_min = threshold(id, n, c);
    spec.m_max = std::min<std::int64_t>(spec.m_min + n, c * choose2(n));
    if (id == TheoremId::RD2) spec.rainbow_degree = 2;
    if (id == TheoremId::Rainbow) spec.rainbow_degree = c;
    spec.require_connected = id == TheoremId::Connected;
    const std::uint64_t base = offset;
    report.merge(run_campaign(samples_per_n, options, [&](std::uint64_t index) {
      SplitMix64 rng = SplitMix64::for_instance(seed, base + index);
      const ColouredMultigraph g = sample(spec, rng);
      const bool met = hypothesis_holds(g, id);
      bool ok = true;
      if (met) {
        const auto path = find_php(g);
        ok = path && is_proper_hamiltonian(g, *path);
      }
      return outcome(g, met, ok);
    }));
    offset += samples_per_n;
  }
  report.label = "theorem " + std::string(to_string(id)) + " c=" + std::to_string(c);
  report.seed = seed;
  return report;
}

}  // namespace ecmg
