#pragma once

// Verification campaigns. Each campaign runs independent seeded instances,
// optionally on several worker threads, and merges results in instance order
// so reports are identical for a fixed seed regardless of thread count.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ecmg/graph.hpp"
#include "ecmg/theorems.hpp"

namespace ecmg {

struct VerificationReport {
  std::string label;
  std::uint64_t seed = 0;
  bool exhaustive = false;
  std::uint64_t trials = 0;
  std::uint64_t hypothesis_met = 0;
  std::uint64_t successes = 0;
  /// Witness graphs for failures (met but not successful), capped at
  /// kMaxWitnesses; the failure count itself is hypothesis_met - successes.
  std::vector<ColouredMultigraph> violations;

  static constexpr std::size_t kMaxWitnesses = 64;

  std::uint64_t violation_count() const noexcept { return hypothesis_met - successes; }
  void merge(const VerificationReport& other);
};

/// `trials=<t> met=<h> ok=<s> violations=<v>`
std::string format_report(const VerificationReport& report);

struct CampaignOptions {
  /// Worker threads; 0 means the ECMG_THREADS environment variable, or all
  /// hardware threads when that is unset or 0.
  int threads = 0;
};

int resolve_threads(int requested);

enum class CheckMode { Exhaustive, Sampled };

/// Proper path x1 y1 ... xp yp with red xi yi: if no proper cycle spans V(P),
/// at least (c-1)(2p-2) non-red edges are missing. Exhaustive mode (p = 3,
/// c = 2 only; InfeasibleExhaustive otherwise) fixes the path and walks all
/// 2^13 blue subsets of the remaining pairs.
VerificationReport check_lemma_edges_without_cycle(int p, int c, CheckMode mode, std::uint64_t samples = 0,
                                                   std::uint64_t seed = 0, const CampaignOptions& options = {});

/// Longest proper path compatible with a red matching of the case's size: when
/// 2p < path_limit, at least f_lower_bound(n, c, case) non-red edges are missing.
VerificationReport check_lemma_missing_edges_matching(int n, int c, MatchingCase which, std::uint64_t samples,
                                                      std::uint64_t seed, const CampaignOptions& options = {});

/// Connected simple graphs with n >= 9, m >= C(n-2,2)+3 have a matching of size floor(n/2).
VerificationReport check_lemma_matchings_perfect(int n, std::uint64_t samples, std::uint64_t seed,
                                                 const CampaignOptions& options = {});

/// Simple graphs with n >= 14, m >= C(n-3,2)+4, min degree >= 1 have a matching of size >= ceil((n-2)/2).
VerificationReport check_lemma_matching(int n, std::uint64_t samples, std::uint64_t seed,
                                        const CampaignOptions& options = {});

/// Samples 2-coloured rd = 2 graphs with m in [bound, bound + n] and checks
/// the two colour-matching sizes.
VerificationReport check_lemma_matchings12(std::span<const int> ns, std::uint64_t samples_per_n,
                                           std::uint64_t seed, const CampaignOptions& options = {});

/// Samples graphs satisfying the theorem's hypothesis with m in
/// [threshold, threshold + n] and checks that find_php succeeds.
VerificationReport verify_theorem(TheoremId id, std::span<const int> ns, int c, std::uint64_t samples_per_n,
                                  std::uint64_t seed, const CampaignOptions& options = {});

}  // namespace ecmg
