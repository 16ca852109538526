#pragma once

// Seeded, reproducible random instances.
//
// Generator: SplitMix64. State update and output, all arithmetic mod 2^64:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// Bounded draws `below(b)` reject raw outputs r < (2^64 - b) mod b and return
// r mod b. Instance i of a campaign seeded with s uses the stream seeded with
// s XOR i. Slot selection is a partial Fisher-Yates shuffle over slot indices
// (pair index * c + colour - 1), pairs enumerated (0,1), (0,2), ..., (n-2,n-1).

#include <cstdint>
#include <optional>

#include "ecmg/graph.hpp"

namespace ecmg {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  std::uint64_t next() noexcept;
  /// Uniform integer in [0, bound); bound must be > 0.
  std::uint64_t below(std::uint64_t bound) noexcept;
  /// True with probability numerator / denominator.
  bool chance(std::uint64_t numerator, std::uint64_t denominator) noexcept {
    return below(denominator) < numerator;
  }

  /// Stream for instance `index` of a campaign seeded with `seed`.
  static SplitMix64 for_instance(std::uint64_t seed, std::uint64_t index) noexcept {
    return SplitMix64(seed ^ index);
  }

 private:
  std::uint64_t state_;
};

struct SamplerSpec {
  int n = 2;
  int c = 2;
  /// Edge count drawn uniformly from [m_min, m_max].
  std::int64_t m_min = 0;
  std::int64_t m_max = 0;
  /// If set, rd(G) must equal this value.
  std::optional<int> rainbow_degree;
  bool require_connected = false;
  std::uint64_t seed = 0;
  int max_attempts = 10000;
};

/// Uniform choice of m distinct (pair, colour) slots, redrawn until the
/// optional constraints hold. Throws ConstraintUnsatisfiable when the
/// constraints are impossible for the edge range or the attempt cap is hit.
ColouredMultigraph sample(const SamplerSpec& spec);
/// Same, drawing from an existing stream.
ColouredMultigraph sample(const SamplerSpec& spec, SplitMix64& rng);

/// Uniform simple graph with exactly m edges.
SimpleGraph sample_simple(int n, std::int64_t m, SplitMix64& rng);

}  // namespace ecmg
