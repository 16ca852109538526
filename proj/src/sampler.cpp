#include "ecmg/sampler.hpp"

#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "ecmg/error.hpp"

namespace ecmg {

std::uint64_t SplitMix64::next() noexcept {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) noexcept {
  const std::uint64_t threshold = (0 - bound) % bound;
  while (true) {
    const std::uint64_t r = next();
    if (r >= threshold) return r % bound;
  }
}

namespace {

std::vector<std::pair<Vertex, Vertex>> all_pairs(int n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(static_cast<std::size_t>(choose2(n)));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

/// First `count` entries of a partial Fisher-Yates shuffle of 0..total-1.
std::vector<std::size_t> choose_slots(std::size_t total, std::size_t count, SplitMix64& rng) {
  std::vector<std::size_t> slots(total);
  std::iota(slots.begin(), slots.end(), std::size_t{0});
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(rng.below(total - i));
    std::swap(slots[i], slots[j]);
  }
  slots.resize(count);
  return slots;
}

[[noreturn]] void unsatisfiable(const std::string& why) { fail(ErrorKind::ConstraintUnsatisfiable, why); }

}  // namespace

ColouredMultigraph sample(const SamplerSpec& spec) {
  SplitMix64 rng(spec.seed);
  return sample(spec, rng);
}

ColouredMultigraph sample(const SamplerSpec& spec, SplitMix64& rng) {
  const int n = spec.n;
  const int c = spec.c;
  GraphBuilder shape_check(n, c);  // validates n and c
  const std::int64_t slots = c * choose2(n);
  if (spec.m_min < 0 || spec.m_min > spec.m_max || spec.m_max > slots) {
    fail(ErrorKind::InvalidArgument, "edge range [" + std::to_string(spec.m_min) + ", " +
                                         std::to_string(spec.m_max) + "] outside 0.." + std::to_string(slots));
  }
  if (spec.require_connected && n >= 2 && spec.m_max < n - 1) {
    unsatisfiable("connectivity needs at least n-1 edges");
  }
  if (spec.rainbow_degree) {
    const int rd = *spec.rainbow_degree;
    if (rd < 0 || rd > c) unsatisfiable("rainbow degree outside 0..c");
    if (rd > 0 && n == 1) unsatisfiable("a lone vertex has rainbow degree 0");
    // Every vertex needs rd colours, each colour class covering all vertices.
    if (rd > 0 && spec.m_max < static_cast<std::int64_t>(rd) * ((n + 1) / 2)) {
      unsatisfiable("too few edges for the requested rainbow degree");
    }
    if (rd < c && spec.m_min > slots - (n - 1) * static_cast<std::int64_t>(c - rd)) {
      unsatisfiable("too many edges for the requested rainbow degree");
    }
  }

  const std::int64_t m =
      spec.m_min + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(spec.m_max - spec.m_min + 1)));
  const auto pairs = all_pairs(n);
  for (int attempt = 0; attempt < spec.max_attempts; ++attempt) {
    GraphBuilder builder(n, c);
    for (std::size_t slot : choose_slots(static_cast<std::size_t>(slots), static_cast<std::size_t>(m), rng)) {
      const auto& [u, v] = pairs[slot / static_cast<std::size_t>(c)];
      builder.add_edge(u, v, static_cast<Colour>(slot % static_cast<std::size_t>(c)) + 1);
    }
    ColouredMultigraph g = builder.build();
    if (spec.require_connected && !is_connected(g)) continue;
    if (spec.rainbow_degree && rainbow_degree_graph(g) != *spec.rainbow_degree) continue;
    return g;
  }
  unsatisfiable("rejection cap of " + std::to_string(spec.max_attempts) + " attempts exceeded");
}

SimpleGraph sample_simple(int n, std::int64_t m, SplitMix64& rng) {
  const std::int64_t total = choose2(n);
  if (m < 0 || m > total) fail(ErrorKind::InvalidArgument, "edge count outside 0..C(n,2)");
  const auto pairs = all_pairs(n);
  SimpleGraph h(n);
  for (std::size_t slot : choose_slots(static_cast<std::size_t>(total), static_cast<std::size_t>(m), rng)) {
    h.add_edge(pairs[slot].first, pairs[slot].second);
  }
  return h;
}

}  // namespace ecmg
