#pragma once

#include <cstdint>
#include <random>

namespace sgf {

// Stream namespaces keep every ensemble's randomness disjoint: a trajectory's
// engine is seeded by (master seed, namespace, path index) and nothing else,
// so runs are reproducible for any thread count and ensembles never share
// draws.
enum class StreamKind : std::uint32_t {
  Simulate = 1,
  EnergyTail = 2,
  Coupling = 3,
  CouplingFollower = 4,  // negative-control follower noise
  MixingA = 5,
  MixingB = 6,
  MixingCoupled = 7,
  Measurement = 8,
};

inline std::mt19937_64 make_stream(std::uint64_t seed, StreamKind kind, std::uint32_t path) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed & 0xffffffffu),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(kind), path};
  return std::mt19937_64(seq);
}

}  // namespace sgf
