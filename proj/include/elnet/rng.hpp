#pragma once

#include <cstdint>
#include <random>

#include "elnet/network.hpp"

namespace elnet {

// Deterministic generator for the randomized verification suites.
class RatRng {
 public:
  explicit RatRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform-ish positive rational p/q with p in 1..max_num, q in 1..max_den.
  Rat positive(unsigned max_num = 12, unsigned max_den = 12);
  // Any sign, possibly zero numerator.
  Rat any(unsigned max_num = 12, unsigned max_den = 12);
  std::size_t index(std::size_t lo, std::size_t hi);  // inclusive

  // Connected-to-boundary random network: every interior vertex is linked to
  // an earlier vertex, so the interior Kirchhoff block is invertible.
  Network network(std::size_t boundary_count, std::size_t max_interior,
                  std::size_t extra_edges);

 private:
  std::mt19937_64 engine_;
};

}  // namespace elnet
