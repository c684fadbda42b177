#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace twopath {

using Rng = std::mt19937_64;

// Independent substream for a (master seed, index path) pair, e.g.
// make_stream(seed, {point, graph, run}).
Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path = {});

inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
}

}  // namespace twopath
