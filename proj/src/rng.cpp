#include "twopath/rng.hpp"

#include <vector>

namespace twopath {

Rng make_stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::vector<std::uint32_t> words;
  words.reserve(2 + 2 * path.size() + 1);
  auto push = [&](std::uint64_t v) {
    words.push_back(static_cast<std::uint32_t>(v));
    words.push_back(static_cast<std::uint32_t>(v >> 32));
  };
  push(seed);
  // Length tag keeps {a} and {a, 0} apart.
  words.push_back(static_cast<std::uint32_t>(path.size()));
  for (auto p : path) push(p);
  std::seed_seq seq(words.begin(), words.end());
  return Rng(seq);
}

}  // namespace twopath
