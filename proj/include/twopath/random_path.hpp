#pragma once

#include <cstdint>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/rng.hpp"

namespace twopath {

enum class StopReason { Sink, Revisit };

struct RandomPath {
  VertexId start = 0;
  std::vector<VertexId> vertices;
  StopReason stop_reason = StopReason::Sink;
};

// Reusable scratch for drawing random paths on graphs of up to `capacity`
// vertices without per-path allocation.
class PathSampler {
 public:
  PathSampler() = default;
  explicit PathSampler(std::size_t capacity) { reserve(capacity); }

  void reserve(std::size_t capacity);

  // Walks from `start` along uniformly chosen out-edges. Stops at a vertex
  // with no out-edges, or when the next vertex is already on the path (the
  // repeated vertex is not appended). `out` is overwritten.
  StopReason sample(const DiGraph& g, VertexId start, Rng& rng, std::vector<VertexId>& out);

 private:
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

RandomPath sample_random_path(const DiGraph& g, VertexId start, Rng& rng);

}  // namespace twopath
