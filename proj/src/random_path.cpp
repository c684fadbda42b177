#include "twopath/random_path.hpp"

#include <algorithm>

namespace twopath {

void PathSampler::reserve(std::size_t capacity) {
  if (stamp_.size() < capacity) stamp_.resize(capacity, 0);
}

StopReason PathSampler::sample(const DiGraph& g, VertexId start, Rng& rng, std::vector<VertexId>& out) {
  reserve(g.size());
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  out.clear();
  VertexId v = start;
  for (;;) {
    out.push_back(v);
    stamp_[v] = epoch_;
    const auto next = g.followees(v);
    if (next.empty()) return StopReason::Sink;
    const VertexId w = next.size() == 1 ? next[0] : next[uniform_index(rng, next.size())];
    if (stamp_[w] == epoch_) return StopReason::Revisit;
    v = w;
  }
}

RandomPath sample_random_path(const DiGraph& g, VertexId start, Rng& rng) {
  PathSampler sampler(g.size());
  RandomPath path;
  path.start = start;
  path.stop_reason = sampler.sample(g, start, rng, path.vertices);
  return path;
}

}  // namespace twopath
