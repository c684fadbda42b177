#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace twopath {

using VertexId = std::uint32_t;

// u -> v means "u follows v".
struct Edge {
  VertexId source;
  VertexId target;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Immutable simple directed graph with adjacency stored in both directions
// (compressed rows). Followees F(x) keep the order in which edges were given;
// followers N(x) keep the same global edge order.
class DiGraph {
 public:
  DiGraph() = default;

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return out_targets_.size(); }

  std::span<const VertexId> followees(VertexId x) const noexcept {
    return {out_targets_.data() + out_offsets_[x], out_targets_.data() + out_offsets_[x + 1]};
  }
  std::span<const VertexId> followers(VertexId x) const noexcept {
    return {in_sources_.data() + in_offsets_[x], in_sources_.data() + in_offsets_[x + 1]};
  }
  std::size_t out_degree(VertexId x) const noexcept { return out_offsets_[x + 1] - out_offsets_[x]; }
  std::size_t in_degree(VertexId x) const noexcept { return in_offsets_[x + 1] - in_offsets_[x]; }

  bool has_edge(VertexId u, VertexId v) const noexcept;

  // Edges grouped by source, each group in insertion order.
  std::vector<Edge> edges() const;

  // Subgraph on the same vertex set keeping the edges for which keep(u, v)
  // holds. The result is simple because the input is.
  template <typename Keep>
  DiGraph filter_edges(Keep&& keep) const {
    std::vector<Edge> kept;
    kept.reserve(edge_count());
    for (VertexId u = 0; u < n_; ++u)
      for (VertexId v : followees(u))
        if (keep(u, v)) kept.push_back({u, v});
    return from_trusted(n_, kept);
  }

  // Same vertex set, x's out-edges replaced by `new_followees`.
  DiGraph with_followees(VertexId x, std::span<const VertexId> new_followees) const;

  friend bool operator==(const DiGraph& a, const DiGraph& b) {
    return a.n_ == b.n_ && a.out_offsets_ == b.out_offsets_ && a.out_targets_ == b.out_targets_;
  }

  // No validation: the caller guarantees endpoints in range, no self-loops
  // and no duplicates. Use build_graph for untrusted input.
  static DiGraph from_trusted(std::size_t n, std::span<const Edge> edges);

 private:
  std::size_t n_ = 0;
  std::vector<std::size_t> out_offsets_{0};
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<VertexId> in_sources_;
};

// Validating constructor. Throws Error{VertexOutOfRange|SelfLoop|DuplicateEdge}.
DiGraph build_graph(std::size_t n, std::span<const Edge> edges);
inline DiGraph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

bool is_dag(const DiGraph& g);

// Sinks first: every edge (u, v) has v listed before u. Among the vertices
// available at each step the lowest id is taken. Throws Error{NotADag}.
std::vector<VertexId> topological_order(const DiGraph& g);

// Vertices with no out-edges, ascending.
std::vector<VertexId> sinks(const DiGraph& g);

}  // namespace twopath
