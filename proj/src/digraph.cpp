#include "twopath/digraph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "twopath/error.hpp"

namespace twopath {

DiGraph DiGraph::from_trusted(std::size_t n, std::span<const Edge> edges) {
  DiGraph g;
  g.n_ = n;
  g.out_offsets_.assign(n + 1, 0);
  g.in_offsets_.assign(n + 1, 0);
  for (const Edge& e : edges) {
    ++g.out_offsets_[e.source + 1];
    ++g.in_offsets_[e.target + 1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    g.out_offsets_[i + 1] += g.out_offsets_[i];
    g.in_offsets_[i + 1] += g.in_offsets_[i];
  }
  g.out_targets_.resize(edges.size());
  g.in_sources_.resize(edges.size());
  std::vector<std::size_t> out_fill(g.out_offsets_.begin(), g.out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(g.in_offsets_.begin(), g.in_offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.out_targets_[out_fill[e.source]++] = e.target;
    g.in_sources_[in_fill[e.target]++] = e.source;
  }
  // Sorted adjacency keeps equality structural and sampling order canonical.
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(g.out_targets_.begin() + g.out_offsets_[i], g.out_targets_.begin() + g.out_offsets_[i + 1]);
    std::sort(g.in_sources_.begin() + g.in_offsets_[i], g.in_sources_.begin() + g.in_offsets_[i + 1]);
  }
  return g;
}

bool DiGraph::has_edge(VertexId u, VertexId v) const noexcept {
  auto f = followees(u);
  return std::find(f.begin(), f.end(), v) != f.end();
}

std::vector<Edge> DiGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < n_; ++u)
    for (VertexId v : followees(u)) out.push_back({u, v});
  return out;
}

DiGraph DiGraph::with_followees(VertexId x, std::span<const VertexId> new_followees) const {
  std::vector<Edge> e;
  e.reserve(edge_count() + new_followees.size());
  for (VertexId u = 0; u < n_; ++u) {
    if (u == x) {
      for (VertexId v : new_followees) e.push_back({u, v});
    } else {
      for (VertexId v : followees(u)) e.push_back({u, v});
    }
  }
  return build_graph(n_, e);
}

DiGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  for (const Edge& e : edges) {
    if (e.source >= n || e.target >= n)
      throw Error(ErrorKind::VertexOutOfRange, "edge (" + std::to_string(e.source) + "," +
                                                   std::to_string(e.target) + ") with n=" + std::to_string(n));
    if (e.source == e.target)
      throw Error(ErrorKind::SelfLoop, "self-loop at " + std::to_string(e.source));
  }
  std::vector<Edge> sorted(edges.begin(), edges.end());
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end())
    throw Error(ErrorKind::DuplicateEdge,
                "edge (" + std::to_string(dup->source) + "," + std::to_string(dup->target) + ") repeated");
  return DiGraph::from_trusted(n, edges);
}

namespace {

// Kahn's algorithm peeling sinks; lowest id first among the available ones.
std::vector<VertexId> peel_sinks(const DiGraph& g) {
  const std::size_t n = g.size();
  std::vector<std::size_t> remaining(n);
  std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> ready;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = g.out_degree(v);
    if (remaining[v] == 0) ready.push(v);
  }
  std::vector<VertexId> order;
  order.reserve(n);
  while (!ready.empty()) {
    VertexId v = ready.top();
    ready.pop();
    order.push_back(v);
    for (VertexId u : g.followers(v))
      if (--remaining[u] == 0) ready.push(u);
  }
  return order;
}

}  // namespace

bool is_dag(const DiGraph& g) {
  // Plain peeling without the heap.
  const std::size_t n = g.size();
  std::vector<std::size_t> remaining(n);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    remaining[v] = g.out_degree(v);
    if (remaining[v] == 0) stack.push_back(v);
  }
  std::size_t seen = 0;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    ++seen;
    for (VertexId u : g.followers(v))
      if (--remaining[u] == 0) stack.push_back(u);
  }
  return seen == n;
}

std::vector<VertexId> topological_order(const DiGraph& g) {
  auto order = peel_sinks(g);
  if (order.size() != g.size()) throw Error(ErrorKind::NotADag, "graph has a directed cycle");
  return order;
}

std::vector<VertexId> sinks(const DiGraph& g) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.out_degree(v) == 0) out.push_back(v);
  return out;
}

}  // namespace twopath
