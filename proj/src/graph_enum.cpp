#include "twopath/graph_enum.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace twopath {

namespace {

constexpr std::size_t kMaxPackedOrder = 8;

std::size_t slot(std::size_t n, VertexId u, VertexId v) { return u * (n - 1) + (v < u ? v : v - 1); }

void require_packable(std::size_t n) {
  if (n > kMaxPackedOrder) throw std::invalid_argument("adjacency packing supports at most 8 vertices");
}

std::uint64_t bits_of(std::size_t n, std::span<const Edge> edges, std::span<const VertexId> relabel) {
  std::uint64_t bits = 0;
  for (const Edge& e : edges) bits |= std::uint64_t{1} << slot(n, relabel[e.source], relabel[e.target]);
  return bits;
}

}  // namespace

std::uint64_t adjacency_bits(const DiGraph& g) {
  require_packable(g.size());
  std::uint64_t bits = 0;
  for (VertexId u = 0; u < g.size(); ++u)
    for (VertexId v : g.followees(u)) bits |= std::uint64_t{1} << slot(g.size(), u, v);
  return bits;
}

DiGraph graph_from_bits(std::size_t n, std::uint64_t bits) {
  require_packable(n);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && (bits >> slot(n, u, v) & 1)) edges.push_back({u, v});
  return DiGraph::from_trusted(n, edges);
}

std::uint64_t canonical_bits(const DiGraph& g) {
  const std::size_t n = g.size();
  require_packable(n);
  const auto edges = g.edges();
  std::vector<VertexId> perm(n);
  std::iota(perm.begin(), perm.end(), VertexId{0});
  std::uint64_t best = ~std::uint64_t{0};
  do {
    best = std::min(best, bits_of(n, edges, perm));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

std::vector<DiGraph> enumerate_dags(std::size_t n) {
  require_packable(n);
  // Every DAG has a labeling whose edges all point to smaller ids.
  std::vector<Edge> slots;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < u; ++v) slots.push_back({u, v});
  std::set<std::uint64_t> classes;
  for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << slots.size()); ++subset) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (subset >> i & 1) edges.push_back(slots[i]);
    classes.insert(canonical_bits(DiGraph::from_trusted(n, edges)));
  }
  std::vector<DiGraph> out;
  for (auto bits : classes) out.push_back(graph_from_bits(n, bits));
  return out;
}

std::vector<DiGraph> enumerate_digraphs(std::size_t n) {
  require_packable(n);
  const std::size_t slots = n * (n > 0 ? n - 1 : 0);
  std::set<std::uint64_t> classes;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots); ++bits)
    classes.insert(canonical_bits(graph_from_bits(n, bits)));
  std::vector<DiGraph> out;
  for (auto bits : classes) out.push_back(graph_from_bits(n, bits));
  return out;
}

std::vector<DiGraph> enumerate_rooted_trees(std::size_t n) {
  std::vector<DiGraph> out;
  if (n == 0) return out;
  std::vector<Edge> edges(n - 1);
  auto extend = [&](auto&& self, VertexId child) -> void {
    if (child == n) {
      out.push_back(DiGraph::from_trusted(n, edges));
      return;
    }
    for (VertexId parent = 0; parent < child; ++parent) {
      edges[child - 1] = {child, parent};
      self(self, child + 1);
    }
  };
  extend(extend, 1);
  return out;
}

}  // namespace twopath
