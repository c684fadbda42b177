#include "twopath/constructions.hpp"

#include <vector>

namespace twopath {

DiGraph example_one_graph() {
  enum : VertexId { A, B, C, D, E, F };
  return build_graph(6, {{C, A}, {C, B}, {C, F}, {D, C}, {E, D}, {E, B}, {F, C}, {F, D}});
}

DiGraph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v, v - 1});
  return DiGraph::from_trusted(n, edges);
}

DiGraph two_cycle() { return build_graph(2, {{0, 1}, {1, 0}}); }

DiGraph star_forest(std::size_t star_order, std::size_t isolated) {
  std::vector<Edge> edges;
  for (VertexId leaf = 1; leaf < star_order; ++leaf) edges.push_back({leaf, 0});
  return DiGraph::from_trusted(star_order + isolated, edges);
}

DiGraph grid_dag(std::size_t rows, std::size_t cols) {
  auto id = [cols](std::size_t row, std::size_t col) { return static_cast<VertexId>(1 + (row - 1) * cols + col); };
  std::vector<Edge> edges;
  for (std::size_t row = 1; row <= rows; ++row) {
    for (std::size_t col = 0; col < cols; ++col) {
      if (row == rows) {
        edges.push_back({id(row, col), 0});
      } else {
        for (std::size_t next = 0; next < cols; ++next) edges.push_back({id(row, col), id(row + 1, next)});
      }
    }
  }
  return DiGraph::from_trusted(1 + rows * cols, edges);
}

DiGraph complete_binary_tree(std::size_t depth) {
  const std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> edges;
  for (VertexId v = 1; v < n; ++v) edges.push_back({v, (v - 1) / 2});
  return DiGraph::from_trusted(n, edges);
}

}  // namespace twopath
