#pragma once

#include <cstddef>

#include "twopath/digraph.hpp"

namespace twopath {

// Six-vertex running example with vertices A..F as ids 0..5:
// C->A, C->B, C->F, D->C, E->D, E->B, F->C, F->D.
DiGraph example_one_graph();

// v_{n-1} -> ... -> v_1 -> v_0; vertex 0 is the root.
DiGraph path_graph(std::size_t n);

// 0 <-> 1
DiGraph two_cycle();

// One star (center 0 with star_order - 1 leaves) plus `isolated` lone vertices.
DiGraph star_forest(std::size_t star_order, std::size_t isolated);

// rows x cols grid plus a sink v0 (id 0). Row i (1-based) vertex (i, j) has id
// 1 + (i-1)*cols + j and follows every vertex of row i+1; the last row
// follows v0. Row-i vertices have influence i and v0 has rows*cols + 1.
DiGraph grid_dag(std::size_t rows, std::size_t cols);

// Complete binary tree of the given depth, root 0, children 2i+1 and 2i+2
// following i.
DiGraph complete_binary_tree(std::size_t depth);

}  // namespace twopath
