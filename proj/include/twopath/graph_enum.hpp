#pragma once

#include <cstdint>
#include <vector>

#include "twopath/digraph.hpp"

namespace twopath {

// Adjacency of a graph with n <= 8 packed into n*(n-1) bits: the slot of edge
// (u, v) is u*(n-1) + (v < u ? v : v-1).
std::uint64_t adjacency_bits(const DiGraph& g);
DiGraph graph_from_bits(std::size_t n, std::uint64_t bits);

// Smallest adjacency_bits over all relabelings. Brute force over n!
// permutations; intended for n <= 6.
std::uint64_t canonical_bits(const DiGraph& g);

// One representative per isomorphism class.
std::vector<DiGraph> enumerate_dags(std::size_t n);
std::vector<DiGraph> enumerate_digraphs(std::size_t n);

// Every rooted tree of order n at least once: vertex 0 is the root and each
// vertex i > 0 follows some j < i. (n-1)! graphs.
std::vector<DiGraph> enumerate_rooted_trees(std::size_t n);

}  // namespace twopath
