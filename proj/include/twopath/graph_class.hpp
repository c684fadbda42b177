#pragma once

#include "twopath/digraph.hpp"
#include "twopath/influence.hpp"

namespace twopath {

// Nested families, most specific first.
enum class GraphClass { Tree, Forest, MonotoneDag, Dag, General };

const char* to_string(GraphClass c);

// Strict I(x) < I(y) on every edge (x, y), with exact influences of g.
bool is_monotone(const DiGraph& g, const InfluenceTable& exact_influence);

// Most specific class. Influence is only consulted when the monotone test is
// reached; pass an exact table for g or let classify compute one.
GraphClass classify(const DiGraph& g, const InfluenceTable& exact_influence);
GraphClass classify(const DiGraph& g);

bool is_tree(const DiGraph& g);
bool is_forest(const DiGraph& g);

}  // namespace twopath
