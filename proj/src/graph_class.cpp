#include "twopath/graph_class.hpp"


namespace twopath {

const char* to_string(GraphClass c) {
  switch (c) {
    case GraphClass::Tree: return "tree";
    case GraphClass::Forest: return "forest";
    case GraphClass::MonotoneDag: return "monotone-dag";
    case GraphClass::Dag: return "dag";
    case GraphClass::General: return "general";
  }
  return "?";
}

bool is_forest(const DiGraph& g) {
  for (VertexId v = 0; v < g.size(); ++v)
    if (g.out_degree(v) > 1) return false;
  return is_dag(g);
}

bool is_tree(const DiGraph& g) {
  // With out-degrees <= 1 and no cycle, a single sink forces connectivity:
  // every walk ends at the unique sink.
  return is_forest(g) && sinks(g).size() == 1;
}

bool is_monotone(const DiGraph& g, const InfluenceTable& exact_influence) {
  if (!is_dag(g)) return false;
  for (VertexId x = 0; x < g.size(); ++x)
    for (VertexId y : g.followees(x))
      if (!(exact_influence.exact(x) < exact_influence.exact(y))) return false;
  return true;
}

GraphClass classify(const DiGraph& g, const InfluenceTable& exact_influence) {
  if (!is_dag(g)) return GraphClass::General;
  if (is_forest(g)) return sinks(g).size() == 1 ? GraphClass::Tree : GraphClass::Forest;
  return is_monotone(g, exact_influence) ? GraphClass::MonotoneDag : GraphClass::Dag;
}

GraphClass classify(const DiGraph& g) {
  if (!is_dag(g)) return GraphClass::General;
  if (is_forest(g)) return sinks(g).size() == 1 ? GraphClass::Tree : GraphClass::Forest;
  return is_monotone(g, influence_dag(g)) ? GraphClass::MonotoneDag : GraphClass::Dag;
}

}  // namespace twopath
