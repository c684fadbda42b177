#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "twopath/constructions.hpp"
#include "twopath/digraph.hpp"
#include "twopath/error.hpp"
#include "twopath/graph_class.hpp"
#include "twopath/graph_enum.hpp"
#include "twopath/graph_io.hpp"
#include "twopath/influence.hpp"

using namespace twopath;

namespace {

enum : VertexId { A, B, C, D, E, F };

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::Io;
}

std::vector<VertexId> sorted(std::span<const VertexId> s) {
  std::vector<VertexId> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_CASE("construction validates endpoints, loops and duplicates") {
  CHECK(kind_of([] { build_graph(2, {{0, 0}}); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([] { build_graph(2, {{0, 1}, {0, 1}}); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([] { build_graph(2, {{0, 2}}); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { build_graph(2, {{5, 0}}); }) == ErrorKind::VertexOutOfRange);
  CHECK_NOTHROW(build_graph(2, {{0, 1}, {1, 0}}));
}

TEST_CASE("empty and single-vertex graphs") {
  const DiGraph empty = build_graph(0, {});
  CHECK(empty.size() == 0);
  CHECK(empty.edge_count() == 0);
  CHECK(is_dag(empty));
  CHECK(topological_order(empty).empty());

  const DiGraph one = build_graph(1, {});
  CHECK(sinks(one) == std::vector<VertexId>{0});
  CHECK(topological_order(one) == std::vector<VertexId>{0});
  CHECK(is_tree(one));
}

TEST_CASE("example one degrees and adjacency") {
  const DiGraph g = example_one_graph();
  CHECK(g.size() == 6);
  CHECK(g.edge_count() == 8);
  CHECK(g.out_degree(C) == 3);
  CHECK(g.out_degree(D) == 1);
  CHECK(g.out_degree(E) == 2);
  CHECK(g.out_degree(F) == 2);
  CHECK(g.out_degree(A) == 0);
  CHECK(g.out_degree(B) == 0);
  CHECK(sorted(g.followers(C)) == std::vector<VertexId>{D, F});
  CHECK(sorted(g.followees(E)) == std::vector<VertexId>{B, D});
  CHECK(g.has_edge(E, B));
  CHECK_FALSE(g.has_edge(B, E));
  CHECK(sinks(g) == std::vector<VertexId>{A, B});
}

TEST_CASE("example one contains the 2-cycle C <-> F") {
  const DiGraph g = example_one_graph();
  CHECK(g.has_edge(C, F));
  CHECK(g.has_edge(F, C));
  CHECK_FALSE(is_dag(g));
  CHECK(kind_of([&] { topological_order(g); }) == ErrorKind::NotADag);
  CHECK(classify(g) == GraphClass::General);

  // Without C -> F the order conditions from the example hold.
  const DiGraph h = g.filter_edges([](VertexId u, VertexId v) { return !(u == C && v == F); });
  const auto order = topological_order(h);
  auto pos = [&](VertexId v) { return std::find(order.begin(), order.end(), v) - order.begin(); };
  CHECK(pos(A) < pos(C));
  CHECK(pos(B) < pos(C));
  CHECK(pos(C) < pos(D));
  CHECK(pos(C) < pos(F));
  CHECK(pos(D) < pos(E));
}

TEST_CASE("two-cycle is not a DAG") {
  CHECK_FALSE(is_dag(two_cycle()));
  CHECK(sinks(two_cycle()).empty());
}

TEST_CASE("topological order puts followees first with lowest-id tie-break") {
  // 3 -> 0, 2 -> 1: available at start {0, 1}; 0 first, then 1, then 2, 3.
  const DiGraph g = build_graph(4, {{3, 0}, {2, 1}});
  CHECK(topological_order(g) == std::vector<VertexId>{0, 1, 2, 3});
  const DiGraph h = build_graph(4, {{0, 3}, {1, 2}});
  CHECK(topological_order(h) == std::vector<VertexId>{2, 1, 3, 0});
}

TEST_CASE("topological order respects every edge on random DAGs") {
  oracle::TestRng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const DiGraph g = oracle::random_dag(1 + oracle::pick(rng, 30), oracle::unit(rng), rng);
    REQUIRE(is_dag(g));
    const auto order = topological_order(g);
    REQUIRE(order.size() == g.size());
    std::vector<std::size_t> pos(g.size());
    for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
    for (const Edge& e : g.edges()) CHECK(pos[e.target] < pos[e.source]);
  }
}

TEST_CASE("random digraphs with a cycle are rejected") {
  oracle::TestRng rng(12);
  int cyclic = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const DiGraph g = oracle::random_digraph(2 + oracle::pick(rng, 8), 0.4, rng);
    // Cycle check by DFS colouring, independent of the library's Kahn pass.
    std::vector<int> colour(g.size(), 0);
    bool cycle = false;
    std::function<void(VertexId)> dfs = [&](VertexId v) {
      colour[v] = 1;
      for (VertexId w : g.followees(v)) {
        if (colour[w] == 1) cycle = true;
        else if (colour[w] == 0) dfs(w);
      }
      colour[v] = 2;
    };
    for (VertexId v = 0; v < g.size(); ++v)
      if (colour[v] == 0) dfs(v);
    CHECK(is_dag(g) == !cycle);
    cyclic += cycle;
  }
  CHECK(cyclic > 20);
}

TEST_CASE("with_followees replaces one vertex's out-edges") {
  const DiGraph g = build_graph(4, {{0, 1}, {0, 2}, {1, 2}, {3, 0}});
  const std::vector<VertexId> repl{3};
  const DiGraph h = g.with_followees(0, repl);
  CHECK(sorted(h.followees(0)) == std::vector<VertexId>{3});
  CHECK(sorted(h.followers(3)) == std::vector<VertexId>{0});
  CHECK(sorted(h.followers(2)) == std::vector<VertexId>{1});
  CHECK(h.edge_count() == 3);
  const std::vector<VertexId> bad{0};
  CHECK(kind_of([&] { g.with_followees(0, bad); }) == ErrorKind::SelfLoop);
  const std::vector<VertexId> dup{1, 1};
  CHECK(kind_of([&] { g.with_followees(0, dup); }) == ErrorKind::DuplicateEdge);
}

TEST_CASE("graph file round trip is bit exact") {
  oracle::TestRng rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const DiGraph g = oracle::random_digraph(1 + oracle::pick(rng, 20), 0.3, rng);
    std::ostringstream first;
    write_graph(first, g, {"label x", "another"});
    std::istringstream in(first.str());
    const DiGraph back = read_graph(in);
    std::ostringstream second;
    write_graph(second, back, {"label x", "another"});
    CHECK(first.str() == second.str());
    const auto got = back.edges(), want = g.edges();
    CHECK(std::set<Edge>(got.begin(), got.end()) == std::set<Edge>(want.begin(), want.end()));
  }
}

TEST_CASE("writer sorts edges; reader accepts any order and comments anywhere") {
  std::istringstream in("# header\n3 3\n2 0\n# middle\n\n0 1\n1 2\n# tail\n");
  const DiGraph g = read_graph(in);
  std::ostringstream out;
  write_graph(out, g);
  CHECK(out.str() == "3 3\n0 1\n1 2\n2 0\n");
}

TEST_CASE("reader reports malformed input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  CHECK(kind_of([&] { parse(""); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse("2 x\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse("2 2\n0 1\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse("2 1\n0 1\n1 0\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse("2 1\n0 one\n"); }) == ErrorKind::Parse);
  CHECK(kind_of([&] { parse("2 1\n0 0\n"); }) == ErrorKind::SelfLoop);
  CHECK(kind_of([&] { parse("2 2\n0 1\n0 1\n"); }) == ErrorKind::DuplicateEdge);
  CHECK(kind_of([&] { parse("2 1\n0 7\n"); }) == ErrorKind::VertexOutOfRange);
  CHECK(kind_of([] { read_graph_file("/nonexistent/graph.txt"); }) == ErrorKind::Io);
}

TEST_CASE("classification of the standard families") {
  CHECK(classify(path_graph(5)) == GraphClass::Tree);
  CHECK(classify(complete_binary_tree(3)) == GraphClass::Tree);
  CHECK(classify(star_forest(5, 3)) == GraphClass::Forest);
  CHECK(classify(build_graph(3, {})) == GraphClass::Forest);
  CHECK(classify(two_cycle()) == GraphClass::General);
  CHECK(classify(grid_dag(8, 2)) == GraphClass::MonotoneDag);
  CHECK(classify(grid_dag(3, 3)) == GraphClass::MonotoneDag);

  CHECK(classify(build_graph(3, {{0, 1}, {0, 2}, {1, 2}})) == GraphClass::MonotoneDag);

  // 1 splits its attention between 0 and 5: I(0) = 1 + 4/2 = 3 < I(1) = 4.
  const DiGraph nm = build_graph(6, {{1, 0}, {1, 5}, {2, 1}, {3, 1}, {4, 1}});
  CHECK(classify(nm) == GraphClass::Dag);
}

TEST_CASE("monotone predicate matches its definition on random DAGs") {
  oracle::TestRng rng(14);
  int monotone = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const DiGraph g = oracle::random_dag(2 + oracle::pick(rng, 7), 0.35, rng);
    const auto inf = oracle::path_sum_influence(g);
    bool expect = true;
    for (const Edge& e : g.edges())
      if (!(inf[e.target] > inf[e.source])) expect = false;
    const auto table = InfluenceTable::exact(inf);
    CHECK(is_monotone(g, table) == expect);
    monotone += expect;
  }
  CHECK(monotone > 10);
}

TEST_CASE("tree and forest predicates") {
  oracle::TestRng rng(15);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + oracle::pick(rng, 30);
    const std::size_t roots = 1 + oracle::pick(rng, n);
    const DiGraph g = oracle::random_forest(n, roots, rng);
    CHECK(is_forest(g));
    CHECK(is_tree(g) == (roots == 1));
  }
  // Two out-edges from one vertex: not a forest.
  CHECK_FALSE(is_forest(build_graph(3, {{0, 1}, {0, 2}})));
  CHECK_FALSE(is_tree(two_cycle()));
}

TEST_CASE("isomorphism-class enumeration counts") {
  // Unlabelled DAGs and digraphs (OEIS A003087, A000273).
  CHECK(enumerate_dags(1).size() == 1);
  CHECK(enumerate_dags(2).size() == 2);
  CHECK(enumerate_dags(3).size() == 6);
  CHECK(enumerate_dags(4).size() == 31);
  CHECK(enumerate_dags(5).size() == 302);
  CHECK(enumerate_digraphs(2).size() == 3);
  CHECK(enumerate_digraphs(3).size() == 16);
  CHECK(enumerate_digraphs(4).size() == 218);
  for (const auto& g : enumerate_dags(4)) CHECK(is_dag(g));
  CHECK(enumerate_rooted_trees(5).size() == 24);
  for (const auto& t : enumerate_rooted_trees(5)) CHECK(is_tree(t));
}

TEST_CASE("canonical form is invariant under relabelling") {
  oracle::TestRng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 2 + oracle::pick(rng, 5);
    const DiGraph g = oracle::random_digraph(n, 0.4, rng);
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), VertexId{0});
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> relabelled;
    for (const Edge& e : g.edges()) relabelled.push_back({perm[e.source], perm[e.target]});
    const DiGraph h = build_graph(n, relabelled);
    CHECK(canonical_bits(g) == canonical_bits(h));
    CHECK(graph_from_bits(n, adjacency_bits(g)) == graph_from_bits(n, adjacency_bits(g)));
    CHECK(adjacency_bits(graph_from_bits(n, adjacency_bits(g))) == adjacency_bits(g));
  }
}
