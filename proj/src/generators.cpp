#include "twopath/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_set>

#include "twopath/error.hpp"
#include "twopath/graph_class.hpp"
#include "twopath/influence.hpp"
#include "twopath/rng.hpp"

namespace twopath {

std::vector<std::string> GeneratorStats::comment_lines() const {
  return {
      "events: " + std::to_string(events),
      "skipped_events: " + std::to_string(skipped_events),
      "retries: " + std::to_string(retries),
      "max_in_degree: " + std::to_string(max_in_degree),
      "mean_in_degree: " + std::to_string(mean_in_degree),
  };
}

namespace {

double uniform01(Rng& rng) { return std::uniform_real_distribution<double>(0.0, 1.0)(rng); }

// Picks a vertex among [0, count) with weight degree + smoothing, where `pool`
// lists one endpoint per edge so degree-proportional draws are uniform pool
// picks.
VertexId pick_weighted(Rng& rng, const std::vector<VertexId>& pool, std::size_t count, double smoothing) {
  const double edge_mass = static_cast<double>(pool.size());
  const double total = edge_mass + smoothing * static_cast<double>(count);
  const double r = uniform01(rng) * total;
  if (r < edge_mass) return pool[std::min(pool.size() - 1, static_cast<std::size_t>(r))];
  const auto idx = static_cast<std::size_t>((r - edge_mass) / smoothing);
  return static_cast<VertexId>(std::min(count - 1, idx));
}

void fill_degree_stats(const DiGraph& g, GeneratorStats& stats) {
  for (VertexId v = 0; v < g.size(); ++v) stats.max_in_degree = std::max(stats.max_in_degree, g.in_degree(v));
  stats.mean_in_degree = g.size() ? static_cast<double>(g.edge_count()) / static_cast<double>(g.size()) : 0.0;
}

}  // namespace

GeneratedGraph gen_ba_dag(const BaDagParams& params) {
  if (params.s < 1 || params.s >= params.n_total || params.k < 1)
    throw Error(ErrorKind::InvalidParams, "BA DAG needs 1 <= s < n_total and k >= 1");
  if (params.preferential && !(params.smoothing > 0))
    throw Error(ErrorKind::InvalidParams, "preferential attachment needs smoothing > 0");

  Rng rng = make_stream(params.seed, {0xBA});
  const std::size_t n = params.n_total;
  std::vector<Edge> edges;
  edges.reserve((n - params.s) * params.k);
  std::vector<std::size_t> in_degree(n, 0);
  std::vector<VertexId> target_pool;
  target_pool.reserve(edges.capacity());
  std::vector<std::uint32_t> taken(n, 0);
  std::vector<VertexId> chosen;
  std::vector<double> weights;

  for (std::size_t v = params.s; v < n; ++v) {
    const std::size_t existing = v;
    const std::size_t want = std::min(params.k, existing);
    const auto stamp = static_cast<std::uint32_t>(v);
    chosen.clear();
    if (want == existing) {
      for (VertexId u = 0; u < existing; ++u) chosen.push_back(u);
    } else if (params.preferential && 2 * want > existing) {
      // Dense draw: sequential weighted sampling without replacement.
      weights.assign(existing, 0.0);
      for (VertexId u = 0; u < existing; ++u) weights[u] = static_cast<double>(in_degree[u]) + params.smoothing;
      for (std::size_t i = 0; i < want; ++i) {
        std::discrete_distribution<std::size_t> pick(weights.begin(), weights.end());
        const auto u = static_cast<VertexId>(pick(rng));
        chosen.push_back(u);
        weights[u] = 0.0;
      }
    } else {
      while (chosen.size() < want) {
        const VertexId u = params.preferential ? pick_weighted(rng, target_pool, existing, params.smoothing)
                                               : static_cast<VertexId>(uniform_index(rng, existing));
        if (taken[u] == stamp + 1) continue;
        taken[u] = stamp + 1;
        chosen.push_back(u);
      }
    }
    for (VertexId u : chosen) {
      edges.push_back({static_cast<VertexId>(v), u});
      ++in_degree[u];
      target_pool.push_back(u);
    }
  }
  GeneratedGraph out{DiGraph::from_trusted(n, edges), {}};
  out.stats.events = n - params.s;
  fill_degree_stats(out.graph, out.stats);
  return out;
}

PqrParams PqrParams::from_degree(std::size_t n_total, double avg_in_degree, double q_hat, std::uint64_t seed) {
  PqrParams p;
  p.n_total = n_total;
  p.p = (1.0 - q_hat) / avg_in_degree;
  p.q = q_hat / avg_in_degree;
  p.r = 1.0 - 1.0 / avg_in_degree;
  p.seed = seed;
  return p;
}

GeneratedGraph gen_pqr(const PqrParams& params) {
  const double tolerance = 1e-9;
  if (params.n_total < 1) throw Error(ErrorKind::InvalidParams, "p/q/r model needs n_total >= 1");
  if (params.p < 0 || params.q < 0 || params.r < 0 || std::abs(params.p + params.q + params.r - 1.0) > tolerance)
    throw Error(ErrorKind::InvalidParams, "p, q, r must be non-negative and sum to 1");
  if (!(params.p + params.q > 0)) throw Error(ErrorKind::InvalidParams, "p + q must be positive");
  if (!params.allow_q_not_below_p && !(params.q < params.p))
    throw Error(ErrorKind::InvalidParams, "model assumes q < p (override with allow_q_not_below_p)");
  if (!(params.smoothing > 0)) throw Error(ErrorKind::InvalidParams, "smoothing must be positive");

  Rng rng = make_stream(params.seed, {0x9A7});
  const std::size_t n_total = params.n_total;
  std::vector<Edge> edges;
  std::vector<VertexId> in_pool, out_pool;  // one entry per edge endpoint
  std::unordered_set<std::uint64_t> present;
  auto key = [](VertexId u, VertexId v) { return (std::uint64_t{u} << 32) | v; };
  auto add_edge = [&](VertexId u, VertexId v) {
    edges.push_back({u, v});
    out_pool.push_back(u);
    in_pool.push_back(v);
    present.insert(key(u, v));
  };

  GeneratorStats stats;
  std::size_t n = 1;
  while (n < n_total) {
    ++stats.events;
    double u = uniform01(rng);
    if (u >= params.p + params.q && n < 2) u = uniform01(rng) * (params.p + params.q);
    if (u < params.p) {
      const VertexId target = pick_weighted(rng, in_pool, n, params.smoothing);
      add_edge(static_cast<VertexId>(n++), target);
    } else if (u < params.p + params.q) {
      const VertexId source = pick_weighted(rng, out_pool, n, params.smoothing);
      add_edge(source, static_cast<VertexId>(n++));
    } else {
      bool added = false;
      for (int attempt = 0; attempt <= kPqrRetries; ++attempt) {
        const VertexId source = pick_weighted(rng, out_pool, n, params.smoothing);
        const VertexId target = pick_weighted(rng, in_pool, n, params.smoothing);
        if (source != target && !present.contains(key(source, target))) {
          add_edge(source, target);
          added = true;
          break;
        }
        if (attempt < kPqrRetries) ++stats.retries;
      }
      if (!added) ++stats.skipped_events;
    }
  }
  GeneratedGraph out{DiGraph::from_trusted(n_total, edges), stats};
  fill_degree_stats(out.graph, out.stats);
  return out;
}

DiGraph gen_random_tree(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorKind::InvalidParams, "tree needs at least one vertex");
  Rng rng = make_stream(seed, {0x77EE});
  if (n == 1) return DiGraph::from_trusted(1, {});

  std::vector<std::vector<VertexId>> adj(n);
  if (n == 2) {
    adj[0].push_back(1);
    adj[1].push_back(0);
  } else {
    std::vector<VertexId> code(n - 2);
    for (auto& c : code) c = static_cast<VertexId>(uniform_index(rng, n));
    std::vector<std::size_t> degree(n, 1);
    for (VertexId c : code) ++degree[c];
    std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>> leaves;
    for (VertexId v = 0; v < n; ++v)
      if (degree[v] == 1) leaves.push(v);
    for (VertexId c : code) {
      const VertexId leaf = leaves.top();
      leaves.pop();
      adj[leaf].push_back(c);
      adj[c].push_back(leaf);
      if (--degree[c] == 1) leaves.push(c);
    }
    const VertexId a = leaves.top();
    leaves.pop();
    const VertexId b = leaves.top();
    adj[a].push_back(b);
    adj[b].push_back(a);
  }

  const auto root = static_cast<VertexId>(uniform_index(rng, n));
  std::vector<Edge> edges;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> queue{root};
  seen[root] = 1;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const VertexId v = queue[head];
    for (VertexId w : adj[v]) {
      if (seen[w]) continue;
      seen[w] = 1;
      edges.push_back({w, v});
      queue.push_back(w);
    }
  }
  return DiGraph::from_trusted(n, edges);
}

DiGraph gen_random_forest(std::size_t n, std::size_t s, std::uint64_t seed) {
  if (s < 1 || s > n) throw Error(ErrorKind::InvalidParams, "forest needs 1 <= s <= n");
  Rng rng = make_stream(seed, {0xF0});
  std::vector<std::size_t> gaps(n - 1);
  std::iota(gaps.begin(), gaps.end(), std::size_t{1});
  std::shuffle(gaps.begin(), gaps.end(), rng);
  std::vector<std::size_t> cuts(gaps.begin(), gaps.begin() + static_cast<std::ptrdiff_t>(s - 1));
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(n);

  std::vector<VertexId> label(n);
  std::iota(label.begin(), label.end(), VertexId{0});
  std::shuffle(label.begin(), label.end(), rng);

  std::vector<Edge> edges;
  std::size_t begin = 0;
  for (std::size_t t = 0; t < cuts.size(); ++t) {
    const std::size_t size = cuts[t] - begin;
    const DiGraph tree = gen_random_tree(size, rng());
    for (const Edge& e : tree.edges()) edges.push_back({label[begin + e.source], label[begin + e.target]});
    begin = cuts[t];
  }
  return DiGraph::from_trusted(n, edges);
}

DiGraph gen_random_dag(std::size_t n, double density, std::uint64_t seed) {
  if (density < 0 || density > 1) throw Error(ErrorKind::InvalidParams, "density must lie in [0, 1]");
  Rng rng = make_stream(seed, {0xDA6});
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Edge> edges;
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (uniform01(rng) < density) edges.push_back({order[j], order[i]});
  return DiGraph::from_trusted(n, edges);
}

DiGraph gen_random_digraph(std::size_t n, double density, std::uint64_t seed) {
  if (density < 0 || density > 1) throw Error(ErrorKind::InvalidParams, "density must lie in [0, 1]");
  Rng rng = make_stream(seed, {0xD16});
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = 0; v < n; ++v)
      if (u != v && uniform01(rng) < density) edges.push_back({u, v});
  return DiGraph::from_trusted(n, edges);
}

DiGraph gen_random_monotone_dag(std::size_t n, double density, std::uint64_t seed, std::size_t max_attempts) {
  for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
    DiGraph g = gen_random_dag(n, density, make_stream(seed, {0x3070, attempt})());
    // Forests are monotone too but belong to a more specific class.
    if (is_forest(g)) continue;
    if (is_monotone(g, influence_dag(g))) return g;
  }
  throw Error(ErrorKind::MonotoneRejectionExhausted,
              "no monotone DAG after " + std::to_string(max_attempts) + " attempts");
}

}  // namespace twopath
