#include "twopath/influence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "twopath/error.hpp"
#include "twopath/parallel.hpp"
#include "twopath/random_path.hpp"
#include "twopath/rng.hpp"

namespace twopath {

InfluenceTable InfluenceTable::exact(std::vector<Rational> values) {
  InfluenceTable t;
  t.mode_ = InfluenceMode::Exact;
  t.values_.reserve(values.size());
  for (const auto& v : values) t.values_.push_back(v.get_d());
  t.standard_errors_.assign(values.size(), 0.0);
  t.exact_ = std::move(values);
  return t;
}

InfluenceTable InfluenceTable::approximate(std::vector<double> values, std::vector<double> standard_errors) {
  if (values.size() != standard_errors.size())
    throw std::invalid_argument("influence values and standard errors differ in length");
  InfluenceTable t;
  t.mode_ = InfluenceMode::Approximate;
  t.values_ = std::move(values);
  t.standard_errors_ = std::move(standard_errors);
  return t;
}

const Rational& InfluenceTable::exact(VertexId x) const {
  if (!is_exact()) throw std::logic_error("exact influence requested from an approximate table");
  return exact_[x];
}

std::span<const Rational> InfluenceTable::exact_values() const {
  if (!is_exact()) throw std::logic_error("exact influence requested from an approximate table");
  return exact_;
}

VertexId InfluenceTable::argmax() const {
  if (values_.empty()) throw std::logic_error("argmax of an empty influence table");
  VertexId best = 0;
  for (VertexId v = 1; v < size(); ++v) {
    bool better = is_exact() ? exact_[v] > exact_[best] : values_[v] > values_[best];
    if (better) best = v;
  }
  return best;
}

InfluenceTable influence_dag(const DiGraph& g) {
  const auto order = topological_order(g);
  std::vector<Rational> inf(g.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId x = *it;
    Rational total = 1;
    for (VertexId y : g.followers(x)) total += inf[y] / static_cast<unsigned long>(g.out_degree(y));
    inf[x] = std::move(total);
  }
  return InfluenceTable::exact(std::move(inf));
}

InfluenceTable influence_dag_fp(const DiGraph& g) {
  const auto order = topological_order(g);
  std::vector<double> inf(g.size());
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const VertexId x = *it;
    double total = 1.0;
    for (VertexId y : g.followers(x)) total += inf[y] / static_cast<double>(g.out_degree(y));
    inf[x] = total;
  }
  std::vector<double> se(g.size(), 0.0);
  return InfluenceTable::approximate(std::move(inf), std::move(se));
}

namespace {

std::vector<Rational> row_in_order(const DiGraph& g, std::span<const VertexId> sinks_first, VertexId x) {
  std::vector<Rational> row(g.size());
  for (VertexId y : sinks_first) {
    if (y == x) {
      row[y] = 1;
      continue;
    }
    const auto d = g.out_degree(y);
    if (d == 0) continue;
    Rational sum;
    for (VertexId v : g.followees(y)) sum += row[v];
    row[y] = sum / static_cast<unsigned long>(d);
  }
  return row;
}

}  // namespace

std::vector<Rational> influence_row_dag(const DiGraph& g, VertexId x) {
  const auto order = topological_order(g);
  return row_in_order(g, order, x);
}

Rational influence_pair_dag(const DiGraph& g, VertexId x, VertexId y) {
  return influence_row_dag(g, x)[y];
}

PairwiseInfluence::PairwiseInfluence(const DiGraph& g)
    : graph_(&g), order_(topological_order(g)), rows_(g.size()) {}

const std::vector<Rational>& PairwiseInfluence::row(VertexId x) {
  auto& slot = rows_[x];
  if (!slot) slot = row_in_order(*graph_, order_, x);
  return *slot;
}

const Rational& PairwiseInfluence::operator()(VertexId x, VertexId y) { return row(x)[y]; }

InfluenceTable influence_exact_general(const DiGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap)
    throw Error(ErrorKind::TooLargeForExact,
                "simple-path enumeration limited to " + std::to_string(cap) + " vertices, graph has " +
                    std::to_string(n) + "; use the Monte Carlo estimator");
  std::vector<Rational> inf(n);
  std::vector<char> on_path(n, 0);

  // Every prefix of a simple path from the start is itself a simple path
  // ending at its last vertex, so each visited node collects the prefix weight.
  auto walk = [&](auto&& self, VertexId v, const Rational& weight) -> void {
    inf[v] += weight;
    const auto d = g.out_degree(v);
    if (d == 0) return;
    on_path[v] = 1;
    const Rational step = weight / static_cast<unsigned long>(d);
    for (VertexId w : g.followees(v))
      if (!on_path[w]) self(self, w, step);
    on_path[v] = 0;
  };
  for (VertexId start = 0; start < n; ++start) walk(walk, start, Rational(1));
  return InfluenceTable::exact(std::move(inf));
}

InfluenceTable influence_montecarlo(const DiGraph& g, std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads) {
  if (trials == 0) throw Error(ErrorKind::InvalidParams, "Monte Carlo influence needs at least one trial");
  const std::size_t n = g.size();
  constexpr std::uint64_t kChunk = 1u << 15;
  const std::uint64_t chunks = (trials + kChunk - 1) / kChunk;
  threads = std::max(1u, threads);

  std::vector<std::vector<std::uint64_t>> counts(threads, std::vector<std::uint64_t>(n, 0));
  std::atomic<std::uint64_t> next{0};
  parallel_for(threads, threads, [&](std::size_t worker) {
    PathSampler sampler(n);
    std::vector<VertexId> path;
    auto& local = counts[worker];
    for (std::uint64_t c; (c = next.fetch_add(1)) < chunks;) {
      Rng rng = make_stream(seed, {c});
      const std::uint64_t begin = c * kChunk;
      const std::uint64_t end = std::min(trials, begin + kChunk);
      for (std::uint64_t t = begin; t < end; ++t) {
        sampler.sample(g, static_cast<VertexId>(uniform_index(rng, n)), rng, path);
        for (VertexId v : path) ++local[v];
      }
    }
  });

  std::vector<double> value(n), se(n);
  const double total = static_cast<double>(trials);
  for (VertexId v = 0; v < n; ++v) {
    std::uint64_t c = 0;
    for (const auto& local : counts) c += local[v];
    const double p = static_cast<double>(c) / total;
    value[v] = static_cast<double>(n) * p;
    se[v] = static_cast<double>(n) * std::sqrt(p * (1.0 - p) / total);
  }
  return InfluenceTable::approximate(std::move(value), std::move(se));
}

bool BalanceReport::is_balanced(const Rational& query_alpha) const {
  if (exact_alpha) return *exact_alpha >= query_alpha;
  return alpha >= query_alpha.get_d();
}

BalanceReport balance_report(const DiGraph& g, const InfluenceTable& inf) {
  BalanceReport r;
  r.n = g.size();
  r.sinks = sinks(g).size();
  if (r.sinks == 0) throw Error(ErrorKind::NoSinks, "every vertex has an out-edge");
  const VertexId top = inf.argmax();
  r.max_influence = inf.value(top);
  if (inf.is_exact()) {
    r.exact_max_influence = inf.exact(top);
    r.exact_alpha = Rational(static_cast<unsigned long>(r.n)) / static_cast<unsigned long>(r.sinks) /
                    *r.exact_max_influence;
    r.alpha = r.exact_alpha->get_d();
  } else {
    r.alpha = (static_cast<double>(r.n) / static_cast<double>(r.sinks)) / r.max_influence;
  }
  return r;
}

}  // namespace twopath
