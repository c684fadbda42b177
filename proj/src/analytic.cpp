#include "twopath/analytic.hpp"

#include <stdexcept>

#include "twopath/graph_class.hpp"

namespace twopath {

Rational sink_mass(const DiGraph& g, const InfluenceTable& inf) {
  const Rational n(static_cast<unsigned long>(g.size()));
  Rational z;
  for (VertexId r : sinks(g)) {
    Rational share = inf.exact(r) / n;
    z += share * share;
  }
  return z;
}

ZValues analytic_Z(const DiGraph& g, const InfluenceTable& inf, PairwiseInfluence& pairwise) {
  const Rational n(static_cast<unsigned long>(g.size()));
  ZValues out;
  out.per_vertex.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    Rational own = inf.exact(v) / n;
    Rational z = own * own;
    for (VertexId u : g.followers(v)) {
      Rational share = inf.exact(u) / n;
      z -= pairwise(v, u) * share * share;
    }
    out.vertex_sum += z;
    out.per_vertex[v] = std::move(z);
  }
  out.total = sink_mass(g, inf);
  if (out.vertex_sum > out.total) throw std::logic_error("sum of Z(v) exceeds the sink mass Z");
  return out;
}

AnalyticDistribution analytic_two_path_distribution(const DiGraph& g) {
  AnalyticDistribution dist;
  dist.probs.assign(g.size(), Rational(0));
  dist.null_prob = 1;
  if (!is_dag(g)) return dist;
  const InfluenceTable inf = influence_dag(g);
  if (!is_monotone(g, inf)) return dist;

  dist.monotone_dag = true;
  PairwiseInfluence pairwise(g);
  ZValues z = analytic_Z(g, inf, pairwise);
  const Rational n(static_cast<unsigned long>(g.size()));

  dist.z_without_out.resize(g.size());
  for (VertexId v = 0; v < g.size(); ++v) {
    if (g.out_degree(v) == 0) {
      dist.z_without_out[v] = z.total;
    } else {
      const DiGraph cut = g.filter_edges([v](VertexId u, VertexId) { return u != v; });
      dist.z_without_out[v] = sink_mass(cut, influence_dag(cut));
    }
    Rational p = z.per_vertex[v] / (dist.z_without_out[v] + 2 * inf.exact(v) / n);
    dist.null_prob -= p;
    dist.probs[v] = std::move(p);
  }
  dist.z_vertex = std::move(z.per_vertex);
  dist.z_total = std::move(z.total);
  return dist;
}

AnalyticSampler::AnalyticSampler(const AnalyticDistribution& dist) : null_index_(dist.probs.size()) {
  std::vector<double> weights;
  weights.reserve(dist.probs.size() + 1);
  for (const auto& p : dist.probs) weights.push_back(p.get_d());
  weights.push_back(dist.null_prob.get_d());
  pick_ = std::discrete_distribution<std::size_t>(weights.begin(), weights.end());
}

Outcome AnalyticSampler::sample(Rng& rng) {
  const std::size_t i = pick_(rng);
  return i == null_index_ ? Outcome::null() : Outcome::selected(static_cast<VertexId>(i));
}

Outcome sample_analytic(const DiGraph& g, Rng& rng) {
  return AnalyticSampler(analytic_two_path_distribution(g)).sample(rng);
}

}  // namespace twopath
