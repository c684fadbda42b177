#include "twopath/exact.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "twopath/error.hpp"
#include "twopath/graph_class.hpp"
#include "twopath/two_path.hpp"

namespace twopath {

Rational SelectionDistribution::total() const {
  Rational t = null_prob;
  for (const auto& p : probs) t += p;
  return t;
}

Rational RoundLaw::meeting_mass() const {
  Rational t;
  for (const auto& w : first_meeting) t += w;
  return t;
}

namespace {

constexpr std::size_t kMaskBits = 64;

void require_mask_capacity(const DiGraph& g) {
  if (g.size() > kMaskBits)
    throw Error(ErrorKind::TooLargeForExact,
                "exact path enumeration supports at most 64 vertices, graph has " + std::to_string(g.size()));
}

std::uint64_t bit(VertexId v) { return std::uint64_t{1} << v; }

std::uint64_t full_mask(std::size_t n) { return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1; }

}  // namespace

std::vector<WeightedPath> enumerate_random_paths(const DiGraph& g, VertexId start) {
  require_mask_capacity(g);
  std::vector<WeightedPath> out;
  std::vector<VertexId> path;

  auto walk = [&](auto&& self, VertexId v, std::uint64_t mask, const Rational& prob) -> void {
    path.push_back(v);
    mask |= bit(v);
    const auto next = g.followees(v);
    if (next.empty()) {
      out.push_back({path, mask, prob});
    } else {
      const Rational step = prob / static_cast<unsigned long>(next.size());
      // All choices that land back on the path end it identically.
      std::size_t revisits = 0;
      for (VertexId w : next) {
        if (mask & bit(w)) ++revisits;
        else self(self, w, mask, step);
      }
      if (revisits) out.push_back({path, mask, step * static_cast<unsigned long>(revisits)});
    }
    path.pop_back();
  };
  walk(walk, start, 0, Rational(1));
  return out;
}

RoundLaw one_round_law(const DiGraph& g) {
  require_mask_capacity(g);
  const std::size_t n = g.size();
  const Rational start_prob(1, static_cast<unsigned long>(n));

  std::vector<WeightedPath> all;
  for (VertexId s = 0; s < n; ++s) {
    for (auto& p : enumerate_random_paths(g, s)) {
      p.probability *= start_prob;
      all.push_back(std::move(p));
    }
  }

  // P2 only matters through its vertex set.
  std::map<std::uint64_t, Rational> by_mask;
  for (const auto& p : all) by_mask[p.mask] += p.probability;

  RoundLaw law;
  law.first_meeting.assign(n, Rational(0));
  std::map<std::uint64_t, Rational> disjoint;
  std::vector<Rational> meet_local(n);
  std::map<std::uint64_t, Rational> disjoint_local;
  for (const auto& first : all) {
    for (auto& m : meet_local) m = 0;
    disjoint_local.clear();
    for (const auto& [mask2, prob2] : by_mask) {
      if ((first.mask & mask2) == 0) {
        disjoint_local[first.mask | mask2] += prob2;
        continue;
      }
      for (VertexId v : first.vertices) {
        if (mask2 & bit(v)) {
          meet_local[v] += prob2;
          break;
        }
      }
    }
    for (VertexId v = 0; v < n; ++v)
      if (sgn(meet_local[v]) != 0) law.first_meeting[v] += first.probability * meet_local[v];
    for (const auto& [mask, prob] : disjoint_local) disjoint[mask] += first.probability * prob;
  }
  law.disjoint.assign(disjoint.begin(), disjoint.end());
  return law;
}

namespace {

// Marked-set Markov chain. solve(U) is the outcome law (per vertex, then
// null) of the loop entered with marked set U.
class MarkedSetSolver {
 public:
  MarkedSetSolver(std::size_t n, const RoundLaw& law) : n_(n), law_(law), full_(full_mask(n)) {}

  const std::vector<Rational>& solve(std::uint64_t marked) {
    if (auto it = memo_.find(marked); it != memo_.end()) return it->second;
    std::vector<Rational> acc(n_ + 1);
    if (marked == full_) {
      acc[n_] = 1;
      return memo_.emplace(marked, std::move(acc)).first->second;
    }
    for (VertexId z = 0; z < n_; ++z) {
      const auto& w = law_.first_meeting[z];
      if (sgn(w) == 0) continue;
      acc[(marked & bit(z)) ? n_ : z] += w;
    }
    Rational stay;
    for (const auto& [mask, prob] : law_.disjoint) {
      const std::uint64_t next = marked | mask;
      if (next == marked) {
        stay += prob;
        continue;
      }
      const auto& sub = solve(next);
      for (std::size_t i = 0; i <= n_; ++i)
        if (sgn(sub[i]) != 0) acc[i] += prob * sub[i];
    }
    if (sgn(stay) != 0) {
      const Rational leave = 1 - stay;
      for (auto& a : acc) a /= leave;
    }
    return memo_.emplace(marked, std::move(acc)).first->second;
  }

 private:
  std::size_t n_;
  const RoundLaw& law_;
  std::uint64_t full_;
  std::unordered_map<std::uint64_t, std::vector<Rational>> memo_;
};

}  // namespace

SelectionDistribution exact_two_path_distribution(const DiGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  require_mask_capacity(g);
  if (n > cap && !is_tree(g))
    throw Error(ErrorKind::TooLargeForExact,
                "exact Two Path law limited to " + std::to_string(cap) + " vertices (trees excepted), graph has " +
                    std::to_string(n) + "; use Monte Carlo runs of 'select' instead");
  SelectionDistribution dist;
  if (n == 0) {
    dist.null_prob = 1;
    return dist;
  }
  const RoundLaw law = one_round_law(g);
  MarkedSetSolver solver(n, law);
  const auto& root = solver.solve(0);
  dist.probs.assign(root.begin(), root.end() - 1);
  dist.null_prob = root.back();
  return dist;
}

SelectionDistribution exact_general_two_path_distribution(const DiGraph& g, std::size_t cap) {
  const std::size_t n = g.size();
  if (n > cap || g.edge_count() > 64)
    throw Error(ErrorKind::TooLargeForExact,
                "exact general Two Path law averages n! orderings; limited to " + std::to_string(cap) +
                    " vertices, graph has " + std::to_string(n));
  const auto edges = g.edges();
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::vector<std::uint32_t> rank(n);

  // Orderings collapse onto residual edge sets; count each once.
  std::map<std::uint64_t, unsigned long> residual_count;
  unsigned long orderings = 0;
  do {
    for (std::size_t i = 0; i < n; ++i) rank[order[i]] = static_cast<std::uint32_t>(i);
    std::uint64_t kept = 0;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (rank[edges[e].source] < rank[edges[e].target]) kept |= std::uint64_t{1} << e;
    ++residual_count[kept];
    ++orderings;
  } while (std::next_permutation(order.begin(), order.end()));

  SelectionDistribution avg;
  avg.probs.assign(n, Rational(0));
  for (const auto& [kept, count] : residual_count) {
    std::vector<Edge> sub;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (kept & (std::uint64_t{1} << e)) sub.push_back(edges[e]);
    const DiGraph residual = DiGraph::from_trusted(n, sub);
    const auto d = exact_two_path_distribution(residual, std::max(cap, kDefaultExactTwoPathCap));
    Rational weight(count);
    weight /= orderings;
    for (std::size_t v = 0; v < n; ++v) avg.probs[v] += weight * d.probs[v];
    avg.null_prob += weight * d.null_prob;
  }
  return avg;
}

ExpectedInfluence expected_influence(const SelectionDistribution& dist, const InfluenceTable& inf) {
  if (dist.probs.size() != inf.size())
    throw std::invalid_argument("distribution and influence table cover different vertex counts");
  ExpectedInfluence out;
  for (VertexId v = 0; v < inf.size(); ++v) out.expected += inf.exact(v) * dist.probs[v];
  out.max_influence = inf.size() ? inf.exact(inf.argmax()) : Rational(0);
  if (sgn(out.expected) != 0) out.ratio = out.max_influence / out.expected;
  return out;
}

TreeScore tree_f_score(const DiGraph& tree) {
  if (!is_tree(tree)) throw Error(ErrorKind::NotATree, "f(T) is defined on trees only");
  const InfluenceTable inf = influence_dag(tree);
  auto as_int = [&](VertexId v) {
    const Rational& r = inf.exact(v);
    if (r.get_den() != 1) throw std::logic_error("non-integral influence on a tree");
    return mpz_class(r.get_num());
  };
  mpz_class f = 0;
  for (VertexId v = 0; v < tree.size(); ++v) {
    if (tree.out_degree(v) == 0) continue;
    const mpz_class iv = as_int(v);
    f += iv * iv * (as_int(tree.followees(v)[0]) - iv);
  }
  if (!f.fits_slong_p()) throw std::overflow_error("f(T) exceeds 64 bits");
  return {static_cast<std::int64_t>(f.get_si())};
}

}  // namespace twopath
