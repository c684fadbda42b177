#include "twopath/ic_check.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "twopath/analytic.hpp"
#include "twopath/error.hpp"
#include "twopath/graph_enum.hpp"

namespace twopath {

const char* to_string(Mechanism m) {
  switch (m) {
    case Mechanism::TwoPath: return "two-path";
    case Mechanism::Analytic: return "analytic";
    case Mechanism::GeneralTwoPath: return "general-two-path";
  }
  return "?";
}

const char* to_string(DeviationClass c) {
  switch (c) {
    case DeviationClass::StaysAcyclic: return "stays-acyclic";
    case DeviationClass::CreatesCycle: return "creates-cycle";
    case DeviationClass::AnyGraph: return "any";
  }
  return "?";
}

Mechanism parse_mechanism(const std::string& text) {
  for (auto m : {Mechanism::TwoPath, Mechanism::Analytic, Mechanism::GeneralTwoPath})
    if (text == to_string(m)) return m;
  throw Error(ErrorKind::InvalidParams, "unknown mechanism '" + text + "'");
}

DeviationClass parse_deviation_class(const std::string& text) {
  for (auto c : {DeviationClass::StaysAcyclic, DeviationClass::CreatesCycle, DeviationClass::AnyGraph})
    if (text == to_string(c)) return c;
  throw Error(ErrorKind::InvalidParams, "unknown deviation class '" + text + "'");
}

namespace {

constexpr std::size_t kMemoOrder = 8;

std::uint64_t memo_key(const DiGraph& g, Mechanism m) {
  return adjacency_bits(g) | (std::uint64_t{g.size()} << 56) | (std::uint64_t(static_cast<int>(m)) << 60);
}

SelectionDistribution from_analytic(const AnalyticDistribution& a) {
  return {a.probs, a.null_prob};
}

}  // namespace

const SelectionDistribution& ExactMechanismOracle::distribution(const DiGraph& g, Mechanism m) {
  if (g.size() > kMemoOrder) {
    unmemoized_ = compute(g, m);
    return unmemoized_;
  }
  const auto key = memo_key(g, m);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  auto dist = compute(g, m);
  return memo_.emplace(key, std::move(dist)).first->second;
}

SelectionDistribution ExactMechanismOracle::compute(const DiGraph& g, Mechanism m) {
  const std::size_t n = g.size();
  switch (m) {
    case Mechanism::TwoPath:
      return exact_two_path_distribution(g, caps_.two_path);
    case Mechanism::Analytic:
      if (n > caps_.analytic)
        throw Error(ErrorKind::TooLargeForExact,
                    "exact analytic distribution limited to " + std::to_string(caps_.analytic) + " vertices");
      return from_analytic(analytic_two_path_distribution(g));
    case Mechanism::GeneralTwoPath: {
      if (n > caps_.general || n > kMemoOrder) return exact_general_two_path_distribution(g, caps_.general);
      // Same averaging as exact_general_two_path_distribution, with residual
      // laws drawn from the memo.
      const auto edges = g.edges();
      std::vector<VertexId> order(n);
      std::iota(order.begin(), order.end(), VertexId{0});
      std::vector<std::uint32_t> rank(n);
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
          if (kept >> e & 1) sub.push_back(edges[e]);
        const auto& d = distribution(DiGraph::from_trusted(n, sub), Mechanism::TwoPath);
        Rational weight(count);
        weight /= orderings;
        for (std::size_t v = 0; v < n; ++v) avg.probs[v] += weight * d.probs[v];
        avg.null_prob += weight * d.null_prob;
      }
      return avg;
    }
  }
  throw std::logic_error("unhandled mechanism");
}

std::vector<DeviationReport> verify_ic(const DiGraph& g, Mechanism m, DeviationClass cls,
                                       ExactMechanismOracle& oracle) {
  const std::size_t n = g.size();
  if (n > 20) throw Error(ErrorKind::TooLargeForExact, "deviation sweep enumerates 2^(n-1) out-sets per vertex");
  const auto baseline = oracle.distribution(g, m);
  std::vector<DeviationReport> reports;
  reports.reserve(n);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<VertexId> others;
    for (VertexId u = 0; u < n; ++u)
      if (u != v) others.push_back(u);

    std::vector<VertexId> truthful(g.followees(v).begin(), g.followees(v).end());
    std::sort(truthful.begin(), truthful.end());

    DeviationReport r;
    r.vertex = v;
    r.deviation_class = cls;
    r.baseline = baseline.probs[v];
    r.best = r.baseline;
    std::vector<VertexId> chosen;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << others.size()); ++subset) {
      chosen.clear();
      for (std::size_t i = 0; i < others.size(); ++i)
        if (subset >> i & 1) chosen.push_back(others[i]);
      if (chosen == truthful) continue;
      const DiGraph deviated = g.with_followees(v, chosen);
      const bool acyclic = is_dag(deviated);
      if (cls == DeviationClass::StaysAcyclic && !acyclic) continue;
      if (cls == DeviationClass::CreatesCycle && acyclic) continue;
      ++r.deviations_checked;
      const Rational& p = oracle.distribution(deviated, m).probs[v];
      if (!r.best_followees || p > r.best) {
        r.best = p;
        r.best_followees = chosen;
      }
    }
    r.gain = r.best - r.baseline;
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<DeviationReport> verify_ic(const DiGraph& g, Mechanism m, DeviationClass cls) {
  ExactMechanismOracle oracle;
  return verify_ic(g, m, cls, oracle);
}

std::string deviation_csv_header() { return "vertex,class,baseline,best,gain"; }

std::string to_csv(const DeviationReport& r) {
  std::ostringstream os;
  os << r.vertex << ',' << to_string(r.deviation_class) << ',' << to_fraction_string(r.baseline) << ','
     << to_fraction_string(r.best) << ',' << to_fraction_string(r.gain);
  return os.str();
}

}  // namespace twopath
