#pragma once

#include <random>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/influence.hpp"
#include "twopath/rational.hpp"
#include "twopath/rng.hpp"
#include "twopath/two_path.hpp"

namespace twopath {

struct ZValues {
  std::vector<Rational> per_vertex;  // Z(v)
  Rational total;                    // Z = sum over sinks of (I(r)/n)^2
  Rational vertex_sum;               // sum_v Z(v)
};

// Z(v) = (I(v)/n)^2 - sum_{u in N(v)} I(v,u) (I(u)/n)^2 and Z = sum over sinks
// of (I(r)/n)^2. sum_v Z(v) equals Z on forests, and more generally whenever
// no followee of a vertex reaches another of its followees; otherwise it is
// strictly smaller. Throws std::logic_error if sum_v Z(v) > Z, and
// Error{NotADag} on cyclic input.
ZValues analytic_Z(const DiGraph& g, const InfluenceTable& inf, PairwiseInfluence& pairwise);

// sum_{r in sinks} (I(r)/n)^2
Rational sink_mass(const DiGraph& g, const InfluenceTable& inf);

struct AnalyticDistribution {
  bool monotone_dag = false;
  std::vector<Rational> probs;
  Rational null_prob;
  // Retained for inspection; empty when the input is not a monotone DAG.
  std::vector<Rational> z_vertex;       // Z(v)
  Rational z_total;                     // Z
  std::vector<Rational> z_without_out;  // Z_v: Z after deleting v's out-edges
};

// Pr(v) = Z(v) / (Z_v + 2 I(v)/n) on monotone DAGs, the rest of the mass on
// null. Anything else is null with probability one.
AnalyticDistribution analytic_two_path_distribution(const DiGraph& g);

// Draws from a precomputed analytic distribution.
class AnalyticSampler {
 public:
  explicit AnalyticSampler(const AnalyticDistribution& dist);
  Outcome sample(Rng& rng);

 private:
  std::discrete_distribution<std::size_t> pick_;
  std::size_t null_index_;
};

Outcome sample_analytic(const DiGraph& g, Rng& rng);

}  // namespace twopath
