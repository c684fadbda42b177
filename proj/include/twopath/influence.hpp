#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/rational.hpp"

namespace twopath {

enum class InfluenceMode { Exact, Approximate };

// Total influence I(x) for every vertex. Exact tables hold rationals (and
// their double images); approximate tables hold doubles plus a standard error
// per vertex (zero for deterministic floating-point evaluation).
class InfluenceTable {
 public:
  static InfluenceTable exact(std::vector<Rational> values);
  static InfluenceTable approximate(std::vector<double> values, std::vector<double> standard_errors);

  InfluenceMode mode() const noexcept { return mode_; }
  bool is_exact() const noexcept { return mode_ == InfluenceMode::Exact; }
  std::size_t size() const noexcept { return values_.size(); }

  double value(VertexId x) const { return values_[x]; }
  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> standard_errors() const noexcept { return standard_errors_; }

  // Throws std::logic_error on an approximate table.
  const Rational& exact(VertexId x) const;
  std::span<const Rational> exact_values() const;

  // Lowest-id vertex attaining the maximum.
  VertexId argmax() const;

 private:
  InfluenceMode mode_ = InfluenceMode::Approximate;
  std::vector<Rational> exact_;
  std::vector<double> values_;
  std::vector<double> standard_errors_;
};

// I(x) = 1 + sum_{y in N(x)} I(y) / d_o(y), evaluated followers-first.
// Throws Error{NotADag}.
InfluenceTable influence_dag(const DiGraph& g);

// Same recursion in 64-bit floating point (standard errors are zero).
InfluenceTable influence_dag_fp(const DiGraph& g);

// I(x, y) for one pair on a DAG.
Rational influence_pair_dag(const DiGraph& g, VertexId x, VertexId y);

// Row x of the pairwise table: result[y] = I(x, y) for every y.
std::vector<Rational> influence_row_dag(const DiGraph& g, VertexId x);

// Lazily cached pairwise influences on a DAG.
class PairwiseInfluence {
 public:
  // Throws Error{NotADag}.
  explicit PairwiseInfluence(const DiGraph& g);

  const Rational& operator()(VertexId x, VertexId y);
  const std::vector<Rational>& row(VertexId x);

 private:
  const DiGraph* graph_;
  std::vector<VertexId> order_;
  std::vector<std::optional<std::vector<Rational>>> rows_;
};

inline constexpr std::size_t kDefaultExactInfluenceCap = 14;

// Sums the product of 1/d_o over every simple path ending at each vertex.
// Works on any digraph; exponential, so refuses n > cap with
// Error{TooLargeForExact}.
InfluenceTable influence_exact_general(const DiGraph& g, std::size_t cap = kDefaultExactInfluenceCap);

// n times the visit frequency over `trials` random paths. Trials are cut into
// fixed-size chunks, each with its own stream derived from (seed, chunk), so
// the estimate does not depend on `threads`.
InfluenceTable influence_montecarlo(const DiGraph& g, std::uint64_t trials, std::uint64_t seed,
                                    unsigned threads = 1);

struct BalanceReport {
  std::size_t n = 0;
  std::size_t sinks = 0;
  double max_influence = 0;                   // I*
  double alpha = 0;                           // (n/s) / I*
  std::optional<Rational> exact_max_influence;
  std::optional<Rational> exact_alpha;

  bool is_balanced(double query_alpha) const { return alpha >= query_alpha; }
  bool is_balanced(const Rational& query_alpha) const;
};

// Throws Error{NoSinks} when every vertex has an out-edge.
BalanceReport balance_report(const DiGraph& g, const InfluenceTable& inf);

}  // namespace twopath
