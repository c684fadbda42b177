#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "twopath/digraph.hpp"

namespace twopath {

struct GeneratorStats {
  std::uint64_t events = 0;
  std::uint64_t skipped_events = 0;  // edge events abandoned after the retry budget
  std::uint64_t retries = 0;
  std::size_t max_in_degree = 0;
  double mean_in_degree = 0;

  // "key: value" lines for the graph file comment header.
  std::vector<std::string> comment_lines() const;
};

struct GeneratedGraph {
  DiGraph graph;
  GeneratorStats stats;
};

// Directed Barabasi-Albert: s edgeless seed vertices, then each new vertex
// follows min(k, #existing) distinct existing vertices chosen with weight
// in-degree + smoothing (or uniformly when preferential is false).
struct BaDagParams {
  std::size_t n_total = 0;
  std::size_t s = 1;
  std::size_t k = 1;
  std::uint64_t seed = 0;
  double smoothing = 1.0;
  bool preferential = true;
};

GeneratedGraph gen_ba_dag(const BaDagParams& params);

// Growth model with three events per step:
//   p: new vertex follows an existing target (weight in-degree + smoothing)
//   q: an existing source (weight out-degree + smoothing) follows a new vertex
//   r: existing source follows existing target, self-loops and duplicates
//      rejected with up to kPqrRetries redraws, then the event is skipped
struct PqrParams {
  std::size_t n_total = 0;
  double p = 1.0;
  double q = 0.0;
  double r = 0.0;
  std::uint64_t seed = 0;
  double smoothing = 1.0;
  bool allow_q_not_below_p = false;

  // p + q = 1/avg_in_degree, q / (p + q) = q_hat.
  static PqrParams from_degree(std::size_t n_total, double avg_in_degree, double q_hat,
                               std::uint64_t seed);
};

inline constexpr int kPqrRetries = 32;

GeneratedGraph gen_pqr(const PqrParams& params);

// Uniform labeled rooted tree (Pruefer sequence, uniform root), edges toward the root.
DiGraph gen_random_tree(std::size_t n, std::uint64_t seed);

// s independent uniform trees over a uniformly random composition of n.
DiGraph gen_random_forest(std::size_t n, std::size_t s, std::uint64_t seed);

// Rejection sampling: random DAGs with edge probability `density`, kept once
// the exact strict monotonicity test passes. Throws
// Error{MonotoneRejectionExhausted} after max_attempts.
DiGraph gen_random_monotone_dag(std::size_t n, double density, std::uint64_t seed,
                                std::size_t max_attempts = 10000);

// Random DAG: edges only from later to earlier vertices of a random order.
DiGraph gen_random_dag(std::size_t n, double density, std::uint64_t seed);

// Random simple digraph, each ordered pair independently with probability density.
DiGraph gen_random_digraph(std::size_t n, double density, std::uint64_t seed);

}  // namespace twopath
