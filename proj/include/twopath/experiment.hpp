#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/ic_check.hpp"

namespace twopath {

enum class GeneratorKind { BaDag, Pqr };

// One generator, one swept parameter. Parameter names:
//   ba:  n, sinks, k
//   pqr: n, avg_degree, q_hat
struct ExperimentSpec {
  GeneratorKind generator = GeneratorKind::BaDag;
  std::size_t n = 10000;
  std::size_t sinks = 100;
  std::size_t k = 10;
  double avg_degree = 10;
  double q_hat = 0.15;
  double smoothing = 1.0;

  std::string swept;
  std::vector<double> values;

  std::size_t graphs_per_point = 100;
  std::size_t runs_per_graph = 100;
  Mechanism mechanism = Mechanism::TwoPath;
  std::uint64_t seed = 1;
  unsigned threads = 1;

  // Throws Error{InvalidParams}.
  void validate() const;
};

struct ExperimentRow {
  double param = 0;
  double mean_ratio = 0;  // mean over graphs of I* / E; +inf if some graph had E = 0
  double p10 = 0, p50 = 0, p90 = 0;
  double null_rate = 0;
  std::size_t n = 0;
  std::size_t graphs = 0;
  std::size_t runs = 0;
  std::uint64_t seed = 0;
  double wall_ms = 0;
};

// Per-graph measurement.
struct GraphTrial {
  double max_influence = 0;
  double mean_selected_influence = 0;
  double ratio = 0;
  std::size_t nulls = 0;
  bool exact_influence = false;
};

// Builds the graph for (point, graph) of the spec.
DiGraph experiment_graph(const ExperimentSpec& spec, std::size_t point, std::size_t graph);

// Influence for the ratio: DAG recursion in floating point, or for cyclic
// graphs two independent Monte Carlo estimates of 200*n trials each whose
// argmaxes must each fall in the other's top 3. On disagreement both are
// redrawn with twice the trials, up to 8x; after that Error{Unstable}. The
// pooled estimate is returned.
std::vector<double> experiment_influence(const DiGraph& g, std::uint64_t seed, bool* exact = nullptr);

GraphTrial run_graph_trial(const ExperimentSpec& spec, std::size_t point, std::size_t graph);

// Rows are handed to on_row in grid order as each completes.
std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const std::function<void(const ExperimentRow&)>& on_row = {});

std::string experiment_csv_header();
std::string to_csv(const ExperimentRow& row);
std::vector<ExperimentRow> parse_experiment_csv(const std::string& text);

// Runs the spec, streaming rows to `path`. While running, the file starts with
// a "# status: incomplete" line; on success it is rewritten without it.
std::vector<ExperimentRow> run_experiment_to_file(const ExperimentSpec& spec, const std::string& path);

enum class Trend { NonDecreasing, NonIncreasing };

// True when the sequence follows the trend with at most `allowed_inversions`
// adjacent pairs going the other way.
bool follows_trend(const std::vector<double>& values, Trend trend, std::size_t allowed_inversions = 1);

// Linear-interpolation quantile of an unsorted sample, q in [0, 1].
double quantile(std::vector<double> sample, double q);

}  // namespace twopath
