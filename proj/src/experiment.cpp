#include "twopath/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "twopath/analytic.hpp"
#include "twopath/error.hpp"
#include "twopath/generators.hpp"
#include "twopath/influence.hpp"
#include "twopath/parallel.hpp"
#include "twopath/rng.hpp"
#include "twopath/two_path.hpp"

namespace twopath {

namespace {

constexpr std::size_t kAnalyticExperimentCap = 12;
constexpr std::uint64_t kStabilityDoublings = 3;

bool valid_axis(GeneratorKind kind, const std::string& name) {
  if (kind == GeneratorKind::BaDag) return name == "n" || name == "sinks" || name == "k";
  return name == "n" || name == "avg_degree" || name == "q_hat";
}

}  // namespace

void ExperimentSpec::validate() const {
  if (!valid_axis(generator, swept))
    throw Error(ErrorKind::InvalidParams, "cannot sweep '" + swept + "' for this generator");
  if (values.empty()) throw Error(ErrorKind::InvalidParams, "sweep needs at least one value");
  if (graphs_per_point < 1 || runs_per_graph < 1)
    throw Error(ErrorKind::InvalidParams, "graphs per point and runs per graph must be >= 1");
  const double largest_n = swept == "n" ? *std::max_element(values.begin(), values.end()) : static_cast<double>(n);
  if (mechanism == Mechanism::Analytic && largest_n > kAnalyticExperimentCap)
    throw Error(ErrorKind::TooLargeForExact, "analytic mechanism needs the exact distribution; n <= 12");
}

DiGraph experiment_graph(const ExperimentSpec& spec, std::size_t point, std::size_t graph) {
  const double value = spec.values.at(point);
  const std::uint64_t seed = make_stream(spec.seed, {point, graph, 0})();
  const auto n = spec.swept == "n" ? static_cast<std::size_t>(value) : spec.n;
  if (spec.generator == GeneratorKind::BaDag) {
    BaDagParams p;
    p.n_total = n;
    p.s = spec.swept == "sinks" ? static_cast<std::size_t>(value) : spec.sinks;
    p.k = spec.swept == "k" ? static_cast<std::size_t>(value) : spec.k;
    p.seed = seed;
    p.smoothing = spec.smoothing;
    return gen_ba_dag(p).graph;
  }
  const double degree = spec.swept == "avg_degree" ? value : spec.avg_degree;
  const double q_hat = spec.swept == "q_hat" ? value : spec.q_hat;
  PqrParams p = PqrParams::from_degree(n, degree, q_hat, seed);
  p.smoothing = spec.smoothing;
  return gen_pqr(p).graph;
}

std::vector<double> experiment_influence(const DiGraph& g, std::uint64_t seed, bool* exact) {
  if (is_dag(g)) {
    if (exact) *exact = true;
    auto t = influence_dag_fp(g);
    return {t.values().begin(), t.values().end()};
  }
  if (exact) *exact = false;

  auto top3 = [](const InfluenceTable& t) {
    std::vector<VertexId> idx(t.size());
    std::iota(idx.begin(), idx.end(), VertexId{0});
    const auto k = std::min<std::size_t>(3, idx.size());
    std::partial_sort(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(k), idx.end(),
                      [&](VertexId x, VertexId y) { return t.value(x) > t.value(y) || (t.value(x) == t.value(y) && x < y); });
    idx.resize(k);
    return idx;
  };
  auto contains = [](const std::vector<VertexId>& v, VertexId x) { return std::find(v.begin(), v.end(), x) != v.end(); };

  // Near-ties at the top need more trials: double up to kStabilityDoublings
  // times before giving up on the row.
  const std::uint64_t base = 200 * static_cast<std::uint64_t>(g.size());
  std::string history;
  for (std::uint64_t level = 0; level <= kStabilityDoublings; ++level) {
    const std::uint64_t trials = base << level;
    const auto a = influence_montecarlo(g, trials, make_stream(seed, level ? std::initializer_list<std::uint64_t>{1, level}
                                                                           : std::initializer_list<std::uint64_t>{1})());
    const auto b = influence_montecarlo(g, trials, make_stream(seed, level ? std::initializer_list<std::uint64_t>{2, level}
                                                                           : std::initializer_list<std::uint64_t>{2})());
    const auto top_a = top3(a), top_b = top3(b);
    if (contains(top_b, top_a.front()) && contains(top_a, top_b.front())) {
      std::vector<double> pooled(g.size());
      for (VertexId v = 0; v < g.size(); ++v) pooled[v] = 0.5 * (a.value(v) + b.value(v));
      return pooled;
    }
    history += (history.empty() ? "" : ", ") + std::to_string(trials) + " trials: " + std::to_string(top_a.front()) +
               " vs " + std::to_string(top_b.front());
  }
  throw Error(ErrorKind::Unstable, "Monte Carlo influence estimates disagree on the top vertex (" + history + "); row aborted");
}

GraphTrial run_graph_trial(const ExperimentSpec& spec, std::size_t point, std::size_t graph) {
  const DiGraph g = experiment_graph(spec, point, graph);
  GraphTrial trial;
  const auto influence = experiment_influence(g, make_stream(spec.seed, {point, graph, 1})(), &trial.exact_influence);
  trial.max_influence = influence.empty() ? 0.0 : *std::max_element(influence.begin(), influence.end());

  double total = 0;
  auto record = [&](const Outcome& o) {
    if (o.is_null()) ++trial.nulls;
    else total += influence[o.vertex()];
  };
  switch (spec.mechanism) {
    case Mechanism::TwoPath: {
      TwoPathRunner runner;
      for (std::size_t run = 0; run < spec.runs_per_graph; ++run) {
        Rng rng = make_stream(spec.seed, {point, graph, 2 + run});
        record(runner.run(g, rng));
      }
      break;
    }
    case Mechanism::GeneralTwoPath: {
      GeneralTwoPathRunner runner;
      for (std::size_t run = 0; run < spec.runs_per_graph; ++run) {
        Rng rng = make_stream(spec.seed, {point, graph, 2 + run});
        record(runner.run(g, rng));
      }
      break;
    }
    case Mechanism::Analytic: {
      if (g.size() > kAnalyticExperimentCap)
        throw Error(ErrorKind::TooLargeForExact, "analytic mechanism needs the exact distribution; n <= 12");
      AnalyticSampler sampler(analytic_two_path_distribution(g));
      for (std::size_t run = 0; run < spec.runs_per_graph; ++run) {
        Rng rng = make_stream(spec.seed, {point, graph, 2 + run});
        record(sampler.sample(rng));
      }
      break;
    }
  }
  trial.mean_selected_influence = total / static_cast<double>(spec.runs_per_graph);
  trial.ratio = trial.mean_selected_influence > 0 ? trial.max_influence / trial.mean_selected_influence
                                                  : std::numeric_limits<double>::infinity();
  return trial;
}

double quantile(std::vector<double> sample, double q) {
  if (sample.empty()) return std::numeric_limits<double>::quiet_NaN();
  std::sort(sample.begin(), sample.end());
  const double pos = q * static_cast<double>(sample.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sample.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  if (frac == 0 || sample[lo] == sample[hi]) return sample[lo];
  return sample[lo] + frac * (sample[hi] - sample[lo]);
}

std::vector<ExperimentRow> run_experiment(const ExperimentSpec& spec,
                                          const std::function<void(const ExperimentRow&)>& on_row) {
  spec.validate();
  std::vector<ExperimentRow> rows;
  for (std::size_t point = 0; point < spec.values.size(); ++point) {
    const auto started = std::chrono::steady_clock::now();
    std::vector<GraphTrial> trials(spec.graphs_per_point);
    parallel_for(spec.graphs_per_point, spec.threads,
                 [&](std::size_t graph) { trials[graph] = run_graph_trial(spec, point, graph); });

    ExperimentRow row;
    row.param = spec.values[point];
    std::vector<double> ratios;
    std::size_t nulls = 0;
    for (const auto& t : trials) {
      ratios.push_back(t.ratio);
      nulls += t.nulls;
    }
    row.mean_ratio = std::accumulate(ratios.begin(), ratios.end(), 0.0) / static_cast<double>(ratios.size());
    row.p10 = quantile(ratios, 0.10);
    row.p50 = quantile(ratios, 0.50);
    row.p90 = quantile(ratios, 0.90);
    row.graphs = spec.graphs_per_point;
    row.runs = spec.runs_per_graph;
    row.null_rate = static_cast<double>(nulls) / static_cast<double>(row.graphs * row.runs);
    row.n = spec.swept == "n" ? static_cast<std::size_t>(row.param) : spec.n;
    row.seed = spec.seed;
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
    rows.push_back(row);
    if (on_row) on_row(row);
  }
  return rows;
}

std::string experiment_csv_header() { return "param,mean_ratio,p10,p50,p90,null_rate,n,graphs,runs,seed,wall_ms"; }

namespace {

std::string fmt6(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

std::string to_csv(const ExperimentRow& r) {
  std::ostringstream os;
  os << fmt6(r.param) << ',' << fmt6(r.mean_ratio) << ',' << fmt6(r.p10) << ',' << fmt6(r.p50) << ','
     << fmt6(r.p90) << ',' << fmt6(r.null_rate) << ',' << r.n << ',' << r.graphs << ',' << r.runs << ','
     << r.seed << ',' << fmt6(r.wall_ms);
  return os.str();
}

std::vector<ExperimentRow> parse_experiment_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  bool header_seen = false;
  std::vector<ExperimentRow> rows;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    if (!header_seen) {
      if (line != experiment_csv_header())
        throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": unexpected CSV header");
      header_seen = true;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    for (std::string cell; std::getline(ls, cell, ',');) f.push_back(cell);
    if (f.size() != 11) throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": expected 11 fields");
    try {
      ExperimentRow r;
      r.param = std::stod(f[0]);
      r.mean_ratio = std::stod(f[1]);
      r.p10 = std::stod(f[2]);
      r.p50 = std::stod(f[3]);
      r.p90 = std::stod(f[4]);
      r.null_rate = std::stod(f[5]);
      r.n = std::stoull(f[6]);
      r.graphs = std::stoull(f[7]);
      r.runs = std::stoull(f[8]);
      r.seed = std::stoull(f[9]);
      r.wall_ms = std::stod(f[10]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::Parse, "line " + std::to_string(line_no) + ": malformed number");
    }
  }
  if (!header_seen) throw Error(ErrorKind::Parse, "missing CSV header");
  return rows;
}

std::vector<ExperimentRow> run_experiment_to_file(const ExperimentSpec& spec, const std::string& path) {
  spec.validate();
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + path);
    out << "# status: incomplete\n" << experiment_csv_header() << '\n';
  }
  auto rows = run_experiment(spec, [&](const ExperimentRow& row) {
    std::ofstream out(path, std::ios::binary | std::ios::app);
    out << to_csv(row) << '\n';
  });
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    if (!out) throw Error(ErrorKind::Io, "cannot write " + tmp);
    out << experiment_csv_header() << '\n';
    for (const auto& r : rows) out << to_csv(r) << '\n';
    if (!out) throw Error(ErrorKind::Io, "write failed for " + tmp);
  }
  std::filesystem::rename(tmp, path);
  return rows;
}

bool follows_trend(const std::vector<double>& values, Trend trend, std::size_t allowed_inversions) {
  std::size_t inversions = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    const bool wrong = trend == Trend::NonDecreasing ? values[i + 1] < values[i] : values[i + 1] > values[i];
    if (wrong) ++inversions;
  }
  return inversions <= allowed_inversions;
}

}  // namespace twopath
