// Command-line front-end: gen, influence, select, dist, ic-check, experiment, plot.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twopath/analytic.hpp"
#include "twopath/constructions.hpp"
#include "twopath/digraph.hpp"
#include "twopath/error.hpp"
#include "twopath/exact.hpp"
#include "twopath/experiment.hpp"
#include "twopath/generators.hpp"
#include "twopath/graph_class.hpp"
#include "twopath/graph_io.hpp"
#include "twopath/ic_check.hpp"
#include "twopath/influence.hpp"
#include "twopath/parallel.hpp"
#include "twopath/rational.hpp"
#include "twopath/rng.hpp"
#include "twopath/svg_plot.hpp"
#include "twopath/two_path.hpp"

using namespace twopath;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitCapacity = 3;

// Rational DAG recursion is cheap enough up to here; beyond, numerators blow up.
constexpr std::size_t kExactDagInfluenceCap = 2000;

struct Globals {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::string format = "text";
  bool csv() const { return format == "csv"; }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw Error(ErrorKind::Io, "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

// ---- gen ------------------------------------------------------------------

struct GenArgs {
  std::string model;
  std::string out;
  std::size_t n = 100;
  std::size_t sinks = 1;
  std::size_t k = 2;
  bool uniform = false;
  double smoothing = 1.0;
  std::optional<double> p, q, r;
  std::optional<double> avg_degree;
  double q_hat = 0.15;
  bool allow_q_ge_p = false;
  double density = 0.3;
  std::size_t rows = 8, cols = 2;
  std::size_t star_order = 10, isolated = 100;
  std::size_t depth = 3;
};

void cmd_gen(const GenArgs& a, const Globals& g) {
  DiGraph graph;
  std::vector<std::string> comments{"model " + a.model, "seed " + std::to_string(g.seed)};
  auto add_stats = [&](const GeneratorStats& s) {
    for (auto& line : s.comment_lines()) comments.push_back(line);
  };
  if (a.model == "ba") {
    BaDagParams p{a.n, a.sinks, a.k, g.seed, a.smoothing, !a.uniform};
    auto gen = gen_ba_dag(p);
    graph = std::move(gen.graph);
    add_stats(gen.stats);
  } else if (a.model == "pqr") {
    PqrParams p;
    if (a.avg_degree) {
      p = PqrParams::from_degree(a.n, *a.avg_degree, a.q_hat, g.seed);
    } else {
      if (!a.p || !a.q || !a.r) throw Error(ErrorKind::InvalidParams, "pqr needs --p --q --r or --avg-degree");
      p.n_total = a.n;
      p.p = *a.p;
      p.q = *a.q;
      p.r = *a.r;
      p.seed = g.seed;
    }
    p.smoothing = a.smoothing;
    p.allow_q_not_below_p = a.allow_q_ge_p;
    auto gen = gen_pqr(p);
    graph = std::move(gen.graph);
    add_stats(gen.stats);
  } else if (a.model == "tree") {
    graph = gen_random_tree(a.n, g.seed);
  } else if (a.model == "forest") {
    graph = gen_random_forest(a.n, a.sinks, g.seed);
  } else if (a.model == "monotone-dag") {
    graph = gen_random_monotone_dag(a.n, a.density, g.seed);
  } else if (a.model == "dag") {
    graph = gen_random_dag(a.n, a.density, g.seed);
  } else if (a.model == "digraph") {
    graph = gen_random_digraph(a.n, a.density, g.seed);
  } else if (a.model == "star-forest") {
    graph = star_forest(a.star_order, a.isolated);
  } else if (a.model == "grid") {
    graph = grid_dag(a.rows, a.cols);
  } else if (a.model == "path") {
    graph = path_graph(a.n);
  } else if (a.model == "binary-tree") {
    graph = complete_binary_tree(a.depth);
  } else if (a.model == "example1") {
    graph = example_one_graph();
  } else if (a.model == "two-cycle") {
    graph = two_cycle();
  } else {
    throw Error(ErrorKind::InvalidParams, "unknown model '" + a.model + "'");
  }
  Output out(a.out);
  write_graph(out.stream(), graph, comments);
}

// ---- influence ------------------------------------------------------------

struct InfluenceArgs {
  std::string graph;
  std::uint64_t trials = 1000000;
  bool monte_carlo = false;
  std::size_t exact_cap = kDefaultExactInfluenceCap;
};

void cmd_influence(const InfluenceArgs& a, const Globals& gl) {
  const DiGraph g = read_graph_file(a.graph);
  const bool dag = is_dag(g);
  InfluenceTable inf = InfluenceTable::exact(std::vector<Rational>{});
  std::string method;
  if (!a.monte_carlo && dag && g.size() <= kExactDagInfluenceCap) {
    inf = influence_dag(g);
    method = "exact";
  } else if (!a.monte_carlo && dag) {
    inf = influence_dag_fp(g);
    method = "dag-recursion-float";
  } else if (!a.monte_carlo && g.size() <= a.exact_cap) {
    inf = influence_exact_general(g, a.exact_cap);
    method = "exact";
  } else {
    inf = influence_montecarlo(g, a.trials, gl.seed, gl.threads);
    method = "monte-carlo trials=" + std::to_string(a.trials);
  }

  auto& out = std::cout;
  if (gl.csv()) {
    out << "vertex,influence,value,se\n";
    for (VertexId v = 0; v < g.size(); ++v) {
      out << v << ',' << (inf.is_exact() ? to_fraction_string(inf.exact(v)) : num(inf.value(v))) << ','
          << num(inf.value(v)) << ',' << (inf.standard_errors().empty() ? "0" : num(inf.standard_errors()[v]))
          << '\n';
    }
    return;
  }
  out << "# method " << method << "  class " << to_string(inf.is_exact() ? classify(g, inf) : classify(g)) << '\n';
  for (VertexId v = 0; v < g.size(); ++v) {
    out << v << '\t';
    if (inf.is_exact()) out << to_fraction_string(inf.exact(v)) << "\t(" << num(inf.value(v)) << ")";
    else if (!inf.standard_errors().empty()) out << num(inf.value(v)) << "\t+- " << num(inf.standard_errors()[v]);
    else out << num(inf.value(v));
    out << '\n';
  }
  if (!sinks(g).empty()) {
    const auto b = balance_report(g, inf);
    out << "# n " << b.n << "  sinks " << b.sinks << "  max " << num(b.max_influence) << "  alpha " << num(b.alpha)
        << '\n';
  }
}

// ---- select ---------------------------------------------------------------

struct SelectArgs {
  std::string graph;
  std::string mechanism = "two-path";
  std::uint64_t max_rounds = 0;
};

void cmd_select(const SelectArgs& a, const Globals& gl) {
  const DiGraph g = read_graph_file(a.graph);
  const Mechanism m = parse_mechanism(a.mechanism);
  MechanismTranscript t;
  if (m == Mechanism::TwoPath) {
    t = run_two_path(g, gl.seed, a.max_rounds);
  } else if (m == Mechanism::GeneralTwoPath) {
    t = run_general_two_path(g, gl.seed, a.max_rounds);
  } else {
    Rng rng = make_stream(gl.seed);
    t.seed = gl.seed;
    t.result = sample_analytic(g, rng);
    t.end = t.result.is_null() ? RunEnd::MetMarked : RunEnd::Selected;
  }
  if (gl.csv()) {
    std::cout << "seed,result,end,rounds\n"
              << t.seed << ',' << (t.result.is_null() ? std::string("null") : std::to_string(t.result.vertex()))
              << ',' << to_string(t.end) << ',' << t.rounds.size() << '\n';
    return;
  }
  write_transcript(std::cout, t);
}

// ---- dist -----------------------------------------------------------------

struct DistArgs {
  std::string graph;
  std::string mechanism = "two-path";
  std::size_t cap = 0;
};

void cmd_dist(const DistArgs& a, const Globals& gl) {
  const DiGraph g = read_graph_file(a.graph);
  const Mechanism m = parse_mechanism(a.mechanism);
  SelectionDistribution dist;
  if (m == Mechanism::TwoPath) {
    dist = exact_two_path_distribution(g, a.cap ? a.cap : kDefaultExactTwoPathCap);
  } else if (m == Mechanism::GeneralTwoPath) {
    dist = exact_general_two_path_distribution(g, a.cap ? a.cap : kDefaultExactGeneralCap);
  } else {
    auto ad = analytic_two_path_distribution(g);
    dist.probs = std::move(ad.probs);
    dist.null_prob = ad.null_prob;
  }

  std::optional<ExpectedInfluence> ei;
  if (is_dag(g) && g.size() <= kExactDagInfluenceCap) ei = expected_influence(dist, influence_dag(g));
  else if (g.size() <= kDefaultExactInfluenceCap) ei = expected_influence(dist, influence_exact_general(g));

  if (gl.csv()) {
    std::cout << "outcome,probability\n";
    for (VertexId v = 0; v < g.size(); ++v) std::cout << v << ',' << to_fraction_string(dist.probs[v]) << '\n';
    std::cout << "null," << to_fraction_string(dist.null_prob) << '\n';
    return;
  }
  for (VertexId v = 0; v < g.size(); ++v)
    std::cout << v << '\t' << to_fraction_string(dist.probs[v]) << "\t(" << num(dist.probs[v].get_d()) << ")\n";
  std::cout << "null\t" << to_fraction_string(dist.null_prob) << "\t(" << num(dist.null_prob.get_d()) << ")\n";
  if (ei) {
    std::cout << "# expected influence " << to_fraction_string(ei->expected) << "  max " << to_fraction_string(ei->max_influence)
              << "  ratio " << (ei->ratio ? to_fraction_string(*ei->ratio) : std::string("unbounded")) << '\n';
  }
}

// ---- ic-check -------------------------------------------------------------

struct IcArgs {
  std::string graph;
  std::string mechanism = "two-path";
  std::string deviation_class = "stays-acyclic";
};

int cmd_ic_check(const IcArgs& a, const Globals&) {
  const DiGraph g = read_graph_file(a.graph);
  const auto reports = verify_ic(g, parse_mechanism(a.mechanism), parse_deviation_class(a.deviation_class));
  std::cout << deviation_csv_header() << '\n';
  std::size_t violations = 0;
  for (const auto& r : reports) {
    std::cout << to_csv(r) << '\n';
    if (r.gain > 0) ++violations;
  }
  std::cerr << violations << " vertices with a profitable deviation\n";
  return 0;
}

// ---- experiment -----------------------------------------------------------

struct ExperimentArgs {
  std::string preset;
  std::string generator = "ba";
  std::string sweep;
  std::vector<double> values;
  std::size_t n = 10000, sinks = 100, k = 10;
  double avg_degree = 10, q_hat = 0.15, smoothing = 1.0;
  std::size_t graphs = 100, runs = 100;
  std::string mechanism;
  std::string out;
};

ExperimentSpec build_spec(const ExperimentArgs& a, const Globals& gl) {
  ExperimentSpec s;
  std::string generator = a.generator, sweep = a.sweep, mechanism = a.mechanism;
  std::vector<double> values = a.values;
  if (!a.preset.empty()) {
    if (a.preset == "sinks") {
      generator = "ba", sweep = "sinks", values = {50, 100, 200, 400, 800};
    } else if (a.preset == "out-degree") {
      generator = "ba", sweep = "k", values = {2, 5, 10, 20, 40};
    } else if (a.preset == "avg-degree") {
      generator = "pqr", sweep = "avg_degree", values = {2, 5, 10, 20, 40};
    } else if (a.preset == "q-hat") {
      generator = "pqr", sweep = "q_hat", values = {0, 0.1, 0.2, 0.3, 0.4};
    } else {
      throw Error(ErrorKind::InvalidParams, "unknown preset '" + a.preset + "'");
    }
    if (!a.sweep.empty() || !a.values.empty()) {
      if (!a.sweep.empty()) sweep = a.sweep;
      if (!a.values.empty()) values = a.values;
    }
  }
  if (generator == "ba") s.generator = GeneratorKind::BaDag;
  else if (generator == "pqr") s.generator = GeneratorKind::Pqr;
  else throw Error(ErrorKind::InvalidParams, "unknown generator '" + generator + "'");
  if (mechanism.empty()) mechanism = s.generator == GeneratorKind::BaDag ? "two-path" : "general-two-path";
  s.mechanism = parse_mechanism(mechanism);
  s.swept = sweep;
  s.values = values;
  s.n = a.n;
  s.sinks = a.sinks;
  s.k = a.k;
  s.avg_degree = a.avg_degree;
  s.q_hat = a.q_hat;
  s.smoothing = a.smoothing;
  s.graphs_per_point = a.graphs;
  s.runs_per_graph = a.runs;
  s.seed = gl.seed;
  s.threads = gl.threads;
  s.validate();
  return s;
}

void cmd_experiment(const ExperimentArgs& a, const Globals& gl) {
  const ExperimentSpec spec = build_spec(a, gl);
  auto progress = [](const ExperimentRow& r) {
    std::cerr << "param " << num(r.param) << "  mean ratio " << num(r.mean_ratio) << "  median " << num(r.p50)
              << "  null rate " << num(r.null_rate) << "  " << num(r.wall_ms / 1000) << " s\n";
  };
  if (a.out.empty() || a.out == "-") {
    std::cout << experiment_csv_header() << '\n';
    run_experiment(spec, [&](const ExperimentRow& r) {
      std::cout << to_csv(r) << '\n' << std::flush;
      progress(r);
    });
    return;
  }
  // Progress goes to stderr; the file itself is written by the library.
  const auto rows = run_experiment_to_file(spec, a.out);
  for (const auto& r : rows) progress(r);
}

// ---- plot -----------------------------------------------------------------

struct PlotArgs {
  std::string csv;
  std::string out;
  std::string x_label = "parameter";
};

void cmd_plot(const PlotArgs& a, const Globals&) {
  std::cout << plot_experiment_csv(a.csv, a.out, a.x_label) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Two Path selection mechanisms: generation, influence, exact oracles and experiments"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals gl;
  app.add_option("--seed", gl.seed, "Master seed")->capture_default_str();
  app.add_option("--threads", gl.threads, "Worker threads (0 = all cores)")->capture_default_str();
  app.add_option("--format", gl.format, "Output format")->check(CLI::IsMember({"text", "csv"}))->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a graph file");
  gen_cmd->add_option("model", gen.model,
                      "ba, pqr, tree, forest, monotone-dag, dag, digraph, star-forest, grid, path, binary-tree, "
                      "example1, two-cycle")
      ->required();
  gen_cmd->add_option("-o,--out", gen.out, "Output file (default stdout)");
  gen_cmd->add_option("--n", gen.n, "Vertex count")->capture_default_str();
  gen_cmd->add_option("--sinks", gen.sinks, "Initial sinks (ba) or components (forest)")->capture_default_str();
  gen_cmd->add_option("--k", gen.k, "Out-degree of new vertices (ba)")->capture_default_str();
  gen_cmd->add_flag("--uniform", gen.uniform, "Uniform instead of preferential attachment (ba)");
  gen_cmd->add_option("--smoothing", gen.smoothing, "Additive attachment weight")->capture_default_str();
  gen_cmd->add_option("--p", gen.p, "New-vertex probability (pqr)");
  gen_cmd->add_option("--q", gen.q, "Reverse-edge probability (pqr)");
  gen_cmd->add_option("--r", gen.r, "New-edge probability (pqr)");
  gen_cmd->add_option("--avg-degree", gen.avg_degree, "Target average in-degree (pqr)");
  gen_cmd->add_option("--q-hat", gen.q_hat, "Reverse-edge share with --avg-degree (pqr)")->capture_default_str();
  gen_cmd->add_flag("--allow-q-ge-p", gen.allow_q_ge_p, "Accept q >= p (pqr)");
  gen_cmd->add_option("--density", gen.density, "Edge density (dag, digraph, monotone-dag)")->capture_default_str();
  gen_cmd->add_option("--rows", gen.rows, "Grid rows")->capture_default_str();
  gen_cmd->add_option("--cols", gen.cols, "Grid columns")->capture_default_str();
  gen_cmd->add_option("--star-order", gen.star_order, "Vertices in the star (star-forest)")->capture_default_str();
  gen_cmd->add_option("--isolated", gen.isolated, "Isolated vertices (star-forest)")->capture_default_str();
  gen_cmd->add_option("--depth", gen.depth, "Depth (binary-tree)")->capture_default_str();

  InfluenceArgs inf;
  auto* inf_cmd = app.add_subcommand("influence", "Per-vertex influence");
  inf_cmd->add_option("graph", inf.graph, "Graph file")->required();
  inf_cmd->add_option("--trials", inf.trials, "Monte Carlo trials")->capture_default_str();
  inf_cmd->add_flag("--monte-carlo", inf.monte_carlo, "Force Monte Carlo estimation");
  inf_cmd->add_option("--exact-cap", inf.exact_cap, "Largest cyclic graph solved exactly")->capture_default_str();

  SelectArgs sel;
  auto* sel_cmd = app.add_subcommand("select", "Run a mechanism once and print the transcript");
  sel_cmd->add_option("graph", sel.graph, "Graph file")->required();
  sel_cmd->add_option("--mechanism", sel.mechanism, "two-path, analytic, general-two-path")->capture_default_str();
  sel_cmd->add_option("--max-rounds", sel.max_rounds, "Round cap (0 = 10 n^2)");

  DistArgs dist;
  auto* dist_cmd = app.add_subcommand("dist", "Exact selection distribution");
  dist_cmd->add_option("graph", dist.graph, "Graph file")->required();
  dist_cmd->add_option("--mechanism", dist.mechanism, "two-path, analytic, general-two-path")->capture_default_str();
  dist_cmd->add_option("--cap", dist.cap, "Vertex cap for the marked-set solver (0 = default)");

  IcArgs ic;
  auto* ic_cmd = app.add_subcommand("ic-check", "Exhaustive deviation sweep, one CSV line per vertex");
  ic_cmd->add_option("graph", ic.graph, "Graph file")->required();
  ic_cmd->add_option("--mechanism", ic.mechanism, "two-path, analytic, general-two-path")->capture_default_str();
  ic_cmd->add_option("--class", ic.deviation_class, "stays-acyclic, creates-cycle, any")->capture_default_str();

  ExperimentArgs ex;
  auto* ex_cmd = app.add_subcommand("experiment", "Parameter sweep producing ratio CSV rows");
  ex_cmd->add_option("--preset", ex.preset, "sinks, out-degree, avg-degree, q-hat");
  ex_cmd->add_option("--generator", ex.generator, "ba or pqr")->capture_default_str();
  ex_cmd->add_option("--sweep", ex.sweep, "Swept parameter: n, sinks, k (ba); n, avg_degree, q_hat (pqr)");
  ex_cmd->add_option("--values", ex.values, "Grid values")->delimiter(',');
  ex_cmd->add_option("--n", ex.n, "Vertices per graph")->capture_default_str();
  ex_cmd->add_option("--sinks", ex.sinks, "Initial sinks (ba)")->capture_default_str();
  ex_cmd->add_option("--k", ex.k, "Out-degree (ba)")->capture_default_str();
  ex_cmd->add_option("--avg-degree", ex.avg_degree, "Average in-degree (pqr)")->capture_default_str();
  ex_cmd->add_option("--q-hat", ex.q_hat, "Reverse-edge share (pqr)")->capture_default_str();
  ex_cmd->add_option("--smoothing", ex.smoothing, "Additive attachment weight")->capture_default_str();
  ex_cmd->add_option("--graphs", ex.graphs, "Graphs per grid point")->capture_default_str();
  ex_cmd->add_option("--runs", ex.runs, "Mechanism runs per graph")->capture_default_str();
  ex_cmd->add_option("--mechanism", ex.mechanism, "Default: two-path for ba, general-two-path for pqr");
  ex_cmd->add_option("-o,--out", ex.out, "CSV output file (default stdout)");

  PlotArgs plot;
  auto* plot_cmd = app.add_subcommand("plot", "Render an experiment CSV as SVG");
  plot_cmd->add_option("csv", plot.csv, "Experiment CSV")->required();
  plot_cmd->add_option("-o,--out", plot.out, "SVG path (default: next to the CSV)");
  plot_cmd->add_option("--x-label", plot.x_label, "Axis label")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }
  if (gl.threads == 0) gl.threads = default_threads();

  try {
    if (*gen_cmd) cmd_gen(gen, gl);
    else if (*inf_cmd) cmd_influence(inf, gl);
    else if (*sel_cmd) cmd_select(sel, gl);
    else if (*dist_cmd) cmd_dist(dist, gl);
    else if (*ic_cmd) return cmd_ic_check(ic, gl);
    else if (*ex_cmd) cmd_experiment(ex, gl);
    else if (*plot_cmd) cmd_plot(plot, gl);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    if (e.kind() == ErrorKind::TooLargeForExact) {
      std::cerr << "hint: the graph is beyond the exact solver; use 'select' repeatedly or 'influence --monte-carlo'\n";
      return kExitCapacity;
    }
    return e.kind() == ErrorKind::InvalidParams ? kExitUsage : kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return 0;
}
