#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <thread>

#include "twopath/constructions.hpp"
#include "twopath/error.hpp"
#include "twopath/experiment.hpp"
#include "twopath/influence.hpp"
#include "twopath/svg_plot.hpp"

using namespace twopath;
namespace fs = std::filesystem;

namespace {

ExperimentSpec small_ba() {
  ExperimentSpec s;
  s.generator = GeneratorKind::BaDag;
  s.n = 300;
  s.sinks = 10;
  s.k = 3;
  s.swept = "sinks";
  s.values = {5, 20};
  s.graphs_per_point = 4;
  s.runs_per_graph = 20;
  s.seed = 11;
  return s;
}

// CSV with the wall_ms column dropped.
std::string without_wall(const std::vector<ExperimentRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    std::string line = to_csv(r);
    out += line.substr(0, line.rfind(',')) + "\n";
  }
  return out;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "twopath_test_experiment";
  fs::create_directories(dir);
  fs::remove(dir / name);
  return dir / name;
}

bool throws_kind(ErrorKind kind, const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("quantile interpolates linearly") {
  CHECK(quantile({3, 1, 2}, 0.5) == 2);
  CHECK(quantile({1, 2, 3, 4}, 0.5) == doctest::Approx(2.5));
  CHECK(quantile({0, 10}, 0.1) == doctest::Approx(1.0));
  CHECK(quantile({7}, 0.9) == 7);
  CHECK(quantile({1, 5}, 0.0) == 1);
  CHECK(quantile({1, 5}, 1.0) == 5);
}

TEST_CASE("trend check tolerates the allowed inversions") {
  CHECK(follows_trend({1, 2, 3, 4}, Trend::NonDecreasing));
  CHECK(follows_trend({1, 2, 1.5, 4}, Trend::NonDecreasing));
  CHECK_FALSE(follows_trend({1, 0.5, 3, 2}, Trend::NonDecreasing));
  CHECK(follows_trend({1, 0.5, 3, 2}, Trend::NonDecreasing, 2));
  CHECK(follows_trend({4, 3, 3, 1}, Trend::NonIncreasing, 0));
  CHECK_FALSE(follows_trend({1, 2}, Trend::NonIncreasing, 0));
  CHECK(follows_trend({}, Trend::NonIncreasing, 0));
}

TEST_CASE("spec validation") {
  auto s = small_ba();
  CHECK_NOTHROW(s.validate());
  s.swept = "q_hat";
  CHECK(throws_kind(ErrorKind::InvalidParams, [&] { s.validate(); }));
  s = small_ba();
  s.values.clear();
  CHECK(throws_kind(ErrorKind::InvalidParams, [&] { s.validate(); }));
  s = small_ba();
  s.graphs_per_point = 0;
  CHECK(throws_kind(ErrorKind::InvalidParams, [&] { s.validate(); }));
  s = small_ba();
  s.runs_per_graph = 0;
  CHECK(throws_kind(ErrorKind::InvalidParams, [&] { s.validate(); }));
  s = small_ba();
  s.mechanism = Mechanism::Analytic;
  CHECK(throws_kind(ErrorKind::TooLargeForExact, [&] { s.validate(); }));
  s.swept = "n";
  s.values = {8, 40};
  CHECK(throws_kind(ErrorKind::TooLargeForExact, [&] { s.validate(); }));
  s.values = {8, 10};
  s.sinks = 2;
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("CSV schema and round trip") {
  CHECK(experiment_csv_header() == "param,mean_ratio,p10,p50,p90,null_rate,n,graphs,runs,seed,wall_ms");
  ExperimentRow r;
  r.param = 0.1;
  r.mean_ratio = 3.14159265;
  r.p10 = 1.5;
  r.p50 = 2.25;
  r.p90 = std::numeric_limits<double>::infinity();
  r.null_rate = 0.0123456789;
  r.n = 10000;
  r.graphs = 100;
  r.runs = 100;
  r.seed = 42;
  r.wall_ms = 1234.5;
  const std::string line = to_csv(r);
  CHECK(line == "0.1,3.14159,1.5,2.25,inf,0.0123457,10000,100,100,42,1234.5");
  const auto back = parse_experiment_csv(experiment_csv_header() + "\n" + line + "\n");
  REQUIRE(back.size() == 1);
  CHECK(std::isinf(back[0].p90));
  CHECK(back[0].n == 10000);
  CHECK(back[0].seed == 42);
  CHECK(to_csv(back[0]) == line);
  CHECK(throws_kind(ErrorKind::Parse, [] { parse_experiment_csv("bogus\n1,2\n"); }));
  CHECK(throws_kind(ErrorKind::Parse, [&] { parse_experiment_csv(experiment_csv_header() + "\n1,2,3\n"); }));
  CHECK(parse_experiment_csv(experiment_csv_header() + "\n").empty());
}

TEST_CASE("experiment rows are deterministic and independent of the worker count") {
  auto spec = small_ba();
  const auto a = run_experiment(spec);
  spec.threads = 4;
  const auto b = run_experiment(spec);
  CHECK(without_wall(a) == without_wall(b));
  REQUIRE(a.size() == 2);
  for (const auto& row : a) {
    CHECK(row.mean_ratio >= 1.0);
    CHECK(row.p10 <= row.p50);
    CHECK(row.p50 <= row.p90);
    CHECK(row.null_rate >= 0.0);
    CHECK(row.null_rate <= 1.0);
    CHECK(row.graphs == 4);
    CHECK(row.runs == 20);
    CHECK(row.n == 300);
    CHECK(row.seed == 11);
  }
  CHECK(a[0].param == 5);
  CHECK(a[1].param == 20);
  spec.seed = 12;
  CHECK(without_wall(run_experiment(spec)) != without_wall(a));
}

TEST_CASE("rows stream in grid order") {
  auto spec = small_ba();
  spec.values = {2, 4, 8};
  std::vector<double> seen;
  run_experiment(spec, [&](const ExperimentRow& r) { seen.push_back(r.param); });
  CHECK(seen == std::vector<double>{2, 4, 8});
}

TEST_CASE("experiment file drops the incomplete marker on success") {
  const auto path = scratch("ok.csv");
  const auto rows = run_experiment_to_file(small_ba(), path.string());
  const std::string text = slurp(path);
  CHECK(text.rfind(experiment_csv_header(), 0) == 0);
  CHECK(text.find("incomplete") == std::string::npos);
  CHECK(without_wall(parse_experiment_csv(text)) == without_wall(rows));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST_CASE("failed experiment leaves the incomplete marker") {
  const auto path = scratch("bad.csv");
  auto spec = small_ba();
  spec.values = {5, 400};  // second point has more sinks than vertices
  CHECK(throws_kind(ErrorKind::InvalidParams, [&] { run_experiment_to_file(spec, path.string()); }));
  const std::string text = slurp(path);
  CHECK(text.rfind("# status: incomplete", 0) == 0);
  const auto partial = parse_experiment_csv(text);
  REQUIRE(partial.size() == 1);
  CHECK(partial[0].param == 5);
  CHECK(throws_kind(ErrorKind::Parse, [&] { plot_experiment_csv(path.string()); }));
}

TEST_CASE("p/q/r experiment uses the general mechanism on cyclic graphs") {
  ExperimentSpec s;
  s.generator = GeneratorKind::Pqr;
  s.n = 200;
  s.avg_degree = 4;
  s.q_hat = 0.2;
  s.swept = "q_hat";
  s.values = {0.0, 0.3};
  s.graphs_per_point = 3;
  s.runs_per_graph = 10;
  s.mechanism = Mechanism::GeneralTwoPath;
  s.seed = 3;
  const auto rows = run_experiment(s);
  REQUIRE(rows.size() == 2);
  for (const auto& r : rows) CHECK(r.mean_ratio >= 1.0);
  CHECK_FALSE(run_graph_trial(s, 1, 0).exact_influence);
  // Average degree 1 with q_hat = 0 leaves only new-vertex events: a tree.
  s.avg_degree = 1;
  s.q_hat = 0;
  s.swept = "n";
  s.values = {200};
  CHECK(run_graph_trial(s, 0, 0).exact_influence);
}

TEST_CASE("cyclic influence is pooled from two estimates") {
  // A 2-cycle feeding a long path: the cycle vertices clearly dominate.
  std::vector<Edge> edges{{0, 1}, {1, 0}};
  for (VertexId v = 2; v < 40; ++v) edges.push_back({v, v - 1});
  const DiGraph g = build_graph(40, edges);
  bool exact = true;
  const auto inf = experiment_influence(g, 5, &exact);
  CHECK_FALSE(exact);
  const auto truth = influence_exact_general(g, 40);
  double total = 0, expected = 0;
  for (VertexId v = 0; v < 40; ++v) total += inf[v], expected += truth.value(v);
  CHECK(total == doctest::Approx(expected).epsilon(0.05));
  CHECK(inf[1] > inf[2]);
}

TEST_CASE("flat cyclic influence is reported as unstable") {
  // Disjoint 2-cycles: every vertex has influence 2, so the two estimates'
  // argmaxes are arbitrary and often disagree.
  std::vector<Edge> edges;
  const std::size_t n = 60;
  for (VertexId v = 0; v < n; v += 2) edges.push_back({v, v + 1}), edges.push_back({v + 1, v});
  const DiGraph g = build_graph(n, edges);
  std::size_t unstable = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    try {
      experiment_influence(g, seed);
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::Unstable);
      CHECK(std::string(e.what()).find("top") != std::string::npos);
      ++unstable;
    }
  }
  CHECK(unstable > 0);
}

TEST_CASE("plot rendering") {
  std::vector<ExperimentRow> rows(3);
  for (std::size_t i = 0; i < 3; ++i) {
    rows[i].param = 50.0 * static_cast<double>(i + 1);
    rows[i].mean_ratio = 2.0 + static_cast<double>(i);
    rows[i].p10 = rows[i].mean_ratio - 0.5;
    rows[i].p50 = rows[i].mean_ratio;
    rows[i].p90 = rows[i].mean_ratio + 0.5;
  }
  SUBCASE("trend in the title and a band") {
    const std::string svg = render_ratio_plot(rows, "Sinks");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("Ratio vs. Sinks (non-decreasing)") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("<polyline") != std::string::npos);
  }
  SUBCASE("single row: one marker, no band") {
    const std::string svg = render_ratio_plot({rows[0]}, "Sinks");
    CHECK(svg.find("<polygon") == std::string::npos);
    std::size_t circles = 0;
    for (auto pos = svg.find("<circle"); pos != std::string::npos; pos = svg.find("<circle", pos + 1)) ++circles;
    CHECK(circles == 1);
  }
  SUBCASE("two points") {
    rows.pop_back();
    CHECK(render_ratio_plot(rows, "k").find("(non-decreasing)") != std::string::npos);
    for (auto& r : rows) r.mean_ratio = 2;
    CHECK(render_ratio_plot(rows, "k").find("(flat)") != std::string::npos);
  }
  SUBCASE("decreasing") {
    std::swap(rows[0].mean_ratio, rows[2].mean_ratio);
    CHECK(render_ratio_plot(rows, "k").find("(non-increasing)") != std::string::npos);
  }
  CHECK(throws_kind(ErrorKind::Parse, [] { render_ratio_plot({}, "x"); }));
}

TEST_CASE("plot files") {
  const auto csv = scratch("fig.csv");
  {
    std::ofstream out(csv);
    out << experiment_csv_header() << "\n"
        << "100,3,2,3,4,0,1000,10,10,1,5\n"
        << "50,2,1.5,2,2.5,0,1000,10,10,1,5\n";
  }
  const auto svg = csv.parent_path() / "fig.svg";
  fs::remove(svg);
  CHECK(plot_experiment_csv(csv.string(), {}, "Sinks") == svg.string());
  CHECK(slurp(svg).find("non-decreasing") != std::string::npos);

  const auto empty = scratch("empty.csv");
  { std::ofstream out(empty); }
  const auto empty_svg = empty.parent_path() / "empty.svg";
  fs::remove(empty_svg);
  CHECK(throws_kind(ErrorKind::Parse, [&] { plot_experiment_csv(empty.string()); }));
  CHECK_FALSE(fs::exists(empty_svg));

  const auto header_only = scratch("header.csv");
  { std::ofstream(header_only) << experiment_csv_header() << "\n"; }
  CHECK(throws_kind(ErrorKind::Parse, [&] { plot_experiment_csv(header_only.string()); }));
  CHECK_FALSE(fs::exists(header_only.parent_path() / "header.svg"));

  const auto malformed = scratch("malformed.csv");
  { std::ofstream(malformed) << experiment_csv_header() << "\nx,y\n"; }
  CHECK(throws_kind(ErrorKind::Parse, [&] { plot_experiment_csv(malformed.string()); }));
}

TEST_CASE("reduced-scale throughput") {
  // Full scale: 5 points x 100 graphs x 100 runs at n = 10000 in 30 minutes on
  // 8 cores. Here: n = 2000 and 10 graphs per point, budget scaled by vertices,
  // graphs and the available cores.
  ExperimentSpec s;
  s.n = 2000;
  s.k = 10;
  s.swept = "sinks";
  s.values = {10, 20, 40, 80, 160};
  s.graphs_per_point = 10;
  s.runs_per_graph = 100;
  const unsigned cores = std::max(1u, std::thread::hardware_concurrency());
  s.threads = cores;
  const double budget_s = 1800.0 * (2000.0 / 10000.0) * (10.0 / 100.0) * (8.0 / std::min(cores, 8u));
  const auto t0 = std::chrono::steady_clock::now();
  const auto rows = run_experiment(s);
  const double took = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  MESSAGE("reduced sweep took " << took << " s, budget " << budget_s << " s");
  CHECK(rows.size() == 5);
  CHECK(took < budget_s);
}
