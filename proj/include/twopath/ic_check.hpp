#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/exact.hpp"

namespace twopath {

enum class Mechanism { TwoPath, Analytic, GeneralTwoPath };
enum class DeviationClass { StaysAcyclic, CreatesCycle, AnyGraph };

const char* to_string(Mechanism m);
const char* to_string(DeviationClass c);
Mechanism parse_mechanism(const std::string& text);
DeviationClass parse_deviation_class(const std::string& text);

// Exact distributions with a memo keyed by (n, adjacency bits), shared across
// the many graphs an IC sweep rebuilds. Graphs above 8 vertices bypass the memo.
class ExactMechanismOracle {
 public:
  struct Caps {
    std::size_t two_path = kDefaultExactTwoPathCap;
    std::size_t general = kDefaultExactGeneralCap;
    std::size_t analytic = 12;
  };

  ExactMechanismOracle() = default;
  explicit ExactMechanismOracle(Caps caps) : caps_(caps) {}

  const SelectionDistribution& distribution(const DiGraph& g, Mechanism m);

  std::size_t memo_size() const { return memo_.size(); }

 private:
  SelectionDistribution compute(const DiGraph& g, Mechanism m);

  Caps caps_;
  std::unordered_map<std::uint64_t, SelectionDistribution> memo_;
  SelectionDistribution unmemoized_;
};

struct DeviationReport {
  VertexId vertex = 0;
  DeviationClass deviation_class = DeviationClass::AnyGraph;
  Rational baseline;
  // Best out-set found in the class; empty optional when the class holds no
  // deviation for this vertex (then best == baseline and gain == 0).
  std::optional<std::vector<VertexId>> best_followees;
  Rational best;
  Rational gain;
  std::size_t deviations_checked = 0;
};

// For every vertex and every out-edge subset in `cls` other than the truthful
// one, the vertex's own selection probability; the report keeps the maximum.
// IC holds iff every gain <= 0.
std::vector<DeviationReport> verify_ic(const DiGraph& g, Mechanism m, DeviationClass cls,
                                       ExactMechanismOracle& oracle);
std::vector<DeviationReport> verify_ic(const DiGraph& g, Mechanism m, DeviationClass cls);

// CSV: vertex,class,baseline,best,gain
std::string deviation_csv_header();
std::string to_csv(const DeviationReport& r);

}  // namespace twopath
