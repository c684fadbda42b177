#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/random_path.hpp"
#include "twopath/rng.hpp"

namespace twopath {

// A selected vertex, or the null outcome.
class Outcome {
 public:
  static Outcome null() { return Outcome(); }
  static Outcome selected(VertexId v) { return Outcome(v); }

  bool is_null() const noexcept { return !vertex_.has_value(); }
  VertexId vertex() const { return *vertex_; }
  const std::optional<VertexId>& maybe_vertex() const noexcept { return vertex_; }

  friend bool operator==(const Outcome&, const Outcome&) = default;

 private:
  Outcome() = default;
  explicit Outcome(VertexId v) : vertex_(v) {}
  std::optional<VertexId> vertex_;
};

enum class RunEnd {
  Selected,      // paths met at an unmarked vertex
  MetMarked,     // paths met at a marked vertex
  AllMarked,     // loop left with U = V
  RoundCap,      // max_rounds exhausted
};

const char* to_string(RunEnd end);

struct RoundRecord {
  VertexId x = 0;
  std::vector<VertexId> first_path;
  VertexId y = 0;
  std::vector<VertexId> second_path;
  std::optional<VertexId> meeting;  // first vertex of P1 (in P1 order) lying on P2
  std::size_t marked_after = 0;     // |U| once the round is done
};

struct MechanismTranscript {
  std::uint64_t seed = 0;
  std::vector<RoundRecord> rounds;
  Outcome result = Outcome::null();
  RunEnd end = RunEnd::AllMarked;
  // General mechanism only: vertices in sampled order; edge (u, v) survives
  // iff u comes before v.
  std::vector<VertexId> ordering;
};

// One line per round; see README for the layout.
void write_transcript(std::ostream& out, const MechanismTranscript& t);
std::string transcript_to_string(const MechanismTranscript& t);

inline std::uint64_t default_max_rounds(std::size_t n) { return 10ull * n * n; }

// Holds the per-run scratch (marks, path buffers) so many runs can share it.
class TwoPathRunner {
 public:
  // max_rounds == 0 means default_max_rounds(g.size()).
  Outcome run(const DiGraph& g, Rng& rng, std::uint64_t max_rounds = 0,
              MechanismTranscript* transcript = nullptr);

  RunEnd last_end() const noexcept { return last_end_; }
  std::uint64_t last_rounds() const noexcept { return last_rounds_; }

 private:
  void prepare(std::size_t n);

  PathSampler sampler_;
  std::vector<VertexId> first_, second_;
  std::vector<std::uint32_t> marked_;
  std::vector<std::uint32_t> on_second_;
  std::uint32_t run_epoch_ = 0;
  std::uint32_t round_epoch_ = 0;
  RunEnd last_end_ = RunEnd::AllMarked;
  std::uint64_t last_rounds_ = 0;
};

// Random vertex order, drop every edge pointing backwards in it, then run the
// Two Path loop on the (acyclic) residual graph.
class GeneralTwoPathRunner {
 public:
  Outcome run(const DiGraph& g, Rng& rng, std::uint64_t max_rounds = 0,
              MechanismTranscript* transcript = nullptr);

  RunEnd last_end() const noexcept { return inner_.last_end(); }

 private:
  TwoPathRunner inner_;
  std::vector<VertexId> order_;
};

// Drop edges (u, v) with rank(u) > rank(v) where rank is the position in
// `ordering`.
DiGraph residual_graph(const DiGraph& g, std::span<const VertexId> ordering);

MechanismTranscript run_two_path(const DiGraph& g, std::uint64_t seed, std::uint64_t max_rounds = 0);
MechanismTranscript run_general_two_path(const DiGraph& g, std::uint64_t seed,
                                         std::uint64_t max_rounds = 0);

}  // namespace twopath
