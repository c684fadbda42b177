#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "twopath/digraph.hpp"
#include "twopath/influence.hpp"
#include "twopath/rational.hpp"

namespace twopath {

struct SelectionDistribution {
  std::vector<Rational> probs;
  Rational null_prob;

  Rational total() const;
};

struct WeightedPath {
  std::vector<VertexId> vertices;
  std::uint64_t mask = 0;
  Rational probability;  // given its start
};

// Every path the random-path sampler can produce from `start`, with its
// probability. Requires n <= 64.
std::vector<WeightedPath> enumerate_random_paths(const DiGraph& g, VertexId start);

// Law of a single round of the Two Path loop with uniform starts.
struct RoundLaw {
  // first_meeting[z]: probability that the paths meet and z is the first
  // vertex of P1 (in P1 order) that lies on P2.
  std::vector<Rational> first_meeting;
  // (P1 | P2 vertex mask, probability) over disjoint pairs, one entry per mask.
  std::vector<std::pair<std::uint64_t, Rational>> disjoint;

  Rational meeting_mass() const;
};

RoundLaw one_round_law(const DiGraph& g);

inline constexpr std::size_t kDefaultExactTwoPathCap = 9;
inline constexpr std::size_t kDefaultExactGeneralCap = 7;

// Exact law of the Two Path mechanism with no round cap. The marked set is the
// state of a Markov chain on the subset lattice; self-transitions are removed
// by dividing by (1 - p_stay). Trees bypass the cap because every pair of
// paths meets in the first round. Throws Error{TooLargeForExact}.
SelectionDistribution exact_two_path_distribution(const DiGraph& g,
                                                  std::size_t cap = kDefaultExactTwoPathCap);

// Average of the Two Path law over the residual graphs of all n! orderings.
SelectionDistribution exact_general_two_path_distribution(const DiGraph& g,
                                                          std::size_t cap = kDefaultExactGeneralCap);

struct ExpectedInfluence {
  Rational expected;               // sum_v I(v) Pr(v), I(null) = 0
  Rational max_influence;          // I*
  std::optional<Rational> ratio;   // I*/E; empty when E = 0 (unbounded)
};

ExpectedInfluence expected_influence(const SelectionDistribution& dist, const InfluenceTable& inf);

struct TreeScore {
  std::int64_t f_value = 0;
};

// f(T) = sum_{v != root} I(v)^2 (I(F(v)) - I(v)). Throws Error{NotATree}.
TreeScore tree_f_score(const DiGraph& tree);

}  // namespace twopath
