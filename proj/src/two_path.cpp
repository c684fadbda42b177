#include "twopath/two_path.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace twopath {

const char* to_string(RunEnd end) {
  switch (end) {
    case RunEnd::Selected: return "selected";
    case RunEnd::MetMarked: return "met-marked";
    case RunEnd::AllMarked: return "all-marked";
    case RunEnd::RoundCap: return "round-cap";
  }
  return "?";
}

namespace {

void write_list(std::ostream& out, const std::vector<VertexId>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
}

// Bumps an epoch counter, clearing the stamps when it wraps.
void next_epoch(std::uint32_t& epoch, std::vector<std::uint32_t>& stamps) {
  if (++epoch == 0) {
    std::fill(stamps.begin(), stamps.end(), 0);
    epoch = 1;
  }
}

}  // namespace

void write_transcript(std::ostream& out, const MechanismTranscript& t) {
  out << "seed " << t.seed << '\n';
  if (!t.ordering.empty()) {
    out << "ordering";
    for (VertexId v : t.ordering) out << ' ' << v;
    out << '\n';
  }
  for (std::size_t i = 0; i < t.rounds.size(); ++i) {
    const auto& r = t.rounds[i];
    out << "round " << i + 1 << " x=" << r.x << " p1=";
    write_list(out, r.first_path);
    out << " y=" << r.y << " p2=";
    write_list(out, r.second_path);
    out << " meet=";
    if (r.meeting) out << *r.meeting; else out << '-';
    out << " marked=" << r.marked_after << '\n';
  }
  out << "result ";
  if (t.result.is_null()) out << "null"; else out << "selected " << t.result.vertex();
  out << " end=" << to_string(t.end) << " rounds=" << t.rounds.size() << '\n';
}

std::string transcript_to_string(const MechanismTranscript& t) {
  std::ostringstream os;
  write_transcript(os, t);
  return os.str();
}

void TwoPathRunner::prepare(std::size_t n) {
  if (marked_.size() < n) {
    marked_.resize(n, 0);
    on_second_.resize(n, 0);
  }
  sampler_.reserve(n);
  next_epoch(run_epoch_, marked_);
}

Outcome TwoPathRunner::run(const DiGraph& g, Rng& rng, std::uint64_t max_rounds, MechanismTranscript* transcript) {
  const std::size_t n = g.size();
  if (max_rounds == 0) max_rounds = default_max_rounds(n);
  prepare(n);
  if (transcript) transcript->rounds.clear();

  auto finish = [&](RunEnd end, Outcome outcome, std::uint64_t rounds) {
    last_end_ = end;
    last_rounds_ = rounds;
    if (transcript) {
      transcript->end = end;
      transcript->result = outcome;
    }
    return outcome;
  };

  std::size_t marked = 0;
  for (std::uint64_t round = 0;; ++round) {
    if (marked == n) return finish(RunEnd::AllMarked, Outcome::null(), round);
    if (round == max_rounds) return finish(RunEnd::RoundCap, Outcome::null(), round);

    const auto x = static_cast<VertexId>(uniform_index(rng, n));
    sampler_.sample(g, x, rng, first_);
    const auto y = static_cast<VertexId>(uniform_index(rng, n));
    sampler_.sample(g, y, rng, second_);

    next_epoch(round_epoch_, on_second_);
    for (VertexId v : second_) on_second_[v] = round_epoch_;
    std::optional<VertexId> meeting;
    for (VertexId v : first_) {
      if (on_second_[v] == round_epoch_) {
        meeting = v;
        break;
      }
    }

    if (!meeting) {
      for (const auto* path : {&first_, &second_})
        for (VertexId v : *path)
          if (marked_[v] != run_epoch_) {
            marked_[v] = run_epoch_;
            ++marked;
          }
    }
    if (transcript) transcript->rounds.push_back({x, first_, y, second_, meeting, marked});
    if (meeting) {
      if (marked_[*meeting] == run_epoch_) return finish(RunEnd::MetMarked, Outcome::null(), round + 1);
      return finish(RunEnd::Selected, Outcome::selected(*meeting), round + 1);
    }
  }
}

DiGraph residual_graph(const DiGraph& g, std::span<const VertexId> ordering) {
  std::vector<std::uint32_t> rank(g.size());
  for (std::size_t i = 0; i < ordering.size(); ++i) rank[ordering[i]] = static_cast<std::uint32_t>(i);
  return g.filter_edges([&](VertexId u, VertexId v) { return rank[u] < rank[v]; });
}

Outcome GeneralTwoPathRunner::run(const DiGraph& g, Rng& rng, std::uint64_t max_rounds,
                                  MechanismTranscript* transcript) {
  order_.resize(g.size());
  std::iota(order_.begin(), order_.end(), VertexId{0});
  std::shuffle(order_.begin(), order_.end(), rng);
  const DiGraph residual = residual_graph(g, order_);
  if (!is_dag(residual)) throw std::logic_error("residual graph of an ordering has a cycle");
  if (transcript) transcript->ordering = order_;
  return inner_.run(residual, rng, max_rounds, transcript);
}

MechanismTranscript run_two_path(const DiGraph& g, std::uint64_t seed, std::uint64_t max_rounds) {
  MechanismTranscript t;
  t.seed = seed;
  Rng rng = make_stream(seed);
  TwoPathRunner runner;
  runner.run(g, rng, max_rounds, &t);
  return t;
}

MechanismTranscript run_general_two_path(const DiGraph& g, std::uint64_t seed, std::uint64_t max_rounds) {
  MechanismTranscript t;
  t.seed = seed;
  Rng rng = make_stream(seed);
  GeneralTwoPathRunner runner;
  runner.run(g, rng, max_rounds, &t);
  return t;
}

}  // namespace twopath
