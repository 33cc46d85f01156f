#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sorex/graph.hpp"
#include "sorex/rng.hpp"

namespace sorex {

enum class ExploitationStrategy { kRsF1, kSpr, kDpr, kPayout };
enum class RandomMode { kSelect, kWalk };

struct RunningMean {
  double sum = 0.0;
  std::int64_t count = 0;

  double mean_or(double fallback) const {
    return count > 0 ? sum / static_cast<double>(count) : fallback;
  }
};

// Per-run bandit state. visit_counts holds N_t(v) (fractional: each of the
// B daily paths contributes 1/B per occurrence); rs_f1 holds the running
// daily-F1 average that backs the RS-F1 exploitation reward.
struct ExplorationState {
  int day = 0;
  std::vector<double> visit_counts;
  std::vector<RunningMean> rs_f1;

  explicit ExplorationState(std::size_t n_nodes = 0)
      : visit_counts(n_nodes, 0.0), rs_f1(n_nodes) {}
};

// Read-only reward context for one scoring pass. Exactly the caches the
// active strategy needs must be present; the others may stay null.
struct ExploitContext {
  ExploitationStrategy strategy = ExploitationStrategy::kRsF1;
  const ExplorationState* state = nullptr;        // RS-F1
  const std::vector<double>* social_rank = nullptr;    // static PageRank
  const std::vector<double>* activity_rank = nullptr;  // daily PageRank
  const std::vector<double>* payout_norm = nullptr;    // cumulative, [0,1]
};

// Exploitation reward Q_t(v): RS-F1 mean (0 before any record), a cached
// PageRank score, or the day-normalized cumulative payout.
double exploitation_value(NodeId v, const ExploitContext& ctx);

// Exploration utility sqrt(ln N_t(current) / (N_t(v) + 1)). Counts below 1
// (unvisited nodes, or fractional 1/B masses) contribute no exploration
// signal: the numerator is clamped at ln 1 = 0, which keeps the function
// total and real-valued.
double exploration_utility(double n_current, double n_candidate);

double ucb1_score(NodeId v, NodeId current, const ExploitContext& ctx,
                  const ExplorationState& state, double lambda);

struct BanditConfig {
  int beam_width = 3;  // B
  int depth = 10;      // L
  double lambda = 1.0;
  double epsilon = 0.7;
  // Algorithm branch orientation: by default a draw below epsilon takes the
  // greedy arm and the rest explore randomly. Flipping makes epsilon the
  // random-exploration probability instead.
  bool egreedy_flip_branch = false;
  std::uint64_t seed = 0;
};

struct FriendSelection {
  NodeId origin = 0;
  std::vector<std::vector<NodeId>> paths;  // B paths, each of length <= L
  // Set when the origin had no out-neighbors at all.
  bool empty_neighborhood = false;
};

// Beam search over UCB1 scores. Per depth every admissible extension of
// every live path is scored as UCB1(v) + T_b (the path's accumulated score)
// and the global top extensions, ties broken by smaller user id, become the
// new paths. Identical paths pool their candidates once; a path with no
// admissible continuation is frozen at its current length. Extensions never
// revisit the origin or a node already on their own path. Deterministic.
FriendSelection select_friends_mcts(NodeId u, const BanditConfig& cfg,
                                    const ExploitContext& ctx,
                                    const ExplorationState& state,
                                    const SocialGraph& g);

// B independent walks; per step a uniform draw below epsilon takes the
// greedy argmax of Q over admissible neighbors, otherwise a uniform random
// admissible neighbor (orientation flips with cfg.egreedy_flip_branch).
FriendSelection select_friends_egreedy(NodeId u, const BanditConfig& cfg,
                                       const ExploitContext& ctx,
                                       const SocialGraph& g, Rng& rng);

// Random baselines: kSelect draws up to `depth` distinct users uniformly
// from all nodes != u per path; kWalk performs a uniform random walk with
// the same no-revisit rule as the bandit selectors.
FriendSelection select_friends_random(NodeId u, RandomMode mode, int beams,
                                      int depth, const SocialGraph& g,
                                      Rng& rng);

// N_t(v) += 1/B for every occurrence of v across the B paths.
void update_visit_counts(const FriendSelection& selection,
                         ExplorationState& state);

// Records a user's daily F1 into the RS-F1 running mean. day_f1 outside
// [0,1] raises.
void record_rs_f1(NodeId u, double day_f1, ExplorationState& state);

// Pre-day-1 state: every user gets `beams` random uniformly-selected paths
// (the same draw as RandomMode::kSelect) and the visit counts are seeded
// with 1/B per occurrence. Deterministic in `seed`.
void initialize_exploration(ExplorationState& state, const SocialGraph& g,
                            int beams, int depth, std::uint64_t seed);

}  // namespace sorex
