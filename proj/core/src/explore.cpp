#include "sorex/explore.hpp"

#include <algorithm>
#include <cmath>

#include "sorex/error.hpp"

namespace sorex {

double exploitation_value(NodeId v, const ExploitContext& ctx) {
  switch (ctx.strategy) {
    case ExploitationStrategy::kRsF1:
      if (ctx.state == nullptr) {
        throw ConfigError("exploitation_value: RS-F1 needs the exploration state");
      }
      return ctx.state->rs_f1.at(v).mean_or(0.0);
    case ExploitationStrategy::kSpr:
      if (ctx.social_rank == nullptr) {
        throw ConfigError("exploitation_value: SPR needs the social PageRank cache");
      }
      return ctx.social_rank->at(v);
    case ExploitationStrategy::kDpr:
      if (ctx.activity_rank == nullptr) {
        throw ConfigError("exploitation_value: DPR needs the activity PageRank cache");
      }
      return ctx.activity_rank->at(v);
    case ExploitationStrategy::kPayout:
      if (ctx.payout_norm == nullptr) {
        throw ConfigError("exploitation_value: payout strategy needs payout data");
      }
      return ctx.payout_norm->at(v);
  }
  throw ConfigError("exploitation_value: unknown strategy");
}

double exploration_utility(double n_current, double n_candidate) {
  const double numerator = n_current > 1.0 ? std::log(n_current) : 0.0;
  return std::sqrt(numerator / (n_candidate + 1.0));
}

double ucb1_score(NodeId v, NodeId current, const ExploitContext& ctx,
                  const ExplorationState& state, double lambda) {
  const double q = exploitation_value(v, ctx);
  const double u = exploration_utility(state.visit_counts.at(current),
                                       state.visit_counts.at(v));
  return q + lambda * u;
}

namespace {

bool on_path(const std::vector<NodeId>& path, NodeId v) {
  return std::find(path.begin(), path.end(), v) != path.end();
}

struct Beam {
  std::vector<NodeId> path;
  double total = 0.0;  // accumulated UCB1 score T_b
  bool frozen = false;
};

struct Extension {
  double score = 0.0;
  NodeId node = 0;
  std::size_t parent = 0;  // index into the distinct-parent list
};

}  // namespace

FriendSelection select_friends_mcts(NodeId u, const BanditConfig& cfg,
                                    const ExploitContext& ctx,
                                    const ExplorationState& state,
                                    const SocialGraph& g) {
  if (cfg.beam_width < 1) throw ConfigError("beam_width must be >= 1");
  if (cfg.depth < 1) throw ConfigError("depth must be >= 1");
  if (cfg.lambda < 0.0) throw ConfigError("lambda must be >= 0");
  if (u >= g.node_count()) throw DataError("select_friends_mcts: unknown user");

  const std::size_t beam_count = static_cast<std::size_t>(cfg.beam_width);
  std::vector<Beam> beams(beam_count);

  FriendSelection out;
  out.origin = u;
  out.empty_neighborhood = g.neighbors(u).empty();

  for (int depth = 0; depth < cfg.depth; ++depth) {
    // Identical live paths share one candidate pool entry, so the global
    // top-k below never selects the same resulting path twice.
    std::vector<std::size_t> parents;  // beam index of first slot per distinct path
    std::vector<std::size_t> slot_parent(beam_count, SIZE_MAX);
    for (std::size_t s = 0; s < beam_count; ++s) {
      if (beams[s].frozen) continue;
      std::size_t found = SIZE_MAX;
      for (std::size_t p : parents) {
        if (beams[p].path == beams[s].path) {
          found = p;
          break;
        }
      }
      if (found == SIZE_MAX) {
        parents.push_back(s);
        found = s;
      }
      slot_parent[s] = found;
    }
    if (parents.empty()) break;

    std::vector<Extension> pool;
    std::vector<bool> parent_dead(parents.size(), false);
    for (std::size_t pi = 0; pi < parents.size(); ++pi) {
      const Beam& b = beams[parents[pi]];
      const NodeId tail = b.path.empty() ? u : b.path.back();
      bool any = false;
      for (NodeId v : g.neighbors(tail)) {
        if (v == u || on_path(b.path, v)) continue;
        pool.push_back({b.total + ucb1_score(v, tail, ctx, state, cfg.lambda),
                        v, pi});
        any = true;
      }
      parent_dead[pi] = !any;
    }

    // Freeze every slot whose path has no admissible continuation.
    std::size_t live = 0;
    for (std::size_t s = 0; s < beam_count; ++s) {
      if (beams[s].frozen) continue;
      const std::size_t pi =
          static_cast<std::size_t>(std::find(parents.begin(), parents.end(),
                                             slot_parent[s]) -
                                   parents.begin());
      if (parent_dead[pi]) {
        beams[s].frozen = true;
      } else {
        ++live;
      }
    }
    if (pool.empty() || live == 0) break;

    std::sort(pool.begin(), pool.end(), [](const Extension& a, const Extension& b) {
      if (a.score != b.score) return a.score > b.score;
      if (a.node != b.node) return a.node < b.node;
      return a.parent < b.parent;
    });

    // The top `live` extensions become the new live paths; when fewer
    // distinct extensions exist than live slots, the leaders are reused so
    // the selection always keeps B paths.
    std::vector<Beam> next(beam_count);
    std::size_t rank = 0;
    for (std::size_t s = 0; s < beam_count; ++s) {
      if (beams[s].frozen) {
        next[s] = beams[s];
        continue;
      }
      const Extension& e = pool[rank % pool.size()];
      ++rank;
      const Beam& parent = beams[parents[e.parent]];
      next[s].path = parent.path;
      next[s].path.push_back(e.node);
      next[s].total = e.score;
      next[s].frozen = false;
    }
    beams = std::move(next);
  }

  out.paths.reserve(beam_count);
  for (auto& b : beams) out.paths.push_back(std::move(b.path));
  return out;
}

namespace {

// Admissible neighbors of `tail`: not the origin, not already on the path.
std::vector<NodeId> admissible(const SocialGraph& g, NodeId origin,
                               const std::vector<NodeId>& path, NodeId tail) {
  std::vector<NodeId> out;
  for (NodeId v : g.neighbors(tail)) {
    if (v == origin || on_path(path, v)) continue;
    out.push_back(v);
  }
  return out;
}

}  // namespace

FriendSelection select_friends_egreedy(NodeId u, const BanditConfig& cfg,
                                       const ExploitContext& ctx,
                                       const SocialGraph& g, Rng& rng) {
  if (cfg.beam_width < 1) throw ConfigError("beam_width must be >= 1");
  if (cfg.depth < 1) throw ConfigError("depth must be >= 1");
  if (!(cfg.epsilon >= 0.0 && cfg.epsilon <= 1.0)) {
    throw ConfigError("epsilon must lie in [0,1]");
  }
  if (u >= g.node_count()) throw DataError("select_friends_egreedy: unknown user");

  FriendSelection out;
  out.origin = u;
  out.empty_neighborhood = g.neighbors(u).empty();
  out.paths.resize(static_cast<std::size_t>(cfg.beam_width));

  for (auto& path : out.paths) {
    for (int step = 0; step < cfg.depth; ++step) {
      const NodeId tail = path.empty() ? u : path.back();
      const auto cand = admissible(g, u, path, tail);
      if (cand.empty()) break;
      const double p = rng.uniform();
      const bool greedy =
          cfg.egreedy_flip_branch ? (p >= cfg.epsilon) : (p < cfg.epsilon);
      NodeId chosen;
      if (greedy) {
        chosen = cand[0];
        double best = exploitation_value(cand[0], ctx);
        for (std::size_t i = 1; i < cand.size(); ++i) {
          const double q = exploitation_value(cand[i], ctx);
          if (q > best) {  // ties keep the smaller id (cand is sorted)
            best = q;
            chosen = cand[i];
          }
        }
      } else {
        chosen = cand[rng.index(cand.size())];
      }
      path.push_back(chosen);
    }
  }
  return out;
}

FriendSelection select_friends_random(NodeId u, RandomMode mode, int beams,
                                      int depth, const SocialGraph& g,
                                      Rng& rng) {
  if (beams < 1) throw ConfigError("beam count must be >= 1");
  if (depth < 1) throw ConfigError("depth must be >= 1");
  if (u >= g.node_count()) throw DataError("select_friends_random: unknown user");

  FriendSelection out;
  out.origin = u;
  out.empty_neighborhood =
      mode == RandomMode::kWalk && g.neighbors(u).empty();
  out.paths.resize(static_cast<std::size_t>(beams));

  if (mode == RandomMode::kSelect) {
    std::vector<NodeId> others;
    others.reserve(g.node_count() - 1);
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (v != u) others.push_back(v);
    }
    const std::size_t take =
        std::min<std::size_t>(static_cast<std::size_t>(depth), others.size());
    for (auto& path : out.paths) {
      // Partial Fisher-Yates: the first `take` entries are a uniform
      // without-replacement sample.
      std::vector<NodeId> pool = others;
      for (std::size_t i = 0; i < take; ++i) {
        const std::size_t j = i + rng.index(pool.size() - i);
        std::swap(pool[i], pool[j]);
      }
      path.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(take));
    }
  } else {
    for (auto& path : out.paths) {
      for (int step = 0; step < depth; ++step) {
        const NodeId tail = path.empty() ? u : path.back();
        const auto cand = admissible(g, u, path, tail);
        if (cand.empty()) break;
        path.push_back(cand[rng.index(cand.size())]);
      }
    }
  }
  return out;
}

void update_visit_counts(const FriendSelection& selection,
                         ExplorationState& state) {
  if (selection.paths.empty()) return;
  const double share = 1.0 / static_cast<double>(selection.paths.size());
  for (const auto& path : selection.paths) {
    for (NodeId v : path) state.visit_counts.at(v) += share;
  }
}

void record_rs_f1(NodeId u, double day_f1, ExplorationState& state) {
  if (!(day_f1 >= 0.0 && day_f1 <= 1.0)) {
    throw DataError("record_rs_f1: F1 outside [0,1]");
  }
  auto& rm = state.rs_f1.at(u);
  rm.sum += day_f1;
  rm.count += 1;
}

void initialize_exploration(ExplorationState& state, const SocialGraph& g,
                            int beams, int depth, std::uint64_t seed) {
  for (NodeId u = 0; u < g.node_count(); ++u) {
    Rng rng(Rng::derive(seed, {kStreamInitPaths, u}));
    const auto sel =
        select_friends_random(u, RandomMode::kSelect, beams, depth, g, rng);
    update_visit_counts(sel, state);
  }
}

}  // namespace sorex
