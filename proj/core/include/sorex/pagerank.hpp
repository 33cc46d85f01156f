#pragma once

#include <span>
#include <utility>
#include <vector>

#include "sorex/graph.hpp"

namespace sorex {

struct PageRankConfig {
  double damping = 0.85;   // must be strictly inside (0, 1)
  double tolerance = 1e-8;
  int max_iters = 200;
};

// Damped power iteration over a directed edge multiset (parallel edges act
// as weights). Dangling mass is redistributed uniformly over all nodes, so
// the result always sums to 1. Throws if the iteration does not reach the
// tolerance within max_iters, reporting the final residual.
std::vector<double> pagerank(std::span<const std::pair<NodeId, NodeId>> edges,
                             std::size_t n_nodes,
                             const PageRankConfig& cfg = {});

std::vector<double> pagerank(const SocialGraph& g, const PageRankConfig& cfg = {});

}  // namespace sorex
