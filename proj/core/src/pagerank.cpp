#include "sorex/pagerank.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sorex/error.hpp"

namespace sorex {

std::vector<double> pagerank(std::span<const std::pair<NodeId, NodeId>> edges,
                             std::size_t n_nodes, const PageRankConfig& cfg) {
  if (n_nodes == 0) throw DataError("pagerank: empty node set");
  if (!(cfg.damping > 0.0 && cfg.damping < 1.0)) {
    throw ConfigError("pagerank: damping must lie strictly inside (0,1)");
  }
  if (!(cfg.tolerance > 0.0)) throw ConfigError("pagerank: tolerance must be > 0");
  if (cfg.max_iters < 1) throw ConfigError("pagerank: max_iters must be >= 1");

  // CSR over the multiset: out_weight[u] counts parallel edges.
  std::vector<std::size_t> out_degree(n_nodes, 0);
  for (const auto& [src, dst] : edges) {
    if (src >= n_nodes || dst >= n_nodes) {
      throw DataError("pagerank: edge endpoint out of range");
    }
    ++out_degree[src];
  }
  std::vector<std::size_t> row(n_nodes + 1, 0);
  for (std::size_t u = 0; u < n_nodes; ++u) row[u + 1] = row[u] + out_degree[u];
  std::vector<NodeId> col(edges.size());
  std::vector<std::size_t> fill(row.begin(), row.end() - 1);
  for (const auto& [src, dst] : edges) col[fill[src]++] = dst;

  const double n = static_cast<double>(n_nodes);
  std::vector<double> x(n_nodes, 1.0 / n);
  std::vector<double> next(n_nodes, 0.0);

  double residual = 0.0;
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    double dangling_mass = 0.0;
    std::fill(next.begin(), next.end(), 0.0);
    for (std::size_t u = 0; u < n_nodes; ++u) {
      if (out_degree[u] == 0) {
        dangling_mass += x[u];
        continue;
      }
      const double share = x[u] / static_cast<double>(out_degree[u]);
      for (std::size_t k = row[u]; k < row[u + 1]; ++k) next[col[k]] += share;
    }
    const double base = (1.0 - cfg.damping) / n + cfg.damping * dangling_mass / n;
    residual = 0.0;
    for (std::size_t v = 0; v < n_nodes; ++v) {
      const double nv = base + cfg.damping * next[v];
      residual += std::abs(nv - x[v]);
      x[v] = nv;
    }
    if (residual < cfg.tolerance) return x;
  }
  throw std::runtime_error("pagerank: no convergence after " +
                           std::to_string(cfg.max_iters) +
                           " iterations (residual " + std::to_string(residual) +
                           ")");
}

std::vector<double> pagerank(const SocialGraph& g, const PageRankConfig& cfg) {
  const auto edges = g.edge_list();
  return pagerank(edges, g.node_count(), cfg);
}

}  // namespace sorex
