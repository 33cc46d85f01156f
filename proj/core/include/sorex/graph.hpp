#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sorex {

using NodeId = std::uint32_t;

// Interned user ids. Ids are assigned in lexicographic order of the external
// names, so NodeId comparison orders the same way as name comparison; all
// "smaller user id" tie-breaks in the search code rely on that.
class NodeTable {
 public:
  NodeTable() = default;

  // Sorts, dedups and interns. Names must be non-empty and whitespace-free.
  static NodeTable from_names(std::vector<std::string> names);

  std::optional<NodeId> find(std::string_view name) const;
  // Throws DataError for unknown names.
  NodeId id_of(std::string_view name) const;
  const std::string& name(NodeId id) const;
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }

 private:
  std::vector<std::string> names_;  // sorted ascending
  std::unordered_map<std::string, NodeId> index_;
};

// Directed social graph ("follows"). Immutable after construction; neighbor
// lists are sorted ascending and deduplicated.
class SocialGraph {
 public:
  SocialGraph() = default;

  // Validates: no self-loops, every endpoint < nodes.size().
  static SocialGraph build(NodeTable nodes,
                           std::vector<std::pair<NodeId, NodeId>> edges);

  std::span<const NodeId> neighbors(NodeId u) const;
  std::span<const NodeId> neighbors_of(std::string_view name) const;

  const NodeTable& nodes() const { return nodes_; }
  std::size_t node_count() const { return nodes_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::vector<std::pair<NodeId, NodeId>> edge_list() const;

 private:
  NodeTable nodes_;
  std::vector<std::vector<NodeId>> out_;
  std::size_t edge_count_ = 0;
};

// Per-day consumer -> creator connections derived from positive logs.
// A multiset: one edge per log entry, multiplicities preserved.
struct ActivityGraph {
  int day = 0;
  std::vector<std::pair<NodeId, NodeId>> edges;
};

// Loads `src<TAB>dst` edges. Nodes are the set of endpoint names unless
// known_nodes is given, in which case an edge naming an unknown node is
// rejected with a DataError carrying the offending id. Malformed lines
// (wrong field count, whitespace ids, self-loops) raise DataError with the
// 1-based line number.
SocialGraph load_social_graph(const std::filesystem::path& path,
                              const NodeTable* known_nodes = nullptr);

// One (consumer, creator) edge per positive log. doc_author resolves a
// document id to its author; a dangling doc id raises DataError naming it.
ActivityGraph build_activity_graph(
    int day, std::span<const std::pair<NodeId, std::string>> positive_logs,
    const std::unordered_map<std::string, NodeId>& doc_author);

}  // namespace sorex
