#include "sorex/graph.hpp"

#include <algorithm>
#include <fstream>

#include "sorex/error.hpp"

namespace sorex {

NodeTable NodeTable::from_names(std::vector<std::string> names) {
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  NodeTable t;
  t.names_ = std::move(names);
  t.index_.reserve(t.names_.size());
  for (NodeId i = 0; i < t.names_.size(); ++i) {
    t.index_.emplace(t.names_[i], i);
  }
  return t;
}

std::optional<NodeId> NodeTable::find(std::string_view name) const {
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

NodeId NodeTable::id_of(std::string_view name) const {
  auto id = find(name);
  if (!id) throw DataError("unknown user id: " + std::string(name));
  return *id;
}

const std::string& NodeTable::name(NodeId id) const {
  if (id >= names_.size()) throw DataError("node id out of range");
  return names_[id];
}

SocialGraph SocialGraph::build(NodeTable nodes,
                               std::vector<std::pair<NodeId, NodeId>> edges) {
  SocialGraph g;
  g.nodes_ = std::move(nodes);
  g.out_.assign(g.nodes_.size(), {});
  for (const auto& [src, dst] : edges) {
    if (src >= g.nodes_.size() || dst >= g.nodes_.size()) {
      throw DataError("edge endpoint out of range: " + std::to_string(src) +
                      " -> " + std::to_string(dst));
    }
    if (src == dst) {
      throw DataError("self-loop on node " + g.nodes_.name(src));
    }
    g.out_[src].push_back(dst);
  }
  for (auto& nb : g.out_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  return g;
}

std::span<const NodeId> SocialGraph::neighbors(NodeId u) const {
  if (u >= out_.size()) throw DataError("unknown node id " + std::to_string(u));
  return out_[u];
}

std::span<const NodeId> SocialGraph::neighbors_of(std::string_view name) const {
  return neighbors(nodes_.id_of(name));
}

std::vector<std::pair<NodeId, NodeId>> SocialGraph::edge_list() const {
  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(edge_count_);
  for (NodeId u = 0; u < out_.size(); ++u) {
    for (NodeId v : out_[u]) edges.emplace_back(u, v);
  }
  return edges;
}

namespace {

bool has_whitespace(std::string_view s) {
  return s.find_first_of(" \t\r\n\v\f") != std::string_view::npos;
}

}  // namespace

SocialGraph load_social_graph(const std::filesystem::path& path,
                              const NodeTable* known_nodes) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open graph file: " + path.string());

  std::vector<std::pair<std::string, std::string>> raw_edges;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected exactly one tab separator");
    }
    std::string src = line.substr(0, tab);
    std::string dst = line.substr(tab + 1);
    if (src.empty() || dst.empty() || has_whitespace(src) || has_whitespace(dst)) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": malformed user id");
    }
    if (src == dst) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": self-loop on node " + src);
    }
    raw_edges.emplace_back(std::move(src), std::move(dst));
  }

  NodeTable table;
  if (known_nodes != nullptr) {
    table = *known_nodes;
    for (const auto& [src, dst] : raw_edges) {
      if (!table.find(src)) throw DataError("edge references unknown node: " + src);
      if (!table.find(dst)) throw DataError("edge references unknown node: " + dst);
    }
  } else {
    std::vector<std::string> names;
    names.reserve(raw_edges.size() * 2);
    for (const auto& [src, dst] : raw_edges) {
      names.push_back(src);
      names.push_back(dst);
    }
    table = NodeTable::from_names(std::move(names));
  }

  std::vector<std::pair<NodeId, NodeId>> edges;
  edges.reserve(raw_edges.size());
  for (const auto& [src, dst] : raw_edges) {
    edges.emplace_back(table.id_of(src), table.id_of(dst));
  }
  return SocialGraph::build(std::move(table), std::move(edges));
}

ActivityGraph build_activity_graph(
    int day, std::span<const std::pair<NodeId, std::string>> positive_logs,
    const std::unordered_map<std::string, NodeId>& doc_author) {
  ActivityGraph g;
  g.day = day;
  g.edges.reserve(positive_logs.size());
  for (const auto& [consumer, doc_id] : positive_logs) {
    auto it = doc_author.find(doc_id);
    if (it == doc_author.end()) {
      throw DataError("log references unknown document: " + doc_id);
    }
    g.edges.emplace_back(consumer, it->second);
  }
  return g;
}

}  // namespace sorex
