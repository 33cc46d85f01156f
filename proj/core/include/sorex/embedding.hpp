#pragma once

#include <Eigen/Dense>
#include <filesystem>
#include <string>
#include <unordered_map>
#include <vector>

#include "sorex/text.hpp"

namespace sorex {

using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Vec = Eigen::VectorXd;

// Fixed pre-trained word vectors. Immutable once loaded.
class EmbeddingTable {
 public:
  EmbeddingTable() = default;
  EmbeddingTable(int dim, std::unordered_map<std::string, Vec> vectors)
      : dim_(dim), vectors_(std::move(vectors)) {}

  // Format: one `word v1 v2 ... vD` line per word, space separated. An
  // optional first line `<vocab_size> <D>` is detected by token count.
  // Malformed lines raise DataError with the line number; a duplicated word
  // keeps its first definition.
  static EmbeddingTable load(const std::filesystem::path& path);

  int dim() const { return dim_; }
  std::size_t size() const { return vectors_.size(); }
  const Vec* find(const std::string& word) const;

 private:
  int dim_ = 0;
  std::unordered_map<std::string, Vec> vectors_;
};

// One row per in-vocabulary profile term, in profile order. Out-of-vocabulary
// terms are skipped; an all-OOV (or empty) profile yields a 0 x D matrix,
// which downstream layers treat as the cold-start case.
Mat embed_profile(const KeywordProfile& profile, const EmbeddingTable& table);

}  // namespace sorex
