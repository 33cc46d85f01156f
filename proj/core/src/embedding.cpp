#include "sorex/embedding.hpp"

#include <charconv>
#include <fstream>

#include "sorex/error.hpp"

namespace sorex {

namespace {

std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && line[i] == ' ') ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

bool parse_int(std::string_view s, long& out) {
  const char* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && p == end;
}

}  // namespace

EmbeddingTable EmbeddingTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open embeddings file: " + path.string());

  std::unordered_map<std::string, Vec> vectors;
  int dim = 0;
  std::string line;
  std::size_t line_no = 0;
  bool first_content_line = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    auto fields = split_spaces(line);
    if (first_content_line && fields.size() == 2) {
      long vocab = 0, d = 0;
      if (parse_int(fields[0], vocab) && parse_int(fields[1], d)) {
        if (d < 1) {
          throw DataError(path.string() + ":" + std::to_string(line_no) +
                          ": embedding dimension must be >= 1");
        }
        dim = static_cast<int>(d);
        first_content_line = false;
        continue;
      }
    }
    first_content_line = false;
    if (fields.size() < 2) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected `word v1 ... vD`");
    }
    const int row_dim = static_cast<int>(fields.size()) - 1;
    if (dim == 0) dim = row_dim;
    if (row_dim != dim) {
      throw DataError(path.string() + ":" + std::to_string(line_no) +
                      ": expected " + std::to_string(dim) + " values, got " +
                      std::to_string(row_dim));
    }
    Vec v(dim);
    for (int i = 0; i < dim; ++i) {
      double value = 0.0;
      if (!parse_double(fields[static_cast<std::size_t>(i) + 1], value)) {
        throw DataError(path.string() + ":" + std::to_string(line_no) +
                        ": bad number `" + std::string(fields[i + 1]) + "`");
      }
      v[i] = value;
    }
    vectors.emplace(std::string(fields[0]), std::move(v));
  }
  if (vectors.empty()) throw DataError("empty embeddings file: " + path.string());
  return EmbeddingTable(dim, std::move(vectors));
}

const Vec* EmbeddingTable::find(const std::string& word) const {
  auto it = vectors_.find(word);
  return it == vectors_.end() ? nullptr : &it->second;
}

Mat embed_profile(const KeywordProfile& profile, const EmbeddingTable& table) {
  std::vector<const Vec*> rows;
  rows.reserve(profile.terms.size());
  for (const auto& [term, score] : profile.terms) {
    if (const Vec* v = table.find(term)) rows.push_back(v);
  }
  Mat X(static_cast<Eigen::Index>(rows.size()), table.dim());
  for (Eigen::Index i = 0; i < X.rows(); ++i) {
    X.row(i) = rows[static_cast<std::size_t>(i)]->transpose();
  }
  return X;
}

}  // namespace sorex
