#include "sorex/text.hpp"

#include <algorithm>
#include <cmath>

#include "sorex/error.hpp"

namespace sorex {

namespace {

// Minimal UTF-8 decoder: returns the codepoint and advances i, or returns
// 0xFFFFFFFF for an invalid byte (consuming exactly one byte).
std::uint32_t decode_utf8(std::string_view s, std::size_t& i) {
  const unsigned char b0 = static_cast<unsigned char>(s[i]);
  if (b0 < 0x80) {
    ++i;
    return b0;
  }
  int len = 0;
  std::uint32_t cp = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    ++i;
    return 0xFFFFFFFF;
  }
  if (i + len > s.size()) {
    ++i;
    return 0xFFFFFFFF;
  }
  for (int k = 1; k < len; ++k) {
    const unsigned char b = static_cast<unsigned char>(s[i + k]);
    if ((b & 0xC0) != 0x80) {
      ++i;
      return 0xFFFFFFFF;
    }
    cp = (cp << 6) | (b & 0x3F);
  }
  i += len;
  return cp;
}

bool is_word_codepoint(std::uint32_t cp) {
  if (cp < 0x80) {
    return (cp >= '0' && cp <= '9') || (cp >= 'a' && cp <= 'z') ||
           (cp >= 'A' && cp <= 'Z');
  }
  if (cp < 0xC0) return false;                     // Latin-1 punctuation block
  if (cp == 0xD7 || cp == 0xF7) return false;      // multiplication, division
  if (cp >= 0x2000 && cp <= 0x206F) return false;  // general punctuation
  if (cp >= 0x3000 && cp <= 0x303F) return false;  // CJK punctuation
  return true;
}

std::uint32_t fold_codepoint(std::uint32_t cp) {
  if (cp >= 'A' && cp <= 'Z') return cp + 0x20;
  if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
  return cp;
}

void append_utf8(std::string& out, std::uint32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  std::size_t i = 0;
  while (i < text.size()) {
    const std::uint32_t cp = decode_utf8(text, i);
    if (cp != 0xFFFFFFFF && is_word_codepoint(cp)) {
      append_utf8(current, fold_codepoint(cp));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

void CorpusStats::add_document(std::span<const std::string> tokens) {
  ++doc_count;
  std::vector<std::string_view> distinct(tokens.begin(), tokens.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (const auto& term : distinct) ++doc_freq[std::string(term)];
}

CorpusStats build_corpus_stats(std::span<const std::vector<std::string>> docs) {
  if (docs.empty()) throw DataError("build_corpus_stats: empty corpus");
  CorpusStats stats;
  for (const auto& doc : docs) stats.add_document(doc);
  return stats;
}

namespace {

KeywordProfile topk_by_score(
    std::vector<std::pair<std::string, double>> scored, int k) {
  std::sort(scored.begin(), scored.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  if (static_cast<std::size_t>(k) < scored.size()) {
    scored.resize(static_cast<std::size_t>(k));
  }
  return KeywordProfile{std::move(scored)};
}

double idf(const CorpusStats& stats, const std::string& term) {
  std::int64_t df = 0;
  if (auto it = stats.doc_freq.find(term); it != stats.doc_freq.end()) {
    df = it->second;
  }
  return std::log(static_cast<double>(1 + stats.doc_count) /
                  static_cast<double>(1 + df)) +
         1.0;
}

}  // namespace

KeywordProfile tfidf_topk(std::span<const std::string> tokens,
                          const CorpusStats& stats, int k) {
  if (k < 1) throw ConfigError("tfidf_topk: k must be >= 1");
  std::unordered_map<std::string, std::int64_t> tf;
  for (const auto& tok : tokens) ++tf[tok];
  return tfidf_topk_counts(tf, stats, k);
}

KeywordProfile tfidf_topk_counts(
    const std::unordered_map<std::string, std::int64_t>& term_counts,
    const CorpusStats& stats, int k) {
  if (k < 1) throw ConfigError("tfidf_topk: k must be >= 1");
  std::vector<std::pair<std::string, double>> scored;
  scored.reserve(term_counts.size());
  for (const auto& [term, tf] : term_counts) {
    scored.emplace_back(term, static_cast<double>(tf) * idf(stats, term));
  }
  return topk_by_score(std::move(scored), k);
}

KeywordProfile user_profile(std::span<const std::vector<std::string>> history,
                            const CorpusStats& stats, int m) {
  if (m < 1) throw ConfigError("user_profile: m must be >= 1");
  if (history.empty()) return {};
  std::unordered_map<std::string, std::int64_t> tf;
  for (const auto& doc : history) {
    for (const auto& tok : doc) ++tf[tok];
  }
  if (tf.empty()) return {};
  return tfidf_topk_counts(tf, stats, m);
}

}  // namespace sorex
