#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace sorex {

// Lowercased word tokens. A codepoint is part of a word iff it is ASCII
// alphanumeric, a Latin-1 letter (U+00C0..U+00FF except the multiplication
// and division signs), or any higher codepoint outside the general/CJK
// punctuation blocks (U+2000..U+206F, U+3000..U+303F). ASCII and Latin-1
// uppercase letters are folded to lowercase; other scripts pass through.
// Invalid UTF-8 bytes act as separators.
std::vector<std::string> tokenize(std::string_view text);

// Document frequencies over a document collection.
struct CorpusStats {
  std::int64_t doc_count = 0;
  std::unordered_map<std::string, std::int64_t> doc_freq;

  // Counts each document at most once per term.
  void add_document(std::span<const std::string> tokens);
};

// Throws DataError on an empty collection.
CorpusStats build_corpus_stats(std::span<const std::vector<std::string>> docs);

struct KeywordProfile {
  // (term, tf-idf score), scores non-increasing, ties broken by term order.
  std::vector<std::pair<std::string, double>> terms;

  bool empty() const { return terms.empty(); }
  std::size_t size() const { return terms.size(); }
};

// score(term) = tf * (ln((1+N)/(1+df)) + 1) with tf the raw count in
// `tokens` and df = 0 for terms the stats have never seen. Top-k by score,
// ties by lexicographic term order.
KeywordProfile tfidf_topk(std::span<const std::string> tokens,
                          const CorpusStats& stats, int k);

// tfidf_topk over a pre-accumulated term-count map (used for user histories,
// which the harness accumulates incrementally instead of re-concatenating).
KeywordProfile tfidf_topk_counts(
    const std::unordered_map<std::string, std::int64_t>& term_counts,
    const CorpusStats& stats, int k);

// Profile of a user's reading history: tfidf_topk over the concatenated
// token stream. Empty history yields an empty (cold) profile.
KeywordProfile user_profile(std::span<const std::vector<std::string>> history,
                            const CorpusStats& stats, int m);

}  // namespace sorex
