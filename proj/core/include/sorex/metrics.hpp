#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "sorex/graph.hpp"

namespace sorex {

struct PredEntry {
  NodeId user = 0;
  std::string doc;
  double score = 0.0;  // in [0,1]
  int label = 0;       // 0 or 1
  int day = 0;
};

// Gini coefficient of a non-negative value vector:
// sort ascending, return sum((2i - n - 1) * x_i) / (n * sum(x_i)) with
// 1-based ranks i. All-zero input is defined as 0. Negative values raise.
double gini(std::span<const double> values);

// Probability that a uniformly random positive outscores a uniformly random
// negative, ties counted 0.5 (rank formulation). Single-class input has no
// defined value and reports absent.
std::optional<double> auc(std::span<const PredEntry> log);

// Precision/recall harmonic mean at `score >= threshold`; 0 when
// precision + recall is 0.
double f1_score(std::span<const PredEntry> log, double threshold);

// Impressions per creator: one impression to author(doc) for every entry
// whose score clears the threshold. Creators of any document appearing in
// the log are included, with 0 if nothing of theirs was surfaced. A doc id
// missing from doc_author raises DataError.
struct ImpressionDistribution {
  std::unordered_map<NodeId, std::int64_t> counts;

  std::vector<double> values() const;  // counts in ascending creator-id order
};

ImpressionDistribution creator_impressions(
    std::span<const PredEntry> log,
    const std::unordered_map<std::string, NodeId>& doc_author,
    double threshold);

// Harmonic mean of F1 and (1 - Gini); 0 when the denominator vanishes.
double cc(double f1_value, double gini_value);

struct DayMetrics {
  int day = 0;
  std::optional<double> auc;
  double f1 = 0.0;
  double gini = 0.0;
  double cc = 0.0;
  std::int64_t n_samples = 0;
};

DayMetrics evaluate_day(std::span<const PredEntry> log, int day,
                        const std::unordered_map<std::string, NodeId>& doc_author,
                        double threshold);

// metrics.csv: header `day,auc,f1,gini,cc,n_samples`, one row per test day
// (6 fractional digits, absent AUC as an empty field), then a final `avg`
// row with the mean of each daily metric and the total sample count.
std::string format_metrics_csv(std::span<const DayMetrics> rows);
void write_metrics_csv(std::span<const DayMetrics> rows,
                       const std::filesystem::path& path);

}  // namespace sorex
