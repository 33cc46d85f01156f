#include "sorex/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "sorex/error.hpp"

namespace sorex {

double gini(std::span<const double> values) {
  if (values.empty()) throw DataError("gini: empty input");
  std::vector<double> x(values.begin(), values.end());
  double total = 0.0;
  for (double v : x) {
    if (v < 0.0) throw DataError("gini: negative value");
    total += v;
  }
  if (total <= 0.0) return 0.0;
  std::sort(x.begin(), x.end());
  const double n = static_cast<double>(x.size());
  double acc = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    acc += (2.0 * static_cast<double>(i + 1) - n - 1.0) * x[i];
  }
  return acc / (n * total);
}

std::optional<double> auc(std::span<const PredEntry> log) {
  // Rank formulation with midranks for ties: O(n log n).
  std::vector<std::size_t> order(log.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return log[a].score < log[b].score;
  });
  std::size_t n_pos = 0, n_neg = 0;
  double rank_sum_pos = 0.0;
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j < order.size() && log[order[j]].score == log[order[i]].score) ++j;
    const double midrank = 0.5 * static_cast<double>(i + 1 + j);  // 1-based
    for (std::size_t k = i; k < j; ++k) {
      if (log[order[k]].label == 1) {
        rank_sum_pos += midrank;
        ++n_pos;
      } else {
        ++n_neg;
      }
    }
    i = j;
  }
  if (n_pos == 0 || n_neg == 0) return std::nullopt;
  const double p = static_cast<double>(n_pos);
  const double n = static_cast<double>(n_neg);
  return (rank_sum_pos - p * (p + 1.0) / 2.0) / (p * n);
}

double f1_score(std::span<const PredEntry> log, double threshold) {
  std::int64_t tp = 0, fp = 0, fn = 0;
  for (const auto& e : log) {
    const bool predicted = e.score >= threshold;
    if (predicted && e.label == 1) ++tp;
    if (predicted && e.label == 0) ++fp;
    if (!predicted && e.label == 1) ++fn;
  }
  if (tp == 0) return 0.0;
  const double precision = static_cast<double>(tp) / static_cast<double>(tp + fp);
  const double recall = static_cast<double>(tp) / static_cast<double>(tp + fn);
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<double> ImpressionDistribution::values() const {
  std::vector<std::pair<NodeId, std::int64_t>> sorted(counts.begin(), counts.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> out;
  out.reserve(sorted.size());
  for (const auto& [id, c] : sorted) out.push_back(static_cast<double>(c));
  return out;
}

ImpressionDistribution creator_impressions(
    std::span<const PredEntry> log,
    const std::unordered_map<std::string, NodeId>& doc_author,
    double threshold) {
  ImpressionDistribution dist;
  for (const auto& e : log) {
    auto it = doc_author.find(e.doc);
    if (it == doc_author.end()) {
      throw DataError("creator_impressions: unknown document " + e.doc);
    }
    auto [slot, inserted] = dist.counts.emplace(it->second, 0);
    if (e.score >= threshold) ++slot->second;
  }
  return dist;
}

double cc(double f1_value, double gini_value) {
  const double equality = 1.0 - gini_value;
  const double denom = equality + f1_value;
  if (denom <= 0.0) return 0.0;
  return 2.0 * equality * f1_value / denom;
}

DayMetrics evaluate_day(std::span<const PredEntry> log, int day,
                        const std::unordered_map<std::string, NodeId>& doc_author,
                        double threshold) {
  DayMetrics m;
  m.day = day;
  m.n_samples = static_cast<std::int64_t>(log.size());
  m.auc = log.empty() ? std::nullopt : auc(log);
  m.f1 = f1_score(log, threshold);
  if (!log.empty()) {
    const auto dist = creator_impressions(log, doc_author, threshold);
    const auto values = dist.values();
    m.gini = values.empty() ? 0.0 : gini(values);
  }
  m.cc = cc(m.f1, m.gini);
  return m;
}

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

std::string format_metrics_csv(std::span<const DayMetrics> rows) {
  std::string out = "day,auc,f1,gini,cc,n_samples\n";
  double auc_sum = 0.0;
  std::int64_t auc_days = 0;
  double f1_sum = 0.0, gini_sum = 0.0, cc_sum = 0.0;
  std::int64_t samples = 0;
  for (const auto& r : rows) {
    out += std::to_string(r.day);
    out += ',';
    if (r.auc) {
      out += fmt6(*r.auc);
      auc_sum += *r.auc;
      ++auc_days;
    }
    out += ',';
    out += fmt6(r.f1);
    out += ',';
    out += fmt6(r.gini);
    out += ',';
    out += fmt6(r.cc);
    out += ',';
    out += std::to_string(r.n_samples);
    out += '\n';
    f1_sum += r.f1;
    gini_sum += r.gini;
    cc_sum += r.cc;
    samples += r.n_samples;
  }
  if (!rows.empty()) {
    const double n = static_cast<double>(rows.size());
    out += "avg,";
    if (auc_days > 0) out += fmt6(auc_sum / static_cast<double>(auc_days));
    out += ',';
    out += fmt6(f1_sum / n);
    out += ',';
    out += fmt6(gini_sum / n);
    out += ',';
    out += fmt6(cc_sum / n);
    out += ',';
    out += std::to_string(samples);
    out += '\n';
  }
  return out;
}

void write_metrics_csv(std::span<const DayMetrics> rows,
                       const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write metrics file: " + path.string());
  out << format_metrics_csv(rows);
  if (!out) throw DataError("failed writing metrics file: " + path.string());
}

}  // namespace sorex
