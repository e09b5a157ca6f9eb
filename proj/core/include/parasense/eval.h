#pragma once

#include <cstddef>
#include <istream>
#include <span>
#include <string>
#include <vector>

#include "parasense/model.h"

namespace parasense {

// Hubert-Arabie adjusted Rand index from the pair-counting contingency
// table. Two identical degenerate partitions (all singletons, or one
// cluster) score 1. Throws UsageError on length mismatch or fewer than two
// items.
double adjusted_rand_index(std::span<const int> pred, std::span<const int> gold);

// Spearman rank correlation with average ranks for ties. Throws UsageError
// on length mismatch, fewer than three items, or a constant input.
double spearman(std::span<const double> xs, std::span<const double> ys);

struct WsiInstance {
  std::string target;
  std::vector<std::string> context;
  std::string gold;
};

enum class AriAggregation { kMacro, kPooled };

struct WordAri {
  std::string word;
  std::size_t instances = 0;
  double ari = 0;
};

struct WsiReport {
  std::vector<WordAri> per_word;  // sorted by word
  double average = 0;             // macro or pooled, per the request
  std::vector<std::string> skipped;  // OOV targets and single-instance words
};

// Labels each instance with the argmax sense of disambiguate(target, context)
// and scores against gold per target word.
WsiReport wsi_evaluate(const SenseModel& model,
                       std::span<const WsiInstance> instances,
                       AriAggregation aggregation = AriAggregation::kMacro);

// `target \t gold_label \t context tokens...`, one instance per line.
std::vector<WsiInstance> read_wsi_tsv(std::istream& in);
std::vector<WsiInstance> read_wsi_tsv(const std::string& path);
void write_wsi_tsv(std::span<const WsiInstance> instances, std::ostream& out);

struct SimilarityItem {
  std::string w1;
  std::vector<std::string> ctx1;
  std::string w2;
  std::vector<std::string> ctx2;
  double human = 0;
};

// `w1 \t ctx1... \t w2 \t ctx2... \t human_score`.
std::vector<SimilarityItem> read_similarity_tsv(std::istream& in);
std::vector<SimilarityItem> read_similarity_tsv(const std::string& path);

// Splits on tabs, keeping empty fields.
std::vector<std::string> split_tabs(const std::string& line);

}  // namespace parasense
