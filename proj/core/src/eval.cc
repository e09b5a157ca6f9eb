#include "parasense/eval.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <map>
#include <numeric>
#include <ostream>
#include <unordered_map>

#include "parasense/corpus.h"
#include "parasense/disambig.h"
#include "parasense/error.h"

namespace parasense {

namespace {

std::uint64_t choose2(std::uint64_t n) { return n * (n - 1) / 2; }

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double r = (static_cast<double>(i) + static_cast<double>(j)) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double adjusted_rand_index(std::span<const int> pred, std::span<const int> gold) {
  if (pred.size() != gold.size()) {
    throw UsageError("ARI: label vectors differ in length");
  }
  if (pred.size() < 2) throw UsageError("ARI: need at least two items");

  std::map<std::pair<int, int>, std::uint64_t> cells;
  std::map<int, std::uint64_t> rows, cols;
  for (std::size_t i = 0; i < pred.size(); ++i) {
    ++cells[{pred[i], gold[i]}];
    ++rows[pred[i]];
    ++cols[gold[i]];
  }
  std::uint64_t index = 0, sum_rows = 0, sum_cols = 0;
  for (const auto& [_, n] : cells) index += choose2(n);
  for (const auto& [_, n] : rows) sum_rows += choose2(n);
  for (const auto& [_, n] : cols) sum_cols += choose2(n);
  const double total = static_cast<double>(choose2(pred.size()));
  const double expected =
      static_cast<double>(sum_rows) * static_cast<double>(sum_cols) / total;
  const double max_index =
      (static_cast<double>(sum_rows) + static_cast<double>(sum_cols)) / 2;
  if (max_index == expected) return 1.0;
  return (static_cast<double>(index) - expected) / (max_index - expected);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw UsageError("spearman: inputs differ in length");
  }
  if (xs.size() < 3) throw UsageError("spearman: need at least three items");
  const auto rx = average_ranks(xs);
  const auto ry = average_ranks(ys);
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(rx.begin(), rx.end(), 0.0) / n;
  const double my = std::accumulate(ry.begin(), ry.end(), 0.0) / n;
  double sxy = 0, sxx = 0, syy = 0;
  for (std::size_t i = 0; i < rx.size(); ++i) {
    sxy += (rx[i] - mx) * (ry[i] - my);
    sxx += (rx[i] - mx) * (rx[i] - mx);
    syy += (ry[i] - my) * (ry[i] - my);
  }
  if (sxx == 0 || syy == 0) {
    throw UsageError("spearman: undefined for a constant input");
  }
  return sxy / std::sqrt(sxx * syy);
}

WsiReport wsi_evaluate(const SenseModel& model,
                       std::span<const WsiInstance> instances,
                       AriAggregation aggregation) {
  WsiReport report;
  std::map<std::string, std::vector<const WsiInstance*>> by_word;
  for (const auto& inst : instances) by_word[inst.target].push_back(&inst);

  std::vector<int> pooled_pred, pooled_gold;
  std::map<std::string, int> pooled_labels;
  auto pooled_id = [&](const std::string& key) {
    return pooled_labels.emplace(key, static_cast<int>(pooled_labels.size()))
        .first->second;
  };

  double sum = 0;
  for (const auto& [word, group] : by_word) {
    const auto id = model.vocab.en_id(word);
    if (!id || group.size() < 2) {
      report.skipped.push_back(word);
      continue;
    }
    std::vector<int> pred, gold;
    std::unordered_map<std::string, int> gold_ids;
    for (const auto* inst : group) {
      const auto sense = disambiguate(model, word, inst->context).argmax();
      pred.push_back(static_cast<int>(sense));
      gold.push_back(
          gold_ids.emplace(inst->gold, static_cast<int>(gold_ids.size()))
              .first->second);
      pooled_pred.push_back(pooled_id(word + "#" + std::to_string(sense)));
      pooled_gold.push_back(pooled_id(word + "\x1f" + inst->gold));
    }
    const double ari = adjusted_rand_index(pred, gold);
    report.per_word.push_back({word, group.size(), ari});
    sum += ari;
  }
  if (aggregation == AriAggregation::kMacro) {
    report.average = report.per_word.empty()
                         ? 0.0
                         : sum / static_cast<double>(report.per_word.size());
  } else {
    report.average = pooled_pred.size() < 2
                         ? 0.0
                         : adjusted_rand_index(pooled_pred, pooled_gold);
  }
  return report;
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (!out.empty() && !out.back().empty() && out.back().back() == '\r') {
    out.back().pop_back();
  }
  return out;
}

std::vector<WsiInstance> read_wsi_tsv(std::istream& in) {
  std::vector<WsiInstance> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split_tabs(line);
    if (fields.size() < 3 || fields[0].empty() || fields[1].empty()) {
      throw DataError("WSI TSV line " + std::to_string(line_no) +
                      ": expected target<TAB>gold<TAB>context");
    }
    WsiInstance inst;
    inst.target = fields[0];
    inst.gold = fields[1];
    for (std::size_t f = 2; f < fields.size(); ++f) {
      for (auto& t : split_whitespace(fields[f])) inst.context.push_back(t);
    }
    if (inst.context.empty()) {
      throw DataError("WSI TSV line " + std::to_string(line_no) +
                      ": empty context");
    }
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<WsiInstance> read_wsi_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_wsi_tsv(in);
}

void write_wsi_tsv(std::span<const WsiInstance> instances, std::ostream& out) {
  for (const auto& inst : instances) {
    out << inst.target << '\t' << inst.gold << '\t';
    for (std::size_t i = 0; i < inst.context.size(); ++i) {
      if (i) out << ' ';
      out << inst.context[i];
    }
    out << '\n';
  }
}

std::vector<SimilarityItem> read_similarity_tsv(std::istream& in) {
  std::vector<SimilarityItem> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split_tabs(line);
    if (f.size() != 5) {
      throw DataError("similarity TSV line " + std::to_string(line_no) +
                      ": expected 5 tab-separated fields");
    }
    SimilarityItem item;
    item.w1 = f[0];
    item.ctx1 = split_whitespace(f[1]);
    item.w2 = f[2];
    item.ctx2 = split_whitespace(f[3]);
    try {
      std::size_t used = 0;
      item.human = std::stod(f[4], &used);
      if (used != f[4].size()) throw std::invalid_argument(f[4]);
    } catch (const std::exception&) {
      throw DataError("similarity TSV line " + std::to_string(line_no) +
                      ": bad score \"" + f[4] + "\"");
    }
    out.push_back(std::move(item));
  }
  return out;
}

std::vector<SimilarityItem> read_similarity_tsv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path);
  return read_similarity_tsv(in);
}

}  // namespace parasense
