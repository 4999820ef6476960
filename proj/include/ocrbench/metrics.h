// Copyright 2026 The ocrbench Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef OCRBENCH_METRICS_H_
#define OCRBENCH_METRICS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ocrbench/document.h"
#include "ocrbench/textnorm.h"

namespace ocrbench {

// The eight leaderboard metrics, in leaderboard column order.
enum class Metric {
  kLevenshtein,
  kWer,
  kNed,
  kBleu,
  kRouge1,
  kRouge2,
  kRougeL,
  kRougeLsum,
};

inline constexpr std::size_t kNumMetrics = 8;

enum class Direction { kLowerIsBetter, kHigherIsBetter };

struct MetricSpec {
  Metric metric;
  std::string_view name;  // upper-case column name, e.g. "ROUGELSUM"
  Direction direction;
};

// Character/word error metrics rank ascending, overlap metrics descending.
inline constexpr std::array<MetricSpec, kNumMetrics> kMetricSpecs = {{
    {Metric::kLevenshtein, "LEVENSHTEIN", Direction::kLowerIsBetter},
    {Metric::kWer, "WER", Direction::kLowerIsBetter},
    {Metric::kNed, "NED", Direction::kLowerIsBetter},
    {Metric::kBleu, "BLEU", Direction::kHigherIsBetter},
    {Metric::kRouge1, "ROUGE1", Direction::kHigherIsBetter},
    {Metric::kRouge2, "ROUGE2", Direction::kHigherIsBetter},
    {Metric::kRougeL, "ROUGEL", Direction::kHigherIsBetter},
    {Metric::kRougeLsum, "ROUGELSUM", Direction::kHigherIsBetter},
}};

const MetricSpec& SpecFor(Metric metric);
// Case-insensitive lookup by column name.
std::optional<Metric> MetricFromName(std::string_view name);

// Scores for one document pair, or the corpus mean of many.
struct MetricVector {
  double levenshtein = 0.0;  // characters; integral per file
  double wer = 0.0;
  double ned = 0.0;
  double bleu = 0.0;
  double rouge1 = 0.0;
  double rouge2 = 0.0;
  double rougeL = 0.0;
  double rougeLsum = 0.0;

  double Get(Metric metric) const;
  void Set(Metric metric, double value);

  bool operator==(const MetricVector&) const = default;
};

// The vector an exact transcription earns.
MetricVector PerfectVector();

// Minimum insertions, deletions and substitutions, counted in Unicode
// scalar values.
std::size_t Levenshtein(std::u32string_view ref, std::u32string_view hyp);
std::size_t Levenshtein(std::string_view ref_utf8, std::string_view hyp_utf8);

// Same recurrence over word tokens.
std::size_t WordEditDistance(std::span<const std::string> ref,
                             std::span<const std::string> hyp);

// Word edit distance over max(1, |ref|).
double WordErrorRate(std::span<const std::string> ref,
                     std::span<const std::string> hyp);

// Levenshtein over max(|ref|, |hyp|); 0 when both are empty.
double NormalizedEditDistance(std::u32string_view ref, std::u32string_view hyp);

// Sentence-level BLEU-4, uniform weights. Precisions are clipped; an order
// with zero matches scores (0 + 1) / (candidates + 1). Candidate-side
// orders with no n-grams at all (hypothesis shorter than n) contribute 1.
// Brevity penalty exp(1 - r/c) when c < r.
// Degenerate cases: empty hypothesis -> 0 unless the reference is also
// empty, in which case 1; empty reference with non-empty hypothesis -> 0.
double Bleu(std::span<const std::string> ref, std::span<const std::string> hyp);

// F1 over clipped n-gram multiset overlap. When neither side has any
// n-grams the score is 1 if the token lists are identical and 0 otherwise.
double RougeN(std::span<const std::string> ref, std::span<const std::string> hyp,
              std::size_t n);
double Rouge1(std::span<const std::string> ref, std::span<const std::string> hyp);
double Rouge2(std::span<const std::string> ref, std::span<const std::string> hyp);

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b);

// Reference positions of the lexicographically smallest (by position tuple)
// longest common subsequence of `ref` and `hyp`. Ties between LCS
// alignments are resolved this way so union-LCS is well defined.
std::vector<std::size_t> LcsReferencePositions(std::span<const std::string> ref,
                                               std::span<const std::string> hyp);

// F1 from LCS length: P = L/|hyp|, R = L/|ref|. Both empty -> 1.
double RougeL(std::span<const std::string> ref, std::span<const std::string> hyp);

using Sentence = std::vector<std::string>;

// Summary-level union LCS: per reference sentence, the union of its LCS
// positions against every hypothesis sentence; hits are clipped by the
// remaining token counts on both sides. F1 over total token counts.
double RougeLsum(std::span<const Sentence> ref, std::span<const Sentence> hyp);

// Normalizes both texts with `policy`, then computes all eight metrics.
// Character metrics see the normalized text including newlines.
MetricVector ScorePair(const DocumentPair& pair,
                       const NormalizationPolicy& policy);

// Field-wise arithmetic mean. The result does not depend on input order.
// Throws ValidationError("no documents scored") on an empty list.
MetricVector Aggregate(std::span<const MetricVector> vectors);

}  // namespace ocrbench

#endif  // OCRBENCH_METRICS_H_
