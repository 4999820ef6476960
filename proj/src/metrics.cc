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

#include "ocrbench/metrics.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <unordered_map>

#include "ocrbench/error.h"
#include "ocrbench/utf8.h"

namespace ocrbench {
namespace {

template <typename Seq>
std::size_t EditDistance(const Seq& ref, const Seq& hyp) {
  const std::size_t m = ref.size();
  const std::size_t n = hyp.size();
  if (m == 0) return n;
  if (n == 0) return m;
  std::vector<std::size_t> prev(n + 1);
  std::vector<std::size_t> cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = j;
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t substitute = prev[j - 1] + (ref[i - 1] == hyp[j - 1] ? 0 : 1);
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, substitute});
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

// F1 of precision hits/hyp_total and recall hits/ref_total.
double F1FromCounts(std::size_t hits, std::size_t ref_total, std::size_t hyp_total) {
  if (hits == 0 || ref_total == 0 || hyp_total == 0) return 0.0;
  const double precision = static_cast<double>(hits) / static_cast<double>(hyp_total);
  const double recall = static_cast<double>(hits) / static_cast<double>(ref_total);
  return 2.0 * precision * recall / (precision + recall);
}

using NGramCounts = std::map<std::vector<std::string_view>, std::size_t>;

NGramCounts CountNGrams(std::span<const std::string> tokens, std::size_t n) {
  NGramCounts counts;
  if (n == 0 || tokens.size() < n) return counts;
  for (std::size_t i = 0; i + n <= tokens.size(); ++i) {
    std::vector<std::string_view> gram(tokens.begin() + i, tokens.begin() + i + n);
    ++counts[std::move(gram)];
  }
  return counts;
}

std::size_t ClippedOverlap(const NGramCounts& ref, const NGramCounts& hyp) {
  std::size_t overlap = 0;
  for (const auto& [gram, count] : hyp) {
    auto it = ref.find(gram);
    if (it != ref.end()) overlap += std::min(count, it->second);
  }
  return overlap;
}

std::size_t NGramTotal(std::size_t length, std::size_t n) {
  return length >= n ? length - n + 1 : 0;
}

bool SameTokens(std::span<const std::string> a, std::span<const std::string> b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end());
}

// suffix[i][j] = LCS length of a[i..] and b[j..], flattened row-major.
std::vector<std::size_t> SuffixLcsTable(std::span<const std::string> a,
                                        std::span<const std::string> b) {
  const std::size_t m = a.size();
  const std::size_t n = b.size();
  std::vector<std::size_t> table((m + 1) * (n + 1), 0);
  auto at = [&](std::size_t i, std::size_t j) -> std::size_t& {
    return table[i * (n + 1) + j];
  };
  for (std::size_t i = m; i-- > 0;) {
    for (std::size_t j = n; j-- > 0;) {
      at(i, j) = a[i] == b[j] ? at(i + 1, j + 1) + 1
                              : std::max(at(i + 1, j), at(i, j + 1));
    }
  }
  return table;
}

}  // namespace

const MetricSpec& SpecFor(Metric metric) {
  return kMetricSpecs[static_cast<std::size_t>(metric)];
}

std::optional<Metric> MetricFromName(std::string_view name) {
  for (const MetricSpec& spec : kMetricSpecs) {
    if (spec.name.size() != name.size()) continue;
    bool same = true;
    for (std::size_t i = 0; i < name.size() && same; ++i) {
      same = std::toupper(static_cast<unsigned char>(name[i])) == spec.name[i];
    }
    if (same) return spec.metric;
  }
  return std::nullopt;
}

double MetricVector::Get(Metric metric) const {
  switch (metric) {
    case Metric::kLevenshtein: return levenshtein;
    case Metric::kWer: return wer;
    case Metric::kNed: return ned;
    case Metric::kBleu: return bleu;
    case Metric::kRouge1: return rouge1;
    case Metric::kRouge2: return rouge2;
    case Metric::kRougeL: return rougeL;
    case Metric::kRougeLsum: return rougeLsum;
  }
  return 0.0;
}

void MetricVector::Set(Metric metric, double value) {
  switch (metric) {
    case Metric::kLevenshtein: levenshtein = value; break;
    case Metric::kWer: wer = value; break;
    case Metric::kNed: ned = value; break;
    case Metric::kBleu: bleu = value; break;
    case Metric::kRouge1: rouge1 = value; break;
    case Metric::kRouge2: rouge2 = value; break;
    case Metric::kRougeL: rougeL = value; break;
    case Metric::kRougeLsum: rougeLsum = value; break;
  }
}

MetricVector PerfectVector() {
  MetricVector v;
  v.bleu = v.rouge1 = v.rouge2 = v.rougeL = v.rougeLsum = 1.0;
  return v;
}

std::size_t Levenshtein(std::u32string_view ref, std::u32string_view hyp) {
  return EditDistance(ref, hyp);
}

std::size_t Levenshtein(std::string_view ref_utf8, std::string_view hyp_utf8) {
  return EditDistance(DecodeUtf8(ref_utf8), DecodeUtf8(hyp_utf8));
}

std::size_t WordEditDistance(std::span<const std::string> ref,
                             std::span<const std::string> hyp) {
  return EditDistance(ref, hyp);
}

double WordErrorRate(std::span<const std::string> ref,
                     std::span<const std::string> hyp) {
  const double distance = static_cast<double>(WordEditDistance(ref, hyp));
  return distance / static_cast<double>(std::max<std::size_t>(1, ref.size()));
}

double NormalizedEditDistance(std::u32string_view ref, std::u32string_view hyp) {
  const std::size_t longest = std::max(ref.size(), hyp.size());
  if (longest == 0) return 0.0;
  return static_cast<double>(Levenshtein(ref, hyp)) / static_cast<double>(longest);
}

double Bleu(std::span<const std::string> ref, std::span<const std::string> hyp) {
  if (hyp.empty()) return ref.empty() ? 1.0 : 0.0;
  if (ref.empty()) return 0.0;
  constexpr std::size_t kMaxOrder = 4;
  double log_sum = 0.0;
  for (std::size_t n = 1; n <= kMaxOrder; ++n) {
    const std::size_t candidates = NGramTotal(hyp.size(), n);
    if (candidates == 0) continue;  // precision 1, log 0
    const std::size_t matches = ClippedOverlap(CountNGrams(ref, n), CountNGrams(hyp, n));
    const double precision =
        matches == 0 ? 1.0 / static_cast<double>(candidates + 1)
                     : static_cast<double>(matches) / static_cast<double>(candidates);
    log_sum += std::log(precision) / static_cast<double>(kMaxOrder);
  }
  const double c = static_cast<double>(hyp.size());
  const double r = static_cast<double>(ref.size());
  const double brevity = c < r ? std::exp(1.0 - r / c) : 1.0;
  return brevity * std::exp(log_sum);
}

double RougeN(std::span<const std::string> ref, std::span<const std::string> hyp,
              std::size_t n) {
  const std::size_t ref_total = NGramTotal(ref.size(), n);
  const std::size_t hyp_total = NGramTotal(hyp.size(), n);
  if (ref_total == 0 && hyp_total == 0) return SameTokens(ref, hyp) ? 1.0 : 0.0;
  const std::size_t overlap = ClippedOverlap(CountNGrams(ref, n), CountNGrams(hyp, n));
  return F1FromCounts(overlap, ref_total, hyp_total);
}

double Rouge1(std::span<const std::string> ref, std::span<const std::string> hyp) {
  return RougeN(ref, hyp, 1);
}

double Rouge2(std::span<const std::string> ref, std::span<const std::string> hyp) {
  return RougeN(ref, hyp, 2);
}

std::size_t LcsLength(std::span<const std::string> a,
                      std::span<const std::string> b) {
  if (a.empty() || b.empty()) return 0;
  std::vector<std::size_t> prev(b.size() + 1, 0);
  std::vector<std::size_t> cur(b.size() + 1, 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1 : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

std::vector<std::size_t> LcsReferencePositions(std::span<const std::string> ref,
                                               std::span<const std::string> hyp) {
  std::vector<std::size_t> positions;
  if (ref.empty() || hyp.empty()) return positions;
  const std::vector<std::size_t> suffix = SuffixLcsTable(ref, hyp);
  const std::size_t width = hyp.size() + 1;
  std::size_t remaining = suffix[0];
  std::size_t i = 0;
  std::size_t j = 0;
  // Greedy on the smallest feasible reference index; its earliest hypothesis
  // match keeps the most room for the rest of the subsequence.
  while (remaining > 0) {
    for (;; ++i) {
      std::size_t k = j;
      while (k < hyp.size() && hyp[k] != ref[i]) ++k;
      if (k < hyp.size() && suffix[(i + 1) * width + (k + 1)] + 1 == remaining) {
        positions.push_back(i);
        j = k + 1;
        ++i;
        --remaining;
        break;
      }
    }
  }
  return positions;
}

double RougeL(std::span<const std::string> ref, std::span<const std::string> hyp) {
  if (ref.empty() && hyp.empty()) return 1.0;
  return F1FromCounts(LcsLength(ref, hyp), ref.size(), hyp.size());
}

double RougeLsum(std::span<const Sentence> ref, std::span<const Sentence> hyp) {
  std::unordered_map<std::string_view, std::size_t> ref_counts;
  std::unordered_map<std::string_view, std::size_t> hyp_counts;
  std::size_t ref_total = 0;
  std::size_t hyp_total = 0;
  for (const Sentence& s : ref) {
    ref_total += s.size();
    for (const std::string& t : s) ++ref_counts[t];
  }
  for (const Sentence& s : hyp) {
    hyp_total += s.size();
    for (const std::string& t : s) ++hyp_counts[t];
  }
  if (ref_total == 0 && hyp_total == 0) return 1.0;
  if (ref_total == 0 || hyp_total == 0) return 0.0;

  std::size_t hits = 0;
  for (const Sentence& r : ref) {
    std::vector<bool> in_union(r.size(), false);
    for (const Sentence& h : hyp) {
      for (std::size_t p : LcsReferencePositions(r, h)) in_union[p] = true;
    }
    for (std::size_t p = 0; p < r.size(); ++p) {
      if (!in_union[p]) continue;
      std::size_t& rc = ref_counts[r[p]];
      std::size_t& hc = hyp_counts[r[p]];
      if (rc > 0 && hc > 0) {
        ++hits;
        --rc;
        --hc;
      }
    }
  }
  return F1FromCounts(hits, ref_total, hyp_total);
}

MetricVector ScorePair(const DocumentPair& pair,
                       const NormalizationPolicy& policy) {
  const std::string ref = Normalize(pair.reference, policy);
  const std::string hyp = Normalize(pair.hypothesis, policy);
  const std::u32string ref_chars = DecodeUtf8(ref);
  const std::u32string hyp_chars = DecodeUtf8(hyp);
  const std::vector<std::string> ref_tokens = TokenizeWords(ref);
  const std::vector<std::string> hyp_tokens = TokenizeWords(hyp);

  auto sentences = [](const std::string& text) {
    std::vector<Sentence> out;
    for (const std::string& line : SplitSentences(text)) {
      out.push_back(TokenizeWords(line));
    }
    return out;
  };

  MetricVector v;
  v.levenshtein = static_cast<double>(Levenshtein(ref_chars, hyp_chars));
  v.wer = WordErrorRate(ref_tokens, hyp_tokens);
  v.ned = NormalizedEditDistance(ref_chars, hyp_chars);
  v.bleu = Bleu(ref_tokens, hyp_tokens);
  v.rouge1 = Rouge1(ref_tokens, hyp_tokens);
  v.rouge2 = Rouge2(ref_tokens, hyp_tokens);
  v.rougeL = RougeL(ref_tokens, hyp_tokens);
  v.rougeLsum = RougeLsum(sentences(ref), sentences(hyp));
  return v;
}

MetricVector Aggregate(std::span<const MetricVector> vectors) {
  if (vectors.empty()) throw ValidationError("no documents scored");
  MetricVector mean;
  std::vector<double> values(vectors.size());
  for (const MetricSpec& spec : kMetricSpecs) {
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      values[i] = vectors[i].Get(spec.metric);
    }
    // Sorting makes the sum independent of corpus order; shifting by the
    // minimum keeps a constant column exactly equal to its value.
    std::sort(values.begin(), values.end());
    const double base = values.front();
    double sum = 0.0;
    double compensation = 0.0;
    for (double x : values) {
      const double term = x - base;
      const double t = sum + term;
      compensation += std::abs(sum) >= std::abs(term) ? (sum - t) + term
                                                      : (term - t) + sum;
      sum = t;
    }
    mean.Set(spec.metric,
             base + (sum + compensation) / static_cast<double>(values.size()));
  }
  return mean;
}

}  // namespace ocrbench
