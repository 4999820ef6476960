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

#include "ocrbench/score_corpus.h"

#include <gtest/gtest.h>

#include <cstring>
#include <random>

namespace ocrbench {
namespace {

std::vector<DocumentPair> RandomCorpus(std::size_t n, std::uint64_t seed) {
  static const std::vector<std::string> kWords = {"el", "la", "casa", "año", "rey", "Mathe-",
                                                  "máticas", "de", "\n", "\n"};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> len(0, 40);
  std::uniform_int_distribution<std::size_t> pick(0, kWords.size() - 1);
  auto text = [&] {
    std::string s;
    for (std::size_t i = len(rng); i > 0; --i) s += kWords[pick(rng)] + " ";
    return s;
  };
  std::vector<DocumentPair> pairs;
  for (std::size_t i = 0; i < n; ++i) {
    pairs.push_back({std::to_string(i), text(), text(), {}, {}});
  }
  return pairs;
}

bool BitIdentical(const std::vector<MetricVector>& a, const std::vector<MetricVector>& b) {
  if (a.size() != b.size()) return false;
  return a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(MetricVector)) == 0;
}

TEST(ScoreCorpusTest, ParallelIsBitIdenticalToSerial) {
  const auto pairs = RandomCorpus(300, 42);
  for (bool dehyphenate : {false, true}) {
    NormalizationPolicy policy;
    policy.dehyphenate = dehyphenate;
    const auto serial = ScoreCorpusSerial(pairs, policy);
    for (int threads : {1, 2, 3, 8, 0}) {
      EXPECT_TRUE(BitIdentical(serial, ScoreCorpusParallel(pairs, policy, threads)))
          << "threads=" << threads;
    }
  }
}

TEST(ScoreCorpusTest, SlotMatchesScorePair) {
  const auto pairs = RandomCorpus(20, 1);
  const auto scores = ScoreCorpusParallel(pairs, {});
  for (std::size_t i = 0; i < pairs.size(); ++i) EXPECT_EQ(scores[i], ScorePair(pairs[i], {}));
}

TEST(ScoreCorpusTest, EmptyCorpus) {
  EXPECT_TRUE(ScoreCorpusSerial({}, {}).empty());
  EXPECT_TRUE(ScoreCorpusParallel({}, {}).empty());
}

TEST(ScoreCorpusTest, AggregateDoesNotDependOnOrder) {
  auto pairs = RandomCorpus(100, 5);
  const MetricVector before = Aggregate(ScoreCorpusParallel(pairs, {}));
  std::reverse(pairs.begin(), pairs.end());
  EXPECT_EQ(Aggregate(ScoreCorpusParallel(pairs, {})), before);
}

}  // namespace
}  // namespace ocrbench
