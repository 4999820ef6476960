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

#include "ocrbench/analysis.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"

namespace ocrbench {
namespace {

MetricVector Uniform(double x) {
  MetricVector v;
  for (const auto& spec : kMetricSpecs) v.Set(spec.metric, x);
  return v;
}

std::vector<LeaderboardRow> RandomRows(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> u(0, 5);  // small range forces ties
  std::vector<LeaderboardRow> rows;
  for (std::size_t i = 0; i < n; ++i) {
    MetricVector v;
    for (const auto& spec : kMetricSpecs) v.Set(spec.metric, u(rng) / 5.0);
    rows.push_back({"run" + std::to_string(i), v});
  }
  return rows;
}

TEST(RankTest, DirectionRespected) {
  MetricVector good = PerfectVector();
  MetricVector bad = Uniform(0.5);
  bad.levenshtein = 30;
  const std::vector<LeaderboardRow> rows{{"bad", bad}, {"good", good}};
  for (const auto& spec : kMetricSpecs) {
    EXPECT_EQ(Rank(rows, spec.metric).front().team_run, "good") << spec.name;
    EXPECT_EQ(RankOf(rows, spec.metric, "bad"), 2u);
  }
  EXPECT_EQ(RankOf(rows, Metric::kWer, "absent"), 0u);
}

TEST(RankTest, PermutationWithRunIdTieBreak) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto rows = RandomRows(rng, 9);
    for (const auto& spec : kMetricSpecs) {
      auto ranked = Rank(rows, spec.metric);
      ASSERT_EQ(ranked.size(), rows.size());
      std::vector<std::string> a;
      std::vector<std::string> b;
      for (const auto& r : rows) a.push_back(r.team_run);
      for (const auto& r : ranked) b.push_back(r.team_run);
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      ASSERT_EQ(a, b);
      for (std::size_t i = 1; i < ranked.size(); ++i) {
        const double prev = ranked[i - 1].scores.Get(spec.metric);
        const double cur = ranked[i].scores.Get(spec.metric);
        ASSERT_FALSE(Better(spec.metric, cur, prev));
        if (prev == cur) ASSERT_LT(ranked[i - 1].team_run, ranked[i].team_run);
      }
      // Input order does not matter.
      std::shuffle(rows.begin(), rows.end(), rng);
      ASSERT_EQ(Rank(rows, spec.metric), ranked);
    }
  }
}

TEST(RankTest, OppositeDirectionsReverseValueOrder) {
  std::mt19937_64 rng(2);
  auto rows = RandomRows(rng, 12);
  // WER ranks ascending, BLEU descending: with BLEU set to WER, the value
  // sequences are reverses of each other.
  for (auto& r : rows) r.scores.bleu = r.scores.wer;
  std::vector<double> asc;
  std::vector<double> desc;
  for (const auto& r : Rank(rows, Metric::kWer)) asc.push_back(r.scores.wer);
  for (const auto& r : Rank(rows, Metric::kBleu)) desc.push_back(r.scores.bleu);
  std::reverse(desc.begin(), desc.end());
  EXPECT_EQ(asc, desc);
}

TEST(LeaderboardCsvTest, RoundTripAndColumnOrder) {
  const std::vector<LeaderboardRow> rows{{"A_run1", Uniform(0.125)}, {"B,quoted", Uniform(1)}};
  const std::string csv = FormatLeaderboardCsv(rows);
  EXPECT_TRUE(csv.starts_with("TEAM,LEVENSHTEIN,WER,NED,BLEU,ROUGE1,ROUGE2,ROUGEL,ROUGELSUM\n"));
  EXPECT_EQ(ParseLeaderboardCsv(csv), rows);
}

TEST(LeaderboardCsvTest, ColumnsInAnyOrder) {
  const auto rows = ParseLeaderboardCsv(
      "TEAM,ROUGELSUM,ROUGEL,ROUGE2,ROUGE1,BLEU,NED,WER,LEVENSHTEIN\nX,8,7,6,5,4,3,2,1\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].scores.levenshtein, 1);
  EXPECT_EQ(rows[0].scores.rougeLsum, 8);
}

TEST(LeaderboardCsvTest, Malformed) {
  EXPECT_THROW(ParseLeaderboardCsv(""), ValidationError);
  EXPECT_THROW(ParseLeaderboardCsv("TEAM,WER\nx,1\n"), ValidationError);
  EXPECT_THROW(ParseLeaderboardCsv(
                   "TEAM,LEVENSHTEIN,WER,NED,BLEU,ROUGE1,ROUGE2,ROUGEL,ROUGELSUM\nx,1,2\n"),
               ValidationError);
  EXPECT_THROW(ParseLeaderboardCsv(
                   "TEAM,LEVENSHTEIN,WER,NED,BLEU,ROUGE1,ROUGE2,ROUGEL,ROUGELSUM\n"
                   "x,1,2,3,4,5,6,7,abc\n"),
               ValidationError);
}

TEST(LeaderboardTableTest, FourDecimals) {
  MetricVector v = Uniform(0.23441);
  v.levenshtein = 56.30234;
  const std::string table = FormatLeaderboardTable({{"OCRTITS_run1", v}});
  EXPECT_NE(table.find("56.3023"), std::string::npos);
  EXPECT_NE(table.find("0.2344"), std::string::npos);
  EXPECT_TRUE(table.starts_with("TEAM"));
}

TEST(ScatterTest, ShapeAndFirstPlace) {
  std::mt19937_64 rng(3);
  const auto rows = RandomRows(rng, 7);
  const std::string csv = FormatScatterCsv(rows);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 7 * 8);
  EXPECT_EQ(FormatScatterCsv({}), "metric,rank,run,value\n");
  const std::string one = FormatScatterCsv({{"solo", Uniform(0.5)}});
  EXPECT_EQ(std::count(one.begin(), one.end(), '\n'), 9);
  EXPECT_EQ(one.find(",2,"), std::string::npos);
}

// Brute-force reference for the flagged set.
std::set<std::string> BruteFlagged(const FileScores& files, std::size_t n, std::size_t threshold) {
  std::map<std::string, std::size_t> count;
  for (const auto& spec : kMetricSpecs) {
    for (const auto& [id, v] : files) {
      // Number of files strictly worse, or equally bad and ordered first.
      std::size_t ahead = 0;
      for (const auto& [oid, ov] : files) {
        if (oid == id) continue;
        const double a = v.Get(spec.metric);
        const double b = ov.Get(spec.metric);
        if (Better(spec.metric, a, b) || (a == b && IdLess(oid, id))) ++ahead;
      }
      if (ahead < n) ++count[id];
    }
  }
  std::set<std::string> out;
  for (const auto& [id, c] : count) {
    if (c > threshold) out.insert(id);
  }
  return out;
}

TEST(WorstFilesTest, MatchesBruteForce) {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> u(0, 4);
  for (int trial = 0; trial < 60; ++trial) {
    FileScores files;
    for (int i = 0; i < 25; ++i) {
      MetricVector v;
      for (const auto& spec : kMetricSpecs) v.Set(spec.metric, u(rng) / 4.0);
      files[std::to_string(i)] = v;
    }
    for (std::size_t n : {1u, 3u, 10u}) {
      for (std::size_t threshold : {1u, 4u, 7u}) {
        const WorstFileReport r = WorstFiles(files, n, threshold);
        std::set<std::string> got;
        for (const auto& [id, c] : r.flagged) got.insert(id);
        ASSERT_EQ(got, BruteFlagged(files, n, threshold));
        for (const auto& list : r.per_metric_bottom) ASSERT_EQ(list.size(), n);
      }
    }
  }
}

TEST(WorstFilesTest, SmallCorpusAndErrors) {
  FileScores files{{"1", Uniform(0.5)}, {"2", Uniform(0.25)}};
  const WorstFileReport r = WorstFiles(files, 10, 4);
  EXPECT_EQ(r.per_metric_bottom[0].size(), 2u);
  EXPECT_EQ(r.flagged.size(), 2u);  // both on all eight lists
  EXPECT_THROW(WorstFiles(files, 0, 4), ValidationError);
  EXPECT_THROW(WorstFiles(files, 10, 0), ValidationError);
}

TEST(WorstFilesTest, JsonAndText) {
  FileScores files{{"1", Uniform(0.5)}};
  const WorstFileReport r = WorstFiles(files, 1, 4);
  const std::string json = FormatWorstFileJson(r);
  EXPECT_NE(json.find("\"ROUGELSUM\""), std::string::npos);
  EXPECT_NE(json.find("\"count\": 8"), std::string::npos);
  EXPECT_NE(FormatWorstFileText(r).find("flagged"), std::string::npos);
}

TEST(FileScoresCsvTest, RoundTripSortedById) {
  std::vector<std::pair<std::string, MetricVector>> rows{
      {"10", Uniform(0.1)}, {"9", Uniform(0.2)}, {"b", Uniform(0.3)}};
  const std::string csv = FormatFileScoresCsv(rows);
  EXPECT_LT(csv.find("\n9,"), csv.find("\n10,"));
  EXPECT_LT(csv.find("\n10,"), csv.find("\nb,"));
  const FileScores parsed = ParseFileScoresCsv(csv);
  EXPECT_EQ(parsed.at("9"), Uniform(0.2));
  EXPECT_THROW(ParseFileScoresCsv(csv + "9,1,1,1,1,1,1,1,1\n"), ValidationError);
}

}  // namespace
}  // namespace ocrbench
