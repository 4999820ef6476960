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

#ifndef OCRBENCH_ANALYSIS_H_
#define OCRBENCH_ANALYSIS_H_

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocrbench/metrics.h"

namespace ocrbench {

struct LeaderboardRow {
  std::string team_run;
  MetricVector scores;

  bool operator==(const LeaderboardRow&) const = default;
};

// True when `a` scores strictly better than `b` on `metric`.
bool Better(Metric metric, double a, double b);

// Best first: ascending for lower-is-better metrics, descending otherwise.
// Equal scores fall back to the run identifier.
std::vector<LeaderboardRow> Rank(std::vector<LeaderboardRow> rows, Metric metric);

// 1-based position of `team_run` in Rank(rows, metric); 0 if absent.
std::size_t RankOf(const std::vector<LeaderboardRow>& rows, Metric metric,
                   std::string_view team_run);

// Leaderboard CSV: TEAM,LEVENSHTEIN,WER,NED,BLEU,ROUGE1,ROUGE2,ROUGEL,ROUGELSUM.
std::vector<LeaderboardRow> ParseLeaderboardCsv(std::string_view text);
std::string FormatLeaderboardCsv(const std::vector<LeaderboardRow>& rows);

// Aligned plain-text table, four decimals, leaderboard column order.
std::string FormatLeaderboardTable(const std::vector<LeaderboardRow>& rows);

// Per-file scores CSV: id followed by the eight metric columns.
using FileScores = std::map<std::string, MetricVector>;
FileScores ParseFileScoresCsv(std::string_view text);
// Rows in IdLess order.
std::string FormatFileScoresCsv(const std::vector<std::pair<std::string, MetricVector>>& rows);

struct WorstFileReport {
  std::size_t n = 10;
  std::size_t threshold = 4;
  // Indexed by Metric; worst file first.
  std::array<std::vector<std::string>, kNumMetrics> per_metric_bottom;
  // Files on more than `threshold` lists, by count descending then id.
  std::vector<std::pair<std::string, std::size_t>> flagged;
};

// For every metric, the n worst files by that metric's direction (ties by
// IdLess), then the files that occur on more than `threshold` of the eight
// lists. Corpora smaller than n give full-length lists. Throws
// ValidationError when n or threshold is zero.
WorstFileReport WorstFiles(const FileScores& per_file, std::size_t n = 10,
                           std::size_t threshold = 4);

std::string FormatWorstFileText(const WorstFileReport& report);
std::string FormatWorstFileJson(const WorstFileReport& report);

// Chart data: metric,rank,run,value. One block per metric in leaderboard
// order, best first.
std::string FormatScatterCsv(const std::vector<LeaderboardRow>& rows);

}  // namespace ocrbench

#endif  // OCRBENCH_ANALYSIS_H_
