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

#include <fmt/format.h>

#include <algorithm>

#include "json.hpp"
#include "ocrbench/csv.h"
#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"

namespace ocrbench {
namespace {

csv::Row MetricHeader(std::string first) {
  csv::Row header{std::move(first)};
  for (const MetricSpec& spec : kMetricSpecs) header.emplace_back(spec.name);
  return header;
}

// Maps each metric to its column in `header`; the first column is the key.
std::array<std::size_t, kNumMetrics> MetricColumns(const csv::Row& header,
                                                   std::string_view what) {
  std::array<std::size_t, kNumMetrics> columns{};
  std::array<bool, kNumMetrics> found{};
  for (std::size_t c = 1; c < header.size(); ++c) {
    auto metric = MetricFromName(header[c]);
    if (!metric) {
      throw ValidationError(std::string(what) + ": unknown column " + header[c]);
    }
    const auto idx = static_cast<std::size_t>(*metric);
    if (found[idx]) {
      throw ValidationError(std::string(what) + ": duplicate column " + header[c]);
    }
    columns[idx] = c;
    found[idx] = true;
  }
  for (const MetricSpec& spec : kMetricSpecs) {
    if (!found[static_cast<std::size_t>(spec.metric)]) {
      throw ValidationError(std::string(what) + ": missing column " +
                            std::string(spec.name));
    }
  }
  return columns;
}

MetricVector ParseMetrics(const csv::Row& row,
                          const std::array<std::size_t, kNumMetrics>& columns,
                          std::size_t width, std::string_view what) {
  if (row.size() != width) {
    throw ValidationError(std::string(what) + ": row '" + row.front() + "' has " +
                          std::to_string(row.size()) + " fields, expected " +
                          std::to_string(width));
  }
  MetricVector v;
  for (const MetricSpec& spec : kMetricSpecs) {
    v.Set(spec.metric, csv::ParseDouble(row[columns[static_cast<std::size_t>(spec.metric)]]));
  }
  return v;
}

std::vector<std::size_t> RankedIndices(const std::vector<LeaderboardRow>& rows,
                                       Metric metric) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const double va = rows[a].scores.Get(metric);
    const double vb = rows[b].scores.Get(metric);
    if (Better(metric, va, vb)) return true;
    if (Better(metric, vb, va)) return false;
    return rows[a].team_run < rows[b].team_run;
  });
  return order;
}

}  // namespace

bool Better(Metric metric, double a, double b) {
  return SpecFor(metric).direction == Direction::kLowerIsBetter ? a < b : a > b;
}

std::vector<LeaderboardRow> Rank(std::vector<LeaderboardRow> rows, Metric metric) {
  std::vector<LeaderboardRow> out;
  out.reserve(rows.size());
  for (std::size_t i : RankedIndices(rows, metric)) out.push_back(std::move(rows[i]));
  return out;
}

std::size_t RankOf(const std::vector<LeaderboardRow>& rows, Metric metric,
                   std::string_view team_run) {
  const std::vector<std::size_t> order = RankedIndices(rows, metric);
  for (std::size_t pos = 0; pos < order.size(); ++pos) {
    if (rows[order[pos]].team_run == team_run) return pos + 1;
  }
  return 0;
}

std::vector<LeaderboardRow> ParseLeaderboardCsv(std::string_view text) {
  const std::vector<csv::Row> table = csv::Parse(text);
  if (table.empty()) throw ValidationError("leaderboard csv: no header");
  const auto columns = MetricColumns(table.front(), "leaderboard csv");
  std::vector<LeaderboardRow> rows;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const csv::Row& row = table[r];
    if (row.size() == 1 && row.front().empty()) continue;
    rows.push_back({row.front(),
                    ParseMetrics(row, columns, table.front().size(), "leaderboard csv")});
  }
  return rows;
}

std::string FormatLeaderboardCsv(const std::vector<LeaderboardRow>& rows) {
  std::string out = csv::FormatRow(MetricHeader("TEAM"));
  for (const LeaderboardRow& row : rows) {
    csv::Row fields{row.team_run};
    for (const MetricSpec& spec : kMetricSpecs) {
      fields.push_back(csv::FormatDouble(row.scores.Get(spec.metric)));
    }
    out += csv::FormatRow(fields);
  }
  return out;
}

std::string FormatLeaderboardTable(const std::vector<LeaderboardRow>& rows) {
  std::vector<csv::Row> cells;
  cells.push_back(MetricHeader("TEAM"));
  for (const LeaderboardRow& row : rows) {
    csv::Row fields{row.team_run};
    for (const MetricSpec& spec : kMetricSpecs) {
      fields.push_back(fmt::format("{:.4f}", row.scores.Get(spec.metric)));
    }
    cells.push_back(std::move(fields));
  }
  std::vector<std::size_t> widths(cells.front().size(), 0);
  for (const csv::Row& r : cells) {
    for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], r[c].size());
  }
  std::string out;
  for (const csv::Row& r : cells) {
    std::string line = fmt::format("{:<{}}", r[0], widths[0]);
    for (std::size_t c = 1; c < r.size(); ++c) {
      line += fmt::format("  {:>{}}", r[c], widths[c]);
    }
    out += line + "\n";
  }
  return out;
}

FileScores ParseFileScoresCsv(std::string_view text) {
  const std::vector<csv::Row> table = csv::Parse(text);
  if (table.empty()) throw ValidationError("scores csv: no header");
  const auto columns = MetricColumns(table.front(), "scores csv");
  FileScores scores;
  for (std::size_t r = 1; r < table.size(); ++r) {
    const csv::Row& row = table[r];
    if (row.size() == 1 && row.front().empty()) continue;
    if (!scores.emplace(row.front(), ParseMetrics(row, columns, table.front().size(),
                                                  "scores csv"))
             .second) {
      throw ValidationError("scores csv: duplicate id " + row.front());
    }
  }
  return scores;
}

std::string FormatFileScoresCsv(
    const std::vector<std::pair<std::string, MetricVector>>& rows) {
  std::vector<const std::pair<std::string, MetricVector>*> sorted;
  for (const auto& r : rows) sorted.push_back(&r);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](auto* a, auto* b) { return IdLess(a->first, b->first); });
  std::string out = csv::FormatRow(MetricHeader("id"));
  for (const auto* r : sorted) {
    csv::Row fields{r->first};
    for (const MetricSpec& spec : kMetricSpecs) {
      fields.push_back(csv::FormatDouble(r->second.Get(spec.metric)));
    }
    out += csv::FormatRow(fields);
  }
  return out;
}

WorstFileReport WorstFiles(const FileScores& per_file, std::size_t n,
                           std::size_t threshold) {
  if (n == 0) throw ValidationError("worst files: n must be at least 1");
  if (threshold == 0) throw ValidationError("worst files: threshold must be at least 1");
  WorstFileReport report;
  report.n = n;
  report.threshold = threshold;

  std::vector<const FileScores::value_type*> files;
  for (const auto& entry : per_file) files.push_back(&entry);
  std::map<std::string, std::size_t> appearances;

  for (const MetricSpec& spec : kMetricSpecs) {
    std::vector<const FileScores::value_type*> order = files;
    std::sort(order.begin(), order.end(), [&](auto* a, auto* b) {
      const double va = a->second.Get(spec.metric);
      const double vb = b->second.Get(spec.metric);
      // Worst first is "better" reversed.
      if (Better(spec.metric, vb, va)) return true;
      if (Better(spec.metric, va, vb)) return false;
      return IdLess(a->first, b->first);
    });
    auto& bottom = report.per_metric_bottom[static_cast<std::size_t>(spec.metric)];
    for (std::size_t i = 0; i < order.size() && i < n; ++i) {
      bottom.push_back(order[i]->first);
      ++appearances[order[i]->first];
    }
  }
  for (const auto& [id, count] : appearances) {
    if (count > threshold) report.flagged.emplace_back(id, count);
  }
  std::sort(report.flagged.begin(), report.flagged.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return IdLess(a.first, b.first);
  });
  return report;
}

std::string FormatWorstFileText(const WorstFileReport& report) {
  std::string out;
  for (const MetricSpec& spec : kMetricSpecs) {
    out += fmt::format("{:<10} ", spec.name);
    const auto& ids = report.per_metric_bottom[static_cast<std::size_t>(spec.metric)];
    for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? " " : "") + ids[i];
    out += "\n";
  }
  out += fmt::format("flagged (on more than {} of {} lists): {}\n", report.threshold,
                     kNumMetrics, report.flagged.size());
  for (const auto& [id, count] : report.flagged) out += fmt::format("  {} {}\n", id, count);
  return out;
}

std::string FormatWorstFileJson(const WorstFileReport& report) {
  nlohmann::ordered_json doc;
  doc["n"] = report.n;
  doc["threshold"] = report.threshold;
  nlohmann::ordered_json bottom = nlohmann::ordered_json::object();
  for (const MetricSpec& spec : kMetricSpecs) {
    bottom[std::string(spec.name)] =
        report.per_metric_bottom[static_cast<std::size_t>(spec.metric)];
  }
  doc["bottom"] = std::move(bottom);
  nlohmann::ordered_json flagged = nlohmann::ordered_json::array();
  for (const auto& [id, count] : report.flagged) {
    flagged.push_back({{"id", id}, {"count", count}});
  }
  doc["flagged"] = std::move(flagged);
  return doc.dump(2) + "\n";
}

std::string FormatScatterCsv(const std::vector<LeaderboardRow>& rows) {
  std::string out = csv::FormatRow({"metric", "rank", "run", "value"});
  for (const MetricSpec& spec : kMetricSpecs) {
    const std::vector<LeaderboardRow> ranked = Rank(rows, spec.metric);
    for (std::size_t i = 0; i < ranked.size(); ++i) {
      out += csv::FormatRow({std::string(spec.name), std::to_string(i + 1),
                             ranked[i].team_run,
                             csv::FormatDouble(ranked[i].scores.Get(spec.metric))});
    }
  }
  return out;
}

}  // namespace ocrbench
