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

#include "ocrbench/cli.h"

#include <gtest/gtest.h>

#include "ocrbench/analysis.h"
#include "ocrbench/corpus.h"
#include "ocrbench/footprint.h"
#include "ocrbench/metrics.h"
#include "test_util.h"

namespace ocrbench {
namespace {

using testing::Cli;
using testing::ListTree;
using testing::ReadText;
using testing::TempDir;
using testing::WriteScript;
using testing::WriteText;

// Workspace whose config points the rasterizer and engine at shell fakes.
void WriteFakeConfig(const TempDir& ws) {
  WriteScript(ws / "bin/raster", "n=$(cat \"$1\")\ni=1\n"
                                 "while [ $i -le $n ]; do echo p$i > \"$2-$i.tif\"; i=$((i+1)); done\n");
  WriteScript(ws / "bin/ocr", "tr a-z A-Z < \"$1\" > \"$2.txt\"\n");
  WriteText(ws / "ocrbench.json",
            "{\"rasterizer\": {\"command\": \"" + (ws / "bin/raster").string() +
                " {input} {output_base}\"},\n"
                " \"engines\": [{\"name\": \"upper\", \"default\": true, \"command\": \"" +
                (ws / "bin/ocr").string() + " {input} {output_base} {model}\", \"model\": \"x\"}]}\n");
}

TEST(CliTest, HelpAndBadFlags) {
  EXPECT_EQ(Cli({"--help"}).code, kExitOk);
  EXPECT_EQ(Cli({}).code, kExitValidation);
  EXPECT_EQ(Cli({"score"}).code, kExitValidation);  // --hyp-dir required
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitValidation);
  EXPECT_EQ(Cli({"geometry", "--width", "10"}).code, kExitValidation);
}

TEST(CliTest, PrepareFailsBeforeMutationWithoutPdfDir) {
  TempDir ws;
  WriteText(ws / "train/ocr/1.txt", "uno");
  const auto r = Cli({"--workspace", ws.path().string(), "prepare"});
  EXPECT_EQ(r.code, kExitEnvironment);
  EXPECT_EQ(ListTree(ws.path()), std::vector<std::string>{"train/ocr/1.txt"});
}

TEST(CliTest, PrepareBuildsLayoutAndIsIdempotent) {
  TempDir ws;
  WriteFakeConfig(ws);
  WriteText(ws / "train/pdf/9100.pdf", "1");
  WriteText(ws / "train/pdf/9101.pdf", "2");
  WriteText(ws / "train/ocr/9100.txt", "uno");
  WriteText(ws / "train/ocr/9101.gt.txt", "dos");
  const auto first = Cli({"--workspace", ws.path().string(), "prepare"});
  ASSERT_EQ(first.code, kExitOk) << first.err;
  EXPECT_TRUE(fs::exists(ws / "train/ocr/9100.gt.txt"));
  EXPECT_TRUE(fs::exists(ws / "train/tiff/9100.tiff"));
  EXPECT_TRUE(fs::exists(ws / "train/tiff/9101-2.tiff"));
  EXPECT_TRUE(fs::is_directory(ws / "train/lstmf"));
  EXPECT_TRUE(fs::exists(ws / "train/list.txt"));
  EXPECT_TRUE(fs::exists(ws / "finetuning/hyperparameters.conf"));
  EXPECT_NE(first.out.find("rasterized 9101.pdf -> 2 page(s)"), std::string::npos);

  const auto tree = ListTree(ws.path());
  const auto second = Cli({"--workspace", ws.path().string(), "prepare"});
  ASSERT_EQ(second.code, kExitOk);
  EXPECT_EQ(second.out, "0 change(s)\n");
  EXPECT_EQ(ListTree(ws.path()), tree);
}

TEST(CliTest, PrepareRejectsMissingRasterizer) {
  TempDir ws;
  WriteText(ws / "ocrbench.json", R"({"rasterizer": {"command": "no-such-raster {input} {output_base}"}})");
  WriteText(ws / "train/pdf/1.pdf", "1");
  WriteText(ws / "train/ocr/1.txt", "x");
  EXPECT_EQ(Cli({"--workspace", ws.path().string(), "prepare"}).code, kExitEnvironment);
  EXPECT_TRUE(fs::exists(ws / "train/ocr/1.txt"));
  EXPECT_FALSE(fs::exists(ws / "train/tiff"));
}

TEST(CliTest, RunWritesOutputsReportAndFootprint) {
  TempDir ws;
  WriteFakeConfig(ws);
  WriteText(ws / "train/tiff/1.tiff", "abc");
  WriteText(ws / "train/tiff/2.tiff", "de");
  const auto r = Cli({"--workspace", ws.path().string(), "run", "-j", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(ReadText(ws / "runs/upper/1.txt"), "ABC");
  EXPECT_TRUE(fs::exists(ws / "runs/upper/run_report.csv"));
  const auto log = EstimateLog(ws / "footprint.csv").ReadAll();
  ASSERT_EQ(log.size(), 1u);
  EXPECT_EQ(log[0].run_label, "upper");
  EXPECT_EQ(log[0].n_examples, 2u);
  EXPECT_EQ(Cli({"--workspace", ws.path().string(), "run", "--engine", "nope"}).code,
            kExitValidation);
}

TEST(CliTest, ScoreIdenticalDirsIsPerfect) {
  TempDir ws;
  WriteText(ws / "ref/1.gt.txt", "Hola mundo\ncasa");
  WriteText(ws / "ref/2.gt.txt", "");
  WriteText(ws / "hyp/1.txt", "Hola mundo\ncasa");
  WriteText(ws / "hyp/2.txt", "");
  const auto r = Cli({"--workspace", ws.path().string(), "score", "--ref-dir",
                      (ws / "ref").string(), "--hyp-dir", (ws / "hyp").string(), "--summary",
                      (ws / "sum.csv").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = ParseLeaderboardCsv(ReadText(ws / "sum.csv"));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].team_run, "hyp");
  EXPECT_EQ(rows[0].scores, PerfectVector());
}

TEST(CliTest, ScoreRowsMatchScorePairAndPoliciesDiffer) {
  TempDir ws;
  const std::vector<std::pair<std::string, std::string>> docs{
      {"Mathe-\nmáticas y\ncosas", "Mathemáticas y cosas"},
      {"el rey\nDon Pedro", "el rey Don\nPedro"},
      {"línea uno\nlínea dos", "linea uno\nlínea dos"}};
  for (std::size_t i = 0; i < docs.size(); ++i) {
    WriteText(ws / ("ref/" + std::to_string(i) + ".gt.txt"), docs[i].first);
    WriteText(ws / ("hyp/" + std::to_string(i) + ".txt"), docs[i].second);
  }
  WriteText(ws / "hyp/extra.txt", "orphan");
  std::map<std::string, FileScores> by_policy;
  for (const std::string policy : {"preserve", "join"}) {
    const fs::path out = ws / ("scores-" + policy + ".csv");
    const auto r = Cli({"--workspace", ws.path().string(), "score", "--ref-dir",
                        (ws / "ref").string(), "--hyp-dir", (ws / "hyp").string(), "--policy",
                        policy, "--out", out.string()});
    ASSERT_EQ(r.code, kExitOk) << r.err;
    EXPECT_NE(r.err.find("unmatched hypothesis: extra"), std::string::npos);
    by_policy[policy] = ParseFileScoresCsv(ReadText(out));
    for (std::size_t i = 0; i < docs.size(); ++i) {
      DocumentPair pair{std::to_string(i), docs[i].first, docs[i].second, {}, {}};
      EXPECT_EQ(by_policy[policy].at(pair.id), ScorePair(pair, *NamedPolicy(policy)));
    }
  }
  EXPECT_NE(ReadText(ws / "scores-preserve.csv"), ReadText(ws / "scores-join.csv"));

  const auto serial = Cli({"--workspace", ws.path().string(), "score", "--ref-dir",
                           (ws / "ref").string(), "--hyp-dir", (ws / "hyp").string(),
                           "--serial", "--out", (ws / "serial.csv").string()});
  ASSERT_EQ(serial.code, kExitOk);
  EXPECT_EQ(ReadText(ws / "serial.csv"), ReadText(ws / "scores-preserve.csv"));
}

TEST(CliTest, ScoreMissingDirIsEnvironmentError) {
  TempDir ws;
  EXPECT_EQ(Cli({"--workspace", ws.path().string(), "score", "--hyp-dir",
                 (ws / "none").string()})
                .code,
            kExitEnvironment);
}

TEST(CliTest, LeaderboardAcceptsBothFileKinds) {
  TempDir ws;
  MetricVector a = PerfectVector();
  a.levenshtein = 3;
  MetricVector b = PerfectVector();
  b.levenshtein = 1;
  WriteText(ws / "board.csv", FormatLeaderboardCsv({{"A", a}}));
  WriteText(ws / "B.scores.csv", FormatFileScoresCsv({{"1", b}, {"2", b}}));
  const auto r = Cli({"leaderboard", (ws / "board.csv").string(),
                      (ws / "B.scores.csv").string(), "--csv", (ws / "out.csv").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto rows = ParseLeaderboardCsv(ReadText(ws / "out.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].team_run, "B");
  EXPECT_EQ(Cli({"leaderboard", (ws / "board.csv").string(), "--metric", "CER"}).code,
            kExitValidation);
  EXPECT_EQ(Cli({"leaderboard", (ws / "board.csv").string(), (ws / "board.csv").string()}).code,
            kExitValidation);
}

TEST(CliTest, ChatExportOnePair) {
  TempDir ws;
  WriteText(ws / "train/ocr/9100.gt.txt", "Texto");
  WriteText(ws / "img/9100.png", "png");
  const auto r = Cli({"--workspace", ws.path().string(), "chat-export", "--images",
                      (ws / "img").string(), "--out", (ws / "chat.jsonl").string(),
                      "--finetune-config", (ws / "hp.conf").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string jsonl = ReadText(ws / "chat.jsonl");
  EXPECT_EQ(std::count(jsonl.begin(), jsonl.end(), '\n'), 1);
  EXPECT_EQ(ChatRecordFromJson(jsonl.substr(0, jsonl.size() - 1)).assistant_text, "Texto");
  EXPECT_EQ(ParseFineTuneConfig(ReadText(ws / "hp.conf")), FineTuneConfig{});
}

TEST(CliTest, ChatExportSplit) {
  TempDir ws;
  for (int i = 0; i < 10; ++i) {
    WriteText(ws / ("train/ocr/" + std::to_string(i) + ".gt.txt"), "t");
    WriteText(ws / ("img/" + std::to_string(i) + ".png"), "p");
  }
  const auto r = Cli({"--workspace", ws.path().string(), "chat-export", "--images",
                      (ws / "img").string(), "--out", (ws / "train.jsonl").string(),
                      "--test-out", (ws / "test.jsonl").string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const std::string train = ReadText(ws / "train.jsonl");
  const std::string test = ReadText(ws / "test.jsonl");
  EXPECT_EQ(std::count(train.begin(), train.end(), '\n'), 9);
  EXPECT_EQ(std::count(test.begin(), test.end(), '\n'), 1);
}

TEST(CliTest, FootprintRecordAndExport) {
  TempDir ws;
  const std::string root = ws.path().string();
  ASSERT_EQ(Cli({"--workspace", root, "footprint", "record", "--run", "granite", "--phase",
                 "finetune", "--duration", "7200", "--power", "250", "--intensity", "0.25",
                 "--examples", "3000"})
                .code,
            kExitOk);
  ASSERT_EQ(Cli({"--workspace", root, "footprint", "record", "--run", "transkribus",
                 "--duration", "10800", "--no-energy"})
                .code,
            kExitOk);
  EXPECT_EQ(Cli({"--workspace", root, "footprint", "record", "--run", "x", "--phase", "train",
                 "--duration", "1"})
                .code,
            kExitValidation);
  EXPECT_EQ(Cli({"--workspace", root, "footprint", "record", "--run", "x", "--duration", "-1"})
                .code,
            kExitValidation);
  const auto log = EstimateLog(ws / "footprint.csv").ReadAll();
  ASSERT_EQ(log.size(), 2u);
  EXPECT_EQ(*log[0].energy_kwh, 0.5);
  EXPECT_FALSE(log[1].energy_kwh.has_value());
  const auto e = Cli({"--workspace", root, "footprint", "export"});
  ASSERT_EQ(e.code, kExitOk);
  EXPECT_EQ(e.out, FormatLogScaleCsv(log));
}

TEST(CliTest, Geometry) {
  const auto r = Cli({"geometry", "--width", "828", "--height", "1170"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("scaled=414x585\npad_right=0\npad_bottom=0\n"), std::string::npos);
  EXPECT_EQ(Cli({"geometry", "--width", "0", "--height", "5"}).code, kExitValidation);
}

}  // namespace
}  // namespace ocrbench
