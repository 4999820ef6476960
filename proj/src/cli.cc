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

#include <fmt/format.h>

#include <algorithm>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "ocrbench/analysis.h"
#include "ocrbench/config.h"
#include "ocrbench/corpus.h"
#include "ocrbench/csv.h"
#include "ocrbench/engines.h"
#include "ocrbench/error.h"
#include "ocrbench/footprint.h"
#include "ocrbench/fsutil.h"
#include "ocrbench/process.h"
#include "ocrbench/score_corpus.h"

namespace ocrbench {
namespace {

struct GlobalOptions {
  std::optional<std::string> workspace;
  std::optional<std::string> config;
};

ToolkitConfig Load(const GlobalOptions& g) {
  const fs::path root = ResolveWorkspaceRoot(g.workspace);
  std::optional<fs::path> file;
  if (g.config) file = fs::path(*g.config);
  return LoadConfig(root, file);
}

std::vector<fs::path> FilesWithExtensions(const fs::path& dir,
                                          std::initializer_list<std::string_view> exts) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw EnvironmentError("not a directory: " + dir.string());
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string ext = entry.path().extension().string();
    if (std::find(exts.begin(), exts.end(), ext) != exts.end()) files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

// Leaderboard CSVs contribute their rows; per-file score CSVs contribute
// one aggregated row named after the file stem.
std::vector<LeaderboardRow> LoadLeaderboardInputs(const std::vector<std::string>& files) {
  std::vector<LeaderboardRow> rows;
  for (const std::string& file : files) {
    const std::string text = ReadFile(file);
    const std::size_t comma = text.find(',');
    const std::string first = text.substr(0, comma);
    if (first == "id") {
      std::vector<MetricVector> vectors;
      for (const auto& [id, v] : ParseFileScoresCsv(text)) vectors.push_back(v);
      rows.push_back({StemBeforeFirstDot(file), Aggregate(vectors)});
    } else {
      for (LeaderboardRow& row : ParseLeaderboardCsv(text)) rows.push_back(std::move(row));
    }
  }
  std::vector<std::string> names;
  for (const LeaderboardRow& r : rows) names.push_back(r.team_run);
  std::sort(names.begin(), names.end());
  if (auto dup = std::adjacent_find(names.begin(), names.end()); dup != names.end()) {
    throw ValidationError("run '" + *dup + "' appears more than once");
  }
  return rows;
}

void WriteOrPrint(const std::optional<std::string>& path, const std::string& content,
                  std::ostream& out) {
  if (path) {
    WriteFileAtomic(*path, content);
  } else {
    out << content;
  }
}

// prepare ------------------------------------------------------------------

int CmdPrepare(const ToolkitConfig& config, std::ostream& out, std::ostream& err) {
  const WorkspaceLayout& w = config.workspace;
  std::error_code ec;
  // Everything that can fail is checked before the first mutation.
  if (!fs::is_directory(w.pdf_dir, ec)) {
    throw EnvironmentError("missing pdf directory " + w.pdf_dir.string());
  }
  if (!fs::is_directory(w.ocr_dir, ec)) {
    throw EnvironmentError("missing transcript directory " + w.ocr_dir.string());
  }
  const RenamePlan plan = PlanGtRenames(w.ocr_dir);
  std::vector<fs::path> pending;
  for (const fs::path& pdf : FilesWithExtensions(w.pdf_dir, {".pdf", ".PDF"})) {
    if (ExistingPages(pdf, w.tiff_dir).empty()) pending.push_back(pdf);
  }
  if (!pending.empty() && config.rasterizer) {
    const std::string tool =
        RenderRasterizerCommand(*config.rasterizer, "in.pdf", "out").front();
    if (!FindExecutable(tool)) {
      throw EnvironmentError("rasterizer executable '" + tool + "' not found");
    }
  }

  std::vector<std::string> changes;
  for (const fs::path* dir : {&w.tiff_dir, &w.lstmf_dir, &w.finetune_dir}) {
    if (!fs::is_directory(*dir, ec)) {
      fs::create_directories(*dir, ec);
      if (ec) throw EnvironmentError("cannot create " + dir->string());
      changes.push_back("created " + dir->lexically_relative(w.root).string() + "/");
    }
  }
  ApplyRenamePlan(plan);
  for (const Rename& r : plan.renames) {
    changes.push_back("renamed " + r.from.filename().string() + " -> " +
                      r.to.filename().string());
  }

  std::size_t failures = 0;
  if (!config.rasterizer && !pending.empty()) {
    err << fmt::format("note: no rasterizer configured; {} PDF(s) not rasterized\n",
                       pending.size());
  } else {
    for (const fs::path& pdf : pending) {
      RasterizeResult r = RasterizeContract(*config.rasterizer, pdf, w.tiff_dir);
      if (!r.ok) {
        ++failures;
        err << "rasterize failed: " << pdf.filename().string() << ": " << r.message << "\n";
        continue;
      }
      changes.push_back(fmt::format("rasterized {} -> {} page(s)", pdf.filename().string(),
                                    r.tiffs.size()));
    }
  }

  const ManifestResult manifest = WriteManifest(w.lstmf_dir, w.manifest);
  for (const std::string& warning : manifest.warnings) err << "warning: " << warning << "\n";
  if (manifest.changed) {
    changes.push_back(fmt::format("wrote {} ({} entries)",
                                  w.manifest.lexically_relative(w.root).string(),
                                  manifest.entries));
  }

  const fs::path hyper = w.finetune_dir / "hyperparameters.conf";
  if (!fs::exists(hyper, ec)) {
    WriteFileAtomic(hyper, SerializeFineTuneConfig(FineTuneConfig{}));
    changes.push_back("wrote " + hyper.lexically_relative(w.root).string());
  }

  for (const std::string& c : changes) out << c << "\n";
  out << fmt::format("{} change(s)", changes.size());
  if (failures > 0) out << fmt::format(", {} rasterization failure(s)", failures);
  out << "\n";
  return kExitOk;
}

// run ----------------------------------------------------------------------

struct RunOptions {
  std::string engine;
  int parallelism = 1;
  std::optional<std::string> inputs;
  std::optional<std::string> out_dir;
  std::optional<std::string> label;
  std::optional<std::string> footprint_log;
  std::optional<double> power;
  std::optional<double> intensity;
};

int CmdRun(const ToolkitConfig& config, const RunOptions& o, std::ostream& out,
           std::ostream& err) {
  const EngineSpec& engine = o.engine.empty() ? config.DefaultEngine() : config.Engine(o.engine);
  const fs::path input_dir = o.inputs ? fs::path(*o.inputs) : config.workspace.tiff_dir;
  const std::vector<fs::path> inputs =
      FilesWithExtensions(input_dir, {".tif", ".tiff", ".png"});
  const fs::path out_dir =
      o.out_dir ? fs::path(*o.out_dir) : config.workspace.root / "runs" / engine.name;

  const RunReport report = RunEngine(engine, inputs, out_dir, o.parallelism);
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  WriteFileAtomic(out_dir / "run_report.csv", FormatRunReportCsv(report));

  const FootprintEstimate estimate =
      Estimate(o.label.value_or(engine.name), Phase::kInference, report.wall_seconds,
               o.power.value_or(config.footprint.avg_power_w),
               o.intensity.value_or(config.footprint.carbon_intensity), inputs.size());
  EstimateLog log(o.footprint_log ? fs::path(*o.footprint_log)
                                  : config.workspace.root / "footprint.csv");
  log.Append(estimate);

  for (const RunEntry& e : report.entries) {
    if (e.status == RunStatus::kFailed) {
      err << "failed: " << e.input.filename().string() << ": " << e.message << "\n";
    }
  }
  out << fmt::format("engine {}: {} ok, {} failed, {:.3f} s, {:.6g} kWh, {:.6g} kg CO2\n",
                     engine.name, report.ok_count(), report.failed_count(),
                     report.wall_seconds, *estimate.energy_kwh, *estimate.co2_kg);
  return kExitOk;
}

// score --------------------------------------------------------------------

struct ScoreOptions {
  std::optional<std::string> ref_dir;
  std::string hyp_dir;
  std::optional<std::string> policy;
  bool dehyphenate = false;
  std::optional<std::string> run;
  std::optional<std::string> out;
  std::optional<std::string> summary;
  int threads = 0;
  bool serial = false;
};

int CmdScore(const ToolkitConfig& config, const ScoreOptions& o, std::ostream& out,
             std::ostream& err) {
  NormalizationPolicy policy = config.policy;
  if (o.policy) {
    auto named = NamedPolicy(*o.policy);
    if (!named) throw ValidationError("unknown policy '" + *o.policy + "' (preserve|join)");
    policy.line_break_mode = named->line_break_mode;
  }
  if (o.dehyphenate) policy.dehyphenate = true;

  const fs::path ref_dir = o.ref_dir ? fs::path(*o.ref_dir) : config.workspace.ocr_dir;
  const PairingResult pairing = DiscoverPairs(ref_dir, o.hyp_dir);
  for (const std::string& id : pairing.unmatched_references) {
    err << "unmatched reference: " << id << "\n";
  }
  for (const std::string& id : pairing.unmatched_hypotheses) {
    err << "unmatched hypothesis: " << id << "\n";
  }

  const std::vector<MetricVector> vectors =
      o.serial ? ScoreCorpusSerial(pairing.pairs, policy)
               : ScoreCorpusParallel(pairing.pairs, policy, o.threads);
  std::vector<std::pair<std::string, MetricVector>> rows;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    rows.emplace_back(pairing.pairs[i].id, vectors[i]);
  }
  if (o.out) WriteFileAtomic(*o.out, FormatFileScoresCsv(rows));

  std::string run = o.run.value_or(fs::path(o.hyp_dir).lexically_normal().filename().string());
  if (run.empty()) run = fs::path(o.hyp_dir).lexically_normal().parent_path().filename().string();
  const std::vector<LeaderboardRow> summary = {{run, Aggregate(vectors)}};
  if (o.summary) WriteFileAtomic(*o.summary, FormatLeaderboardCsv(summary));

  out << FormatLeaderboardTable(summary);
  out << fmt::format("{} pair(s) scored with policy {}{}\n", vectors.size(),
                     LineBreakModeName(policy.line_break_mode),
                     policy.dehyphenate ? "+dehyphenate" : "");
  return kExitOk;
}

// leaderboard / scatter / worst ---------------------------------------------

int CmdLeaderboard(const std::vector<std::string>& files, const std::string& metric_name,
                   const std::optional<std::string>& csv_out, std::ostream& out) {
  auto metric = MetricFromName(metric_name);
  if (!metric) throw ValidationError("unknown metric '" + metric_name + "'");
  const std::vector<LeaderboardRow> ranked = Rank(LoadLeaderboardInputs(files), *metric);
  if (csv_out) WriteFileAtomic(*csv_out, FormatLeaderboardCsv(ranked));
  out << FormatLeaderboardTable(ranked);
  return kExitOk;
}

int CmdScatter(const std::vector<std::string>& files, const std::optional<std::string>& dest,
               std::ostream& out) {
  WriteOrPrint(dest, FormatScatterCsv(LoadLeaderboardInputs(files)), out);
  return kExitOk;
}

int CmdWorst(const ToolkitConfig& config, const std::string& scores,
             std::optional<int> n, std::optional<int> threshold,
             const std::optional<std::string>& json_out, std::ostream& out) {
  if ((n && *n < 1) || (threshold && *threshold < 1)) {
    throw ValidationError("--n and --threshold must be at least 1");
  }
  const WorstFileReport report = WorstFiles(
      ParseFileScoresCsv(ReadFile(scores)),
      n ? static_cast<std::size_t>(*n) : config.analysis.n,
      threshold ? static_cast<std::size_t>(*threshold) : config.analysis.threshold);
  if (json_out) WriteFileAtomic(*json_out, FormatWorstFileJson(report));
  out << FormatWorstFileText(report);
  return kExitOk;
}

// chat-export ----------------------------------------------------------------

struct ChatOptions {
  std::optional<std::string> transcripts;
  std::string images;
  std::string out;
  std::optional<std::string> test_out;
  double train_fraction = 0.9;
  std::uint64_t seed = 42;
  std::optional<std::string> finetune_config;
};

int CmdChatExport(const ToolkitConfig& config, const ChatOptions& o, std::ostream& out,
                  std::ostream& err) {
  const fs::path dir = o.transcripts ? fs::path(*o.transcripts) : config.workspace.ocr_dir;
  std::vector<DocumentPair> pairs;
  for (TextFile& f : LoadTextFiles(dir)) {
    pairs.push_back({f.id, std::move(f.text), "", f.path, {}});
  }

  auto export_to = [&](const std::vector<DocumentPair>& subset, const std::string& path) {
    ChatExport exported = ExportChatRecords(subset, o.images);
    for (const std::string& s : exported.skipped) err << "skipped " << s << "\n";
    WriteFileAtomic(path, FormatChatRecords(exported.records));
    out << fmt::format("{}: {} record(s), {} skipped\n", path, exported.records.size(),
                       exported.skipped.size());
  };

  if (o.test_out) {
    DatasetSplit split = SplitDataset(std::move(pairs), o.train_fraction, o.seed);
    export_to(split.train, o.out);
    export_to(split.test, *o.test_out);
  } else {
    export_to(pairs, o.out);
  }
  if (o.finetune_config) {
    WriteFileAtomic(*o.finetune_config, SerializeFineTuneConfig(FineTuneConfig{}));
  }
  return kExitOk;
}

// footprint ------------------------------------------------------------------

struct FootprintRecordOptions {
  std::string run;
  std::string phase = "inference";
  double duration_s = 0.0;
  std::optional<double> power;
  std::optional<double> intensity;
  std::size_t examples = 0;
  bool no_energy = false;
  std::optional<std::string> log;
};

fs::path FootprintLogPath(const ToolkitConfig& config, const std::optional<std::string>& log) {
  return log ? fs::path(*log) : config.workspace.root / "footprint.csv";
}

int CmdFootprintRecord(const ToolkitConfig& config, const FootprintRecordOptions& o,
                       std::ostream& out) {
  auto phase = PhaseFromName(o.phase);
  if (!phase) throw ValidationError("phase must be finetune or inference");
  const FootprintEstimate e =
      o.no_energy
          ? DurationOnly(o.run, *phase, o.duration_s, o.examples)
          : Estimate(o.run, *phase, o.duration_s,
                     o.power.value_or(config.footprint.avg_power_w),
                     o.intensity.value_or(config.footprint.carbon_intensity), o.examples);
  EstimateLog(FootprintLogPath(config, o.log)).Append(e);
  out << FormatEstimateCsvRow(e);
  if (e.energy_kwh && e.n_examples > 0) {
    const PerExampleFootprint per = PerExample(e);
    out << fmt::format("per example: {:.6g} kWh, {:.6g} kg CO2\n", per.kwh_per_example,
                       per.kg_per_example);
  }
  return kExitOk;
}

int CmdFootprintExport(const ToolkitConfig& config, const std::optional<std::string>& log,
                       const std::optional<std::string>& dest, std::ostream& out) {
  const fs::path path = FootprintLogPath(config, log);
  std::error_code ec;
  if (!fs::is_regular_file(path, ec)) throw EnvironmentError("no estimate log at " + path.string());
  WriteOrPrint(dest, FormatLogScaleCsv(ParseEstimateLog(ReadFile(path))), out);
  return kExitOk;
}

// geometry -------------------------------------------------------------------

int CmdGeometry(std::optional<std::int64_t> width, std::optional<std::int64_t> height,
                const std::optional<std::string>& image, bool allow_upscale,
                std::ostream& out) {
  std::int64_t w = 0;
  std::int64_t h = 0;
  if (image) {
    std::tie(w, h) = ReadPngDimensions(*image);
  } else if (width && height) {
    w = *width;
    h = *height;
  } else {
    throw ValidationError("geometry needs --image or both --width and --height");
  }
  FitOptions options;
  options.allow_upscale = allow_upscale;
  const FitGeometry g = ComputeFitGeometry(w, h, options);
  out << fmt::format(
      "source={}x{}\nscale={}\nscaled={}x{}\npad_right={}\npad_bottom={}\ntarget={}x{}\n", w,
      h, csv::FormatDouble(g.scale), g.scaled_w, g.scaled_h, g.pad_right, g.pad_bottom,
      g.target_w, g.target_h);
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"OCR shared-task evaluation and pipeline toolkit", "ocrbench"};
  app.require_subcommand(1);
  GlobalOptions global;
  app.add_option("--workspace", global.workspace,
                 "Workspace root (default: $OCRBENCH_WORKSPACE, then the current directory)");
  app.add_option("--config", global.config, "Config file (default: <workspace>/ocrbench.json)");

  auto* prepare = app.add_subcommand("prepare", "Lay out the workspace, rename transcripts "
                                                "to .gt.txt, rasterize PDFs, write list.txt");

  RunOptions run_opts;
  auto* run = app.add_subcommand("run", "Run an OCR engine over page images");
  run->add_option("--engine", run_opts.engine, "Engine name from the config (default engine if omitted)");
  run->add_option("--parallelism,-j", run_opts.parallelism, "Concurrent engine processes")
      ->check(CLI::PositiveNumber);
  run->add_option("--inputs", run_opts.inputs, "Image directory (default: workspace tiff/)");
  run->add_option("--out", run_opts.out_dir, "Output directory (default: <workspace>/runs/<engine>)");
  run->add_option("--label", run_opts.label, "Run label in the footprint log");
  run->add_option("--footprint-log", run_opts.footprint_log, "Estimate log CSV");
  run->add_option("--power", run_opts.power, "Average power draw in watts");
  run->add_option("--intensity", run_opts.intensity, "Carbon intensity, kg CO2 per kWh");

  ScoreOptions score_opts;
  auto* score = app.add_subcommand("score", "Score hypotheses against references");
  score->add_option("--ref-dir", score_opts.ref_dir, "Reference transcripts (default: workspace ocr/)");
  score->add_option("--hyp-dir", score_opts.hyp_dir, "Hypothesis texts")->required();
  score->add_option("--policy", score_opts.policy, "Line-break policy: preserve or join");
  score->add_flag("--dehyphenate", score_opts.dehyphenate, "Merge words hyphenated across lines");
  score->add_option("--run", score_opts.run, "Run name (default: hypothesis directory name)");
  score->add_option("--out", score_opts.out, "Per-file scores CSV");
  score->add_option("--summary", score_opts.summary, "Aggregate row as leaderboard CSV");
  score->add_option("--threads", score_opts.threads, "OpenMP threads (default: all)");
  score->add_flag("--serial", score_opts.serial, "Use the serial reference kernel");

  std::vector<std::string> board_files;
  std::string board_metric = "LEVENSHTEIN";
  std::optional<std::string> board_csv;
  auto* leaderboard = app.add_subcommand("leaderboard", "Rank runs on one metric");
  leaderboard->add_option("files", board_files, "Leaderboard or per-file score CSVs")->required();
  leaderboard->add_option("--metric", board_metric, "Metric to rank by");
  leaderboard->add_option("--csv", board_csv, "Also write the ranked rows as CSV");

  std::string worst_scores;
  std::optional<int> worst_n;
  std::optional<int> worst_threshold;
  std::optional<std::string> worst_json;
  auto* worst = app.add_subcommand("worst", "Files that score worst across several metrics");
  worst->add_option("scores", worst_scores, "Per-file scores CSV")->required();
  worst->add_option("--n", worst_n, "Worst files kept per metric (default 10)");
  worst->add_option("--threshold", worst_threshold,
                    "Flag files on more than this many lists (default 4)");
  worst->add_option("--json", worst_json, "Also write the report as JSON");

  std::vector<std::string> scatter_files;
  std::optional<std::string> scatter_out;
  auto* scatter = app.add_subcommand("scatter", "Per-metric chart data, best first");
  scatter->add_option("files", scatter_files, "Leaderboard or per-file score CSVs")->required();
  scatter->add_option("--out", scatter_out, "Output CSV (default: stdout)");

  ChatOptions chat_opts;
  auto* chat = app.add_subcommand("chat-export", "Export chat-format fine-tuning records");
  chat->add_option("--transcripts", chat_opts.transcripts, "Transcript directory (default: workspace ocr/)");
  chat->add_option("--images", chat_opts.images, "Image directory")->required();
  chat->add_option("--out", chat_opts.out, "Output JSONL (train split when --test-out is given)")->required();
  chat->add_option("--test-out", chat_opts.test_out, "Split the data and write the test part here");
  chat->add_option("--train-fraction", chat_opts.train_fraction, "Training share of the split");
  chat->add_option("--seed", chat_opts.seed, "Shuffle seed");
  chat->add_option("--finetune-config", chat_opts.finetune_config,
                   "Also write the fine-tuning hyperparameters here");

  auto* footprint = app.add_subcommand("footprint", "Energy and emissions accounting");
  footprint->require_subcommand(1);
  FootprintRecordOptions record_opts;
  auto* record = footprint->add_subcommand("record", "Append an estimate to the log");
  record->add_option("--run", record_opts.run, "Run label")->required();
  record->add_option("--phase", record_opts.phase, "finetune or inference");
  record->add_option("--duration", record_opts.duration_s, "Duration in seconds")->required();
  record->add_option("--power", record_opts.power, "Average power draw in watts");
  record->add_option("--intensity", record_opts.intensity, "Carbon intensity, kg CO2 per kWh");
  record->add_option("--examples", record_opts.examples, "Number of examples processed");
  record->add_flag("--no-energy", record_opts.no_energy,
                   "Duration only; energy unavailable (hosted service)");
  record->add_option("--log", record_opts.log, "Estimate log (default: <workspace>/footprint.csv)");
  std::optional<std::string> export_log;
  std::optional<std::string> export_out;
  auto* fexport = footprint->add_subcommand("export", "Log-scale chart data");
  fexport->add_option("--log", export_log, "Estimate log (default: <workspace>/footprint.csv)");
  fexport->add_option("--out", export_out, "Output CSV (default: stdout)");

  std::optional<std::int64_t> geo_w;
  std::optional<std::int64_t> geo_h;
  std::optional<std::string> geo_image;
  bool geo_upscale = false;
  auto* geometry = app.add_subcommand("geometry", "Fit-and-pad geometry onto 414x585");
  geometry->add_option("--width", geo_w, "Source width in pixels");
  geometry->add_option("--height", geo_h, "Source height in pixels");
  geometry->add_option("--image", geo_image, "Read the size from a PNG");
  geometry->add_flag("--allow-upscale", geo_upscale, "Scale small images up");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*prepare) return CmdPrepare(Load(global), out, err);
    if (*run) return CmdRun(Load(global), run_opts, out, err);
    if (*score) return CmdScore(Load(global), score_opts, out, err);
    if (*leaderboard) return CmdLeaderboard(board_files, board_metric, board_csv, out);
    if (*worst) {
      return CmdWorst(Load(global), worst_scores, worst_n, worst_threshold, worst_json, out);
    }
    if (*scatter) return CmdScatter(scatter_files, scatter_out, out);
    if (*chat) return CmdChatExport(Load(global), chat_opts, out, err);
    if (*record) return CmdFootprintRecord(Load(global), record_opts, out);
    if (*fexport) return CmdFootprintExport(Load(global), export_log, export_out, out);
    if (*geometry) return CmdGeometry(geo_w, geo_h, geo_image, geo_upscale, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const EnvironmentError& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitEnvironment;
  }
  return kExitValidation;
}

}  // namespace ocrbench
