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

#ifndef OCRBENCH_ENGINES_H_
#define OCRBENCH_ENGINES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

namespace ocrbench {

namespace fs = std::filesystem;

// An external OCR engine. The command template is split on whitespace into
// an argument vector; {input}, {output_base} and {model} must each appear
// exactly once and are substituted inside their argument, so paths with
// spaces stay single arguments. extra_args are appended verbatim.
struct EngineSpec {
  std::string name;
  std::string command_template;
  std::string model_name;
  std::vector<std::string> extra_args;
  std::string expected_output_suffix = ".txt";

  // Throws ValidationError on a missing, repeated or unknown placeholder.
  void Validate() const;
};

// `tesseract {input} {output_base} -l {model} --psm 6`: block-of-text page
// segmentation.
EngineSpec TesseractSpec(std::string name, std::string model_name);

std::vector<std::string> RenderCommand(const EngineSpec& spec, const fs::path& input,
                                       const fs::path& output_base);

enum class RunStatus { kOk, kFailed };

struct RunEntry {
  fs::path input;
  fs::path output;  // output_base + expected_output_suffix
  fs::path log;     // captured stdout/stderr
  RunStatus status = RunStatus::kFailed;
  int exit_code = -1;
  double duration_s = 0.0;
  std::string message;
};

struct RunReport {
  std::vector<RunEntry> entries;  // sorted by input path
  double wall_seconds = 0.0;

  std::size_t ok_count() const;
  std::size_t failed_count() const;
};

// Runs the engine once per input with up to `parallelism` processes at a
// time, writing <out_dir>/<stem><suffix> and <out_dir>/<stem>.log. A
// non-zero exit or a missing output marks that input failed and the batch
// carries on. An engine executable that cannot be found is an
// EnvironmentError raised before anything runs.
RunReport RunEngine(const EngineSpec& spec, const std::vector<fs::path>& inputs,
                    const fs::path& out_dir, int parallelism);

// input,output,status,exit_code,duration_s,message
std::string FormatRunReportCsv(const RunReport& report);

// Fit-and-pad placement of a page image onto a fixed canvas. The image is
// anchored top-left; padding (white) goes right and bottom only.
struct FitGeometry {
  double scale = 1.0;
  std::int64_t scaled_w = 0;
  std::int64_t scaled_h = 0;
  std::int64_t pad_right = 0;
  std::int64_t pad_bottom = 0;
  std::int64_t target_w = 414;
  std::int64_t target_h = 585;

  bool operator==(const FitGeometry&) const = default;
};

struct FitOptions {
  std::int64_t target_w = 414;
  std::int64_t target_h = 585;
  bool allow_upscale = false;
};

// scale = min(target_w/src_w, target_h/src_h), capped at 1 unless
// upscaling is allowed. Scaled sizes are floored (at least 1 pixel) using
// exact integer arithmetic; the limiting side always lands exactly on the
// target. Throws ValidationError for non-positive sizes.
FitGeometry ComputeFitGeometry(std::int64_t src_w, std::int64_t src_h,
                               const FitOptions& options = {});

// Width and height from a PNG's IHDR chunk.
std::pair<std::int64_t, std::int64_t> ReadPngDimensions(const fs::path& png);

// PDF-to-TIFF rasterizer; {input} and {output_base} required, {dpi}
// optional.
struct RasterizerSpec {
  std::string command_template = "pdftoppm -r {dpi} -tiff {input} {output_base}";
  int dpi = 300;

  void Validate() const;
};

std::vector<std::string> RenderRasterizerCommand(const RasterizerSpec& spec,
                                                 const fs::path& pdf,
                                                 const fs::path& output_base);

struct RasterizeResult {
  fs::path pdf;
  bool ok = false;
  std::vector<fs::path> tiffs;
  std::string message;
};

// Rasterizes into a private staging directory, then moves the pages into
// out_dir as <stem>.tiff (one page) or <stem>-<page>.tiff (1-based). A
// missing PDF, a failing rasterizer or zero produced pages ("no pages")
// yields ok == false; nothing is thrown for per-file problems.
RasterizeResult RasterizeContract(const RasterizerSpec& spec, const fs::path& pdf,
                                  const fs::path& out_dir);

// Pages already present for this PDF in out_dir, in page order.
std::vector<fs::path> ExistingPages(const fs::path& pdf, const fs::path& out_dir);

}  // namespace ocrbench

#endif  // OCRBENCH_ENGINES_H_
