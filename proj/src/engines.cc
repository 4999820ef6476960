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

#include "ocrbench/engines.h"

#include <unistd.h>

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <fstream>
#include <map>
#include <mutex>
#include <set>
#include <span>
#include <thread>

#include "ocrbench/csv.h"
#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"
#include "ocrbench/process.h"

namespace ocrbench {
namespace {

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.emplace_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Placeholder {
  std::string_view name;
  bool required;
};

// Splits `tmpl` into arguments and substitutes {name} occurrences from
// `values`. Each placeholder may appear at most once; required ones exactly
// once.
std::vector<std::string> RenderTemplate(
    std::string_view what, std::string_view tmpl,
    std::span<const Placeholder> placeholders,
    const std::map<std::string, std::string, std::less<>>& values) {
  std::map<std::string, int, std::less<>> seen;
  std::vector<std::string> args;
  for (const std::string& token : SplitWhitespace(tmpl)) {
    std::string arg;
    std::size_t pos = 0;
    while (pos < token.size()) {
      const std::size_t open = token.find('{', pos);
      if (open == std::string::npos) {
        arg.append(token, pos);
        break;
      }
      const std::size_t close = token.find('}', open);
      if (close == std::string::npos) {
        throw ValidationError(std::string(what) + ": unbalanced '{' in template");
      }
      arg.append(token, pos, open - pos);
      const std::string_view name =
          std::string_view(token).substr(open + 1, close - open - 1);
      const bool known =
          std::any_of(placeholders.begin(), placeholders.end(),
                      [&](const Placeholder& p) { return p.name == name; });
      if (!known) {
        throw ValidationError(std::string(what) + ": unknown placeholder {" +
                              std::string(name) + "}");
      }
      ++seen[std::string(name)];
      auto it = values.find(name);
      if (it != values.end()) arg += it->second;
      pos = close + 1;
    }
    args.push_back(std::move(arg));
  }
  for (const Placeholder& p : placeholders) {
    auto it = seen.find(p.name);
    const int count = it == seen.end() ? 0 : it->second;
    if (p.required && count == 0) {
      throw ValidationError(std::string(what) + ": template lacks {" +
                            std::string(p.name) + "}");
    }
    if (count > 1) {
      throw ValidationError(std::string(what) + ": {" + std::string(p.name) +
                            "} appears more than once");
    }
  }
  if (args.empty()) throw ValidationError(std::string(what) + ": empty command");
  return args;
}

constexpr std::array<Placeholder, 3> kEnginePlaceholders = {{
    {"input", true},
    {"output_base", true},
    {"model", true},
}};

constexpr std::array<Placeholder, 3> kRasterizerPlaceholders = {{
    {"input", true},
    {"output_base", true},
    {"dpi", false},
}};

std::string TailOf(const fs::path& log, std::size_t max_bytes = 200) {
  std::error_code ec;
  if (!fs::is_regular_file(log, ec)) return {};
  std::string text = ReadFile(log);
  if (text.size() > max_bytes) text = text.substr(text.size() - max_bytes);
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  std::replace(text.begin(), text.end(), '\n', ' ');
  return text;
}

// Orders "x-2.tif" before "x-10.tif".
bool NaturalLess(const std::string& a, const std::string& b) {
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) &&
        std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i;
      std::size_t je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string_view da = std::string_view(a).substr(i, ie - i);
      const std::string_view db = std::string_view(b).substr(j, je - j);
      if (IdLess(da, db)) return true;
      if (IdLess(db, da)) return false;
      i = ie;
      j = je;
      continue;
    }
    if (a[i] != b[j]) return a[i] < b[j];
    ++i;
    ++j;
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

void EngineSpec::Validate() const {
  if (name.empty()) throw ValidationError("engine: empty name");
  RenderTemplate("engine " + name, command_template, kEnginePlaceholders, {});
}

EngineSpec TesseractSpec(std::string name, std::string model_name) {
  EngineSpec spec;
  spec.name = std::move(name);
  spec.command_template = "tesseract {input} {output_base} -l {model}";
  spec.model_name = std::move(model_name);
  spec.extra_args = {"--psm", "6"};
  return spec;
}

std::vector<std::string> RenderCommand(const EngineSpec& spec, const fs::path& input,
                                       const fs::path& output_base) {
  std::vector<std::string> args = RenderTemplate(
      "engine " + spec.name, spec.command_template, kEnginePlaceholders,
      {{"input", input.string()},
       {"output_base", output_base.string()},
       {"model", spec.model_name}});
  args.insert(args.end(), spec.extra_args.begin(), spec.extra_args.end());
  return args;
}

std::size_t RunReport::ok_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(),
      [](const RunEntry& e) { return e.status == RunStatus::kOk; }));
}

std::size_t RunReport::failed_count() const { return entries.size() - ok_count(); }

RunReport RunEngine(const EngineSpec& spec, const std::vector<fs::path>& inputs,
                    const fs::path& out_dir, int parallelism) {
  spec.Validate();
  if (parallelism < 1) throw ValidationError("parallelism must be at least 1");
  RunReport report;
  if (inputs.empty()) return report;

  const std::vector<std::string> probe = RenderCommand(spec, "in", "out");
  if (!FindExecutable(probe.front())) {
    throw EnvironmentError("engine " + spec.name + ": executable '" +
                           probe.front() + "' not found");
  }

  std::set<std::string> stems;
  for (const fs::path& input : inputs) {
    if (!stems.insert(StemBeforeFirstDot(input)).second) {
      throw ValidationError("two inputs share the output name " +
                            StemBeforeFirstDot(input));
    }
  }
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw EnvironmentError("cannot create " + out_dir.string());

  report.entries.resize(inputs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < inputs.size(); i = next++) {
      RunEntry& entry = report.entries[i];
      entry.input = inputs[i];
      const std::string stem = StemBeforeFirstDot(inputs[i]);
      const fs::path output_base = out_dir / stem;
      entry.output = fs::path(output_base.string() + spec.expected_output_suffix);
      entry.log = fs::path(output_base.string() + ".log");
      std::error_code exists_ec;
      if (!fs::exists(inputs[i], exists_ec)) {
        entry.message = "input not found";
        continue;
      }
      fs::remove(entry.output, exists_ec);
      const ProcessResult proc =
          RunProcess(RenderCommand(spec, inputs[i], output_base), entry.log);
      entry.exit_code = proc.exit_code;
      entry.duration_s = proc.seconds;
      if (!proc.spawned) {
        entry.message = "spawn failed: " + proc.error;
      } else if (proc.exit_code != 0) {
        entry.message = "exit " + std::to_string(proc.exit_code);
        const std::string tail = TailOf(entry.log);
        if (!tail.empty()) entry.message += ": " + tail;
      } else if (!fs::is_regular_file(entry.output, exists_ec)) {
        entry.message = "engine produced no " + entry.output.filename().string();
      } else {
        entry.status = RunStatus::kOk;
      }
    }
  };

  const auto start = std::chrono::steady_clock::now();
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(parallelism), inputs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::sort(report.entries.begin(), report.entries.end(),
            [](const RunEntry& a, const RunEntry& b) { return a.input < b.input; });
  return report;
}

std::string FormatRunReportCsv(const RunReport& report) {
  std::string out =
      csv::FormatRow({"input", "output", "status", "exit_code", "duration_s", "message"});
  for (const RunEntry& e : report.entries) {
    out += csv::FormatRow({e.input.string(), e.output.string(),
                           e.status == RunStatus::kOk ? "ok" : "failed",
                           std::to_string(e.exit_code), csv::FormatDouble(e.duration_s),
                           e.message});
  }
  return out;
}

FitGeometry ComputeFitGeometry(std::int64_t src_w, std::int64_t src_h,
                               const FitOptions& options) {
  if (src_w <= 0 || src_h <= 0) {
    throw ValidationError("image dimensions must be positive");
  }
  if (options.target_w <= 0 || options.target_h <= 0) {
    throw ValidationError("target dimensions must be positive");
  }
  const std::int64_t tw = options.target_w;
  const std::int64_t th = options.target_h;
  FitGeometry g;
  g.target_w = tw;
  g.target_h = th;

  const bool fits = src_w <= tw && src_h <= th;
  if (fits && !options.allow_upscale) {
    g.scale = 1.0;
    g.scaled_w = src_w;
    g.scaled_h = src_h;
  } else if (tw * src_h <= th * src_w) {
    // Width is the limiting side: tw/src_w <= th/src_h.
    g.scale = static_cast<double>(tw) / static_cast<double>(src_w);
    g.scaled_w = tw;
    g.scaled_h = std::max<std::int64_t>(1, src_h * tw / src_w);
  } else {
    g.scale = static_cast<double>(th) / static_cast<double>(src_h);
    g.scaled_h = th;
    g.scaled_w = std::max<std::int64_t>(1, src_w * th / src_h);
  }
  g.pad_right = tw - g.scaled_w;
  g.pad_bottom = th - g.scaled_h;
  return g;
}

std::pair<std::int64_t, std::int64_t> ReadPngDimensions(const fs::path& png) {
  std::ifstream in(png, std::ios::binary);
  if (!in) throw EnvironmentError("cannot read " + png.string());
  unsigned char header[24];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  static constexpr unsigned char kSignature[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1A, '\n'};
  if (in.gcount() != sizeof(header) || !std::equal(kSignature, kSignature + 8, header) ||
      std::string_view(reinterpret_cast<char*>(header + 12), 4) != "IHDR") {
    throw ValidationError(png.string() + " is not a PNG file");
  }
  auto be32 = [&](int offset) {
    return (std::int64_t{header[offset]} << 24) | (std::int64_t{header[offset + 1]} << 16) |
           (std::int64_t{header[offset + 2]} << 8) | std::int64_t{header[offset + 3]};
  };
  return {be32(16), be32(20)};
}

void RasterizerSpec::Validate() const {
  if (dpi <= 0) throw ValidationError("rasterizer: dpi must be positive");
  RenderTemplate("rasterizer", command_template, kRasterizerPlaceholders, {});
}

std::vector<std::string> RenderRasterizerCommand(const RasterizerSpec& spec,
                                                 const fs::path& pdf,
                                                 const fs::path& output_base) {
  return RenderTemplate("rasterizer", spec.command_template, kRasterizerPlaceholders,
                        {{"input", pdf.string()},
                         {"output_base", output_base.string()},
                         {"dpi", std::to_string(spec.dpi)}});
}

std::vector<fs::path> ExistingPages(const fs::path& pdf, const fs::path& out_dir) {
  const std::string stem = StemBeforeFirstDot(pdf);
  std::vector<fs::path> pages;
  std::error_code ec;
  if (fs::is_regular_file(out_dir / (stem + ".tiff"), ec)) {
    pages.push_back(out_dir / (stem + ".tiff"));
    return pages;
  }
  for (int page = 1;; ++page) {
    fs::path p = out_dir / (stem + "-" + std::to_string(page) + ".tiff");
    if (!fs::is_regular_file(p, ec)) break;
    pages.push_back(std::move(p));
  }
  return pages;
}

RasterizeResult RasterizeContract(const RasterizerSpec& spec, const fs::path& pdf,
                                  const fs::path& out_dir) {
  spec.Validate();
  RasterizeResult result;
  result.pdf = pdf;
  std::error_code ec;
  if (!fs::is_regular_file(pdf, ec)) {
    result.message = "missing input";
    return result;
  }
  fs::create_directories(out_dir, ec);
  const std::string stem = StemBeforeFirstDot(pdf);
  const fs::path staging =
      out_dir / (".raster-" + stem + "-" + std::to_string(::getpid()));
  fs::remove_all(staging, ec);
  fs::create_directories(staging, ec);
  if (ec) {
    result.message = "cannot create staging directory";
    return result;
  }
  const fs::path log = staging / ".log";
  const ProcessResult proc =
      RunProcess(RenderRasterizerCommand(spec, pdf, staging / stem), log);

  if (!proc.spawned) {
    result.message = "rasterizer failed to start: " + proc.error;
  } else if (proc.exit_code != 0) {
    result.message = "rasterizer exit " + std::to_string(proc.exit_code);
    const std::string tail = TailOf(log);
    if (!tail.empty()) result.message += ": " + tail;
  } else {
    std::vector<std::string> produced;
    for (const auto& entry : fs::directory_iterator(staging)) {
      const std::string name = entry.path().filename().string();
      if (entry.is_regular_file() && name.front() != '.') produced.push_back(name);
    }
    std::sort(produced.begin(), produced.end(), NaturalLess);
    if (produced.empty()) {
      result.message = "no pages";
    } else {
      for (std::size_t i = 0; i < produced.size(); ++i) {
        const std::string target_name =
            produced.size() == 1 ? stem + ".tiff"
                                 : stem + "-" + std::to_string(i + 1) + ".tiff";
        const fs::path target = out_dir / target_name;
        fs::rename(staging / produced[i], target, ec);
        if (ec) {
          result.message = "cannot move page into " + target.string();
          result.tiffs.clear();
          break;
        }
        result.tiffs.push_back(target);
      }
      result.ok = !result.tiffs.empty();
    }
  }
  fs::remove_all(staging, ec);
  return result;
}

}  // namespace ocrbench
