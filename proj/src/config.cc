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

#include "ocrbench/config.h"

#include <cstdlib>
#include <set>

#include "json.hpp"
#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"

namespace ocrbench {
namespace {

using json = nlohmann::json;

void RequireObject(const json& j, std::string_view what) {
  if (!j.is_object()) throw ValidationError("config: " + std::string(what) + " must be an object");
}

template <typename T>
T Get(const json& obj, std::string_view key, T fallback, std::string_view where) {
  auto it = obj.find(key);
  if (it == obj.end()) return fallback;
  try {
    return it->get<T>();
  } catch (const json::exception&) {
    throw ValidationError("config: " + std::string(where) + "." + std::string(key) +
                          " has the wrong type");
  }
}

EngineSpec ParseEngine(const json& j, bool& is_default) {
  RequireObject(j, "engine entry");
  EngineSpec spec;
  spec.name = Get<std::string>(j, "name", "", "engines[]");
  spec.command_template = Get<std::string>(j, "command", "", "engines[]");
  spec.model_name = Get<std::string>(j, "model", "", "engines[]");
  spec.extra_args = Get<std::vector<std::string>>(j, "extra_args", {}, "engines[]");
  spec.expected_output_suffix = Get<std::string>(j, "output_suffix", ".txt", "engines[]");
  is_default = Get<bool>(j, "default", false, "engines[]");
  spec.Validate();
  return spec;
}

}  // namespace

const EngineSpec& ToolkitConfig::Engine(std::string_view name) const {
  for (const EngineSpec& e : engines) {
    if (e.name == name) return e;
  }
  throw ValidationError("no engine named '" + std::string(name) + "' in config");
}

ToolkitConfig DefaultConfig(const std::filesystem::path& root) {
  ToolkitConfig config;
  config.workspace = WorkspaceLayout::ForRoot(root);
  config.engines = {TesseractSpec("tesseract-base", "spa"),
                    TesseractSpec("tesseract-custom", "spa_custom")};
  config.default_engine = "tesseract-base";
  config.rasterizer = RasterizerSpec{};
  return config;
}

ToolkitConfig ParseConfig(std::string_view json_text, const std::filesystem::path& root) {
  json doc = json::parse(json_text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) throw ValidationError("config: not valid JSON");
  RequireObject(doc, "top level");
  ToolkitConfig config = DefaultConfig(root);

  if (auto it = doc.find("layout"); it != doc.end()) {
    RequireObject(*it, "layout");
    WorkspaceLayout& w = config.workspace;
    auto path_of = [&](std::string_view key, std::filesystem::path& target) {
      auto value = Get<std::string>(*it, key, "", "layout");
      if (!value.empty()) target = root / value;
    };
    path_of("pdf", w.pdf_dir);
    path_of("ocr", w.ocr_dir);
    path_of("tiff", w.tiff_dir);
    path_of("lstmf", w.lstmf_dir);
    path_of("finetuning", w.finetune_dir);
    path_of("manifest", w.manifest);
  }
  config.workspace.Validate();

  if (auto it = doc.find("policy"); it != doc.end()) {
    RequireObject(*it, "policy");
    const std::string mode = Get<std::string>(*it, "line_breaks", "preserve", "policy");
    auto named = NamedPolicy(mode);
    if (!named) throw ValidationError("config: policy.line_breaks must be preserve or join");
    config.policy.line_break_mode = named->line_break_mode;
    config.policy.dehyphenate = Get<bool>(*it, "dehyphenate", false, "policy");
    config.policy.collapse_whitespace =
        Get<bool>(*it, "collapse_whitespace", true, "policy");
  }

  if (auto it = doc.find("engines"); it != doc.end()) {
    if (!it->is_array()) throw ValidationError("config: engines must be an array");
    config.engines.clear();
    config.default_engine.clear();
    std::set<std::string> names;
    std::size_t defaults = 0;
    for (const json& entry : *it) {
      bool is_default = false;
      EngineSpec spec = ParseEngine(entry, is_default);
      if (!names.insert(spec.name).second) {
        throw ValidationError("config: duplicate engine name " + spec.name);
      }
      if (is_default) {
        ++defaults;
        config.default_engine = spec.name;
      }
      config.engines.push_back(std::move(spec));
    }
    if (defaults != 1) {
      throw ValidationError("config: exactly one engine must be marked default (found " +
                            std::to_string(defaults) + ")");
    }
  }

  if (auto it = doc.find("rasterizer"); it != doc.end()) {
    if (it->is_null()) {
      config.rasterizer.reset();
    } else {
      RequireObject(*it, "rasterizer");
      RasterizerSpec spec;
      spec.command_template =
          Get<std::string>(*it, "command", spec.command_template, "rasterizer");
      spec.dpi = Get<int>(*it, "dpi", spec.dpi, "rasterizer");
      spec.Validate();
      config.rasterizer = spec;
    }
  }

  if (auto it = doc.find("footprint"); it != doc.end()) {
    RequireObject(*it, "footprint");
    config.footprint.avg_power_w =
        Get<double>(*it, "avg_power_w", config.footprint.avg_power_w, "footprint");
    config.footprint.carbon_intensity = Get<double>(
        *it, "carbon_intensity", config.footprint.carbon_intensity, "footprint");
    if (config.footprint.avg_power_w < 0 || config.footprint.carbon_intensity < 0) {
      throw ValidationError("config: footprint values must be non-negative");
    }
  }

  if (auto it = doc.find("analysis"); it != doc.end()) {
    RequireObject(*it, "analysis");
    const int n = Get<int>(*it, "n", 10, "analysis");
    const int threshold = Get<int>(*it, "threshold", 4, "analysis");
    if (n < 1 || threshold < 1) {
      throw ValidationError("config: analysis.n and analysis.threshold must be >= 1");
    }
    config.analysis = {static_cast<std::size_t>(n), static_cast<std::size_t>(threshold)};
  }
  return config;
}

ToolkitConfig LoadConfig(const std::filesystem::path& root,
                         const std::optional<std::filesystem::path>& config_file) {
  const std::filesystem::path path =
      config_file.value_or(root / std::string(kConfigFileName));
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    if (config_file) throw EnvironmentError("config file not found: " + path.string());
    return DefaultConfig(root);
  }
  return ParseConfig(ReadFile(path), root);
}

std::filesystem::path ResolveWorkspaceRoot(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return std::filesystem::path(*flag);
  if (const char* env = std::getenv(std::string(kWorkspaceEnvVar).c_str());
      env != nullptr && *env != '\0') {
    return std::filesystem::path(env);
  }
  return std::filesystem::current_path();
}

}  // namespace ocrbench
