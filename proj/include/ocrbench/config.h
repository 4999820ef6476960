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

#ifndef OCRBENCH_CONFIG_H_
#define OCRBENCH_CONFIG_H_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ocrbench/corpus.h"
#include "ocrbench/engines.h"
#include "ocrbench/textnorm.h"

namespace ocrbench {

inline constexpr std::string_view kConfigFileName = "ocrbench.json";
inline constexpr std::string_view kWorkspaceEnvVar = "OCRBENCH_WORKSPACE";

struct FootprintDefaults {
  double avg_power_w = 360.0;
  double carbon_intensity = 0.25;  // kg CO2 per kWh
};

struct AnalysisDefaults {
  std::size_t n = 10;
  std::size_t threshold = 4;
};

struct ToolkitConfig {
  WorkspaceLayout workspace;
  NormalizationPolicy policy;
  std::vector<EngineSpec> engines;
  std::string default_engine;
  std::optional<RasterizerSpec> rasterizer;  // unset: prepare skips rasterizing
  FootprintDefaults footprint;
  AnalysisDefaults analysis;

  // Throws ValidationError unless the name is configured.
  const EngineSpec& Engine(std::string_view name) const;
  const EngineSpec& DefaultEngine() const { return Engine(default_engine); }
};

// Baseline `spa` (default) and fine-tuned `spa_custom` Tesseract engines,
// pdftoppm at 300 DPI, standard layout under `root`.
ToolkitConfig DefaultConfig(const std::filesystem::path& root);

// Parses the JSON config; relative layout paths resolve against `root`.
// Keys left out keep their defaults. Validates layout containment, engine
// templates and that exactly one engine is the default.
ToolkitConfig ParseConfig(std::string_view json_text, const std::filesystem::path& root);

// root/ocrbench.json when present, defaults otherwise.
ToolkitConfig LoadConfig(const std::filesystem::path& root,
                         const std::optional<std::filesystem::path>& config_file = {});

// --workspace flag, then $OCRBENCH_WORKSPACE, then the current directory.
std::filesystem::path ResolveWorkspaceRoot(const std::optional<std::string>& flag);

}  // namespace ocrbench

#endif  // OCRBENCH_CONFIG_H_
