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

#ifndef OCRBENCH_FOOTPRINT_H_
#define OCRBENCH_FOOTPRINT_H_

#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocrbench {

enum class Phase { kFineTune, kInference };

std::string_view PhaseName(Phase phase);  // "finetune" / "inference"
std::optional<Phase> PhaseFromName(std::string_view name);

// Energy and emissions of one run phase. Energy is unset for runs whose
// hardware is unknown (a hosted service): only their duration is recorded.
struct FootprintEstimate {
  std::string run_label;
  Phase phase = Phase::kInference;
  double duration_s = 0.0;
  std::optional<double> energy_kwh;
  std::optional<double> co2_kg;
  std::size_t n_examples = 0;

  bool operator==(const FootprintEstimate&) const = default;
};

// energy_kwh = duration_s / 3600 * avg_power_w / 1000
// co2_kg     = energy_kwh * carbon_intensity (kg CO2 per kWh)
// Negative inputs are a ValidationError.
FootprintEstimate Estimate(std::string run_label, Phase phase, double duration_s,
                           double avg_power_w, double carbon_intensity,
                           std::size_t n_examples);

FootprintEstimate DurationOnly(std::string run_label, Phase phase, double duration_s,
                               std::size_t n_examples);

struct PerExampleFootprint {
  double kwh_per_example = 0.0;
  double kg_per_example = 0.0;
};

// Throws ValidationError for zero examples or an estimate without energy.
PerExampleFootprint PerExample(const FootprintEstimate& estimate);

// run,phase,duration_s,energy_kwh,co2_kg,n_examples; missing energy is
// written as "unavailable".
std::string FormatEstimateCsvHeader();
std::string FormatEstimateCsvRow(const FootprintEstimate& estimate);
std::vector<FootprintEstimate> ParseEstimateLog(std::string_view text);

// Append-only estimate log. Appends from threads of one process are
// serialized; each row is one O_APPEND write so concurrent processes do not
// interleave within a row.
class EstimateLog {
 public:
  explicit EstimateLog(std::filesystem::path path) : path_(std::move(path)) {}

  void Append(const FootprintEstimate& estimate);
  std::vector<FootprintEstimate> ReadAll() const;
  const std::filesystem::path& path() const { return path_; }

 private:
  std::filesystem::path path_;
  mutable std::mutex mu_;
};

// Chart data for a log axis: run,phase,quantity,value,log10_value,status.
// Quantities per estimate: energy_kwh, co2_kg, kwh_per_example,
// kg_per_example. status is "ok", "zero" (log10 left empty) or
// "unavailable".
std::string FormatLogScaleCsv(const std::vector<FootprintEstimate>& estimates);

}  // namespace ocrbench

#endif  // OCRBENCH_FOOTPRINT_H_
