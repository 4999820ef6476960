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

#include "ocrbench/footprint.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <cmath>
#include <cstring>

#include "ocrbench/csv.h"
#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"

namespace ocrbench {
namespace {

constexpr std::string_view kUnavailable = "unavailable";

void RequireNonNegative(double value, std::string_view what) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw ValidationError(std::string(what) + " must be a finite non-negative number");
  }
}

std::string OptionalField(const std::optional<double>& v) {
  return v ? csv::FormatDouble(*v) : std::string(kUnavailable);
}

}  // namespace

std::string_view PhaseName(Phase phase) {
  return phase == Phase::kFineTune ? "finetune" : "inference";
}

std::optional<Phase> PhaseFromName(std::string_view name) {
  if (name == "finetune") return Phase::kFineTune;
  if (name == "inference") return Phase::kInference;
  return std::nullopt;
}

FootprintEstimate Estimate(std::string run_label, Phase phase, double duration_s,
                           double avg_power_w, double carbon_intensity,
                           std::size_t n_examples) {
  RequireNonNegative(duration_s, "duration");
  RequireNonNegative(avg_power_w, "average power");
  RequireNonNegative(carbon_intensity, "carbon intensity");
  FootprintEstimate e;
  e.run_label = std::move(run_label);
  e.phase = phase;
  e.duration_s = duration_s;
  e.energy_kwh = duration_s / 3600.0 * avg_power_w / 1000.0;
  e.co2_kg = *e.energy_kwh * carbon_intensity;
  e.n_examples = n_examples;
  return e;
}

FootprintEstimate DurationOnly(std::string run_label, Phase phase, double duration_s,
                               std::size_t n_examples) {
  RequireNonNegative(duration_s, "duration");
  FootprintEstimate e;
  e.run_label = std::move(run_label);
  e.phase = phase;
  e.duration_s = duration_s;
  e.n_examples = n_examples;
  return e;
}

PerExampleFootprint PerExample(const FootprintEstimate& estimate) {
  if (estimate.n_examples == 0) {
    throw ValidationError("per-example footprint needs at least one example");
  }
  if (!estimate.energy_kwh || !estimate.co2_kg) {
    throw ValidationError("run " + estimate.run_label + " has no energy estimate");
  }
  const double n = static_cast<double>(estimate.n_examples);
  return {*estimate.energy_kwh / n, *estimate.co2_kg / n};
}

std::string FormatEstimateCsvHeader() {
  return csv::FormatRow(
      {"run", "phase", "duration_s", "energy_kwh", "co2_kg", "n_examples"});
}

std::string FormatEstimateCsvRow(const FootprintEstimate& e) {
  return csv::FormatRow({e.run_label, std::string(PhaseName(e.phase)),
                         csv::FormatDouble(e.duration_s), OptionalField(e.energy_kwh),
                         OptionalField(e.co2_kg), std::to_string(e.n_examples)});
}

std::vector<FootprintEstimate> ParseEstimateLog(std::string_view text) {
  std::vector<FootprintEstimate> out;
  const std::vector<csv::Row> rows = csv::Parse(text);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const csv::Row& row = rows[r];
    if (r == 0 && !row.empty() && row.front() == "run") continue;
    if (row.size() != 6) {
      throw ValidationError("estimate log: row " + std::to_string(r + 1) +
                            " needs 6 fields");
    }
    FootprintEstimate e;
    e.run_label = row[0];
    auto phase = PhaseFromName(row[1]);
    if (!phase) throw ValidationError("estimate log: unknown phase " + row[1]);
    e.phase = *phase;
    e.duration_s = csv::ParseDouble(row[2]);
    if (row[3] != kUnavailable) e.energy_kwh = csv::ParseDouble(row[3]);
    if (row[4] != kUnavailable) e.co2_kg = csv::ParseDouble(row[4]);
    const double n = csv::ParseDouble(row[5]);
    if (n < 0 || n != std::floor(n)) {
      throw ValidationError("estimate log: n_examples must be a whole number");
    }
    e.n_examples = static_cast<std::size_t>(n);
    out.push_back(std::move(e));
  }
  return out;
}

void EstimateLog::Append(const FootprintEstimate& estimate) {
  std::lock_guard<std::mutex> lock(mu_);
  const int fd = ::open(path_.c_str(), O_WRONLY | O_CREAT | O_APPEND, 0644);
  if (fd < 0) {
    throw EnvironmentError("cannot open estimate log " + path_.string() + ": " +
                           std::strerror(errno));
  }
  std::string payload;
  if (::lseek(fd, 0, SEEK_END) == 0) payload = FormatEstimateCsvHeader();
  payload += FormatEstimateCsvRow(estimate);
  const ssize_t written = ::write(fd, payload.data(), payload.size());
  ::close(fd);
  if (written != static_cast<ssize_t>(payload.size())) {
    throw EnvironmentError("short write to estimate log " + path_.string());
  }
}

std::vector<FootprintEstimate> EstimateLog::ReadAll() const {
  std::lock_guard<std::mutex> lock(mu_);
  std::error_code ec;
  if (!std::filesystem::exists(path_, ec)) return {};
  return ParseEstimateLog(ReadFile(path_));
}

std::string FormatLogScaleCsv(const std::vector<FootprintEstimate>& estimates) {
  std::string out = csv::FormatRow(
      {"run", "phase", "quantity", "value", "log10_value", "status"});
  auto emit = [&out](const FootprintEstimate& e, std::string_view quantity,
                     std::optional<double> value) {
    csv::Row row{e.run_label, std::string(PhaseName(e.phase)), std::string(quantity)};
    if (!value) {
      row.insert(row.end(), {std::string(kUnavailable), "", std::string(kUnavailable)});
    } else if (*value <= 0.0) {
      row.insert(row.end(), {csv::FormatDouble(*value), "", "zero"});
    } else {
      row.insert(row.end(),
                 {csv::FormatDouble(*value), csv::FormatDouble(std::log10(*value)), "ok"});
    }
    out += csv::FormatRow(row);
  };
  for (const FootprintEstimate& e : estimates) {
    std::optional<PerExampleFootprint> per;
    if (e.energy_kwh && e.co2_kg && e.n_examples > 0) per = PerExample(e);
    emit(e, "energy_kwh", e.energy_kwh);
    emit(e, "co2_kg", e.co2_kg);
    emit(e, "kwh_per_example",
         per ? std::optional<double>(per->kwh_per_example) : std::nullopt);
    emit(e, "kg_per_example",
         per ? std::optional<double>(per->kg_per_example) : std::nullopt);
  }
  return out;
}

}  // namespace ocrbench
