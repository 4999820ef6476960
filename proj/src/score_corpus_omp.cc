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

#include <omp.h>

#include <cstdint>
#include <exception>

#include "ocrbench/score_corpus.h"

namespace ocrbench {

std::vector<MetricVector> ScoreCorpusParallel(std::span<const DocumentPair> pairs,
                                              const NormalizationPolicy& policy,
                                              int num_threads) {
  std::vector<MetricVector> out(pairs.size());
  const auto count = static_cast<std::int64_t>(pairs.size());
  const int threads = num_threads > 0 ? num_threads : omp_get_max_threads();
  std::exception_ptr failure;

  // Document lengths vary a lot (blank pages next to dense ones), hence
  // dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] =
          ScorePair(pairs[static_cast<std::size_t>(i)], policy);
    } catch (...) {
#pragma omp critical(ocrbench_score_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace ocrbench
