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

#ifndef OCRBENCH_SCORE_CORPUS_H_
#define OCRBENCH_SCORE_CORPUS_H_

#include <span>
#include <vector>

#include "ocrbench/document.h"
#include "ocrbench/metrics.h"
#include "ocrbench/textnorm.h"

namespace ocrbench {

// Per-file scores, element i belonging to pairs[i].
//
// ScoreCorpusSerial is the reference, a plain loop over ScorePair.
// ScoreCorpusParallel fans the same loop out over OpenMP threads; each file
// is written to its own slot, so the result is bit-identical to the serial
// one and independent of scheduling. num_threads <= 0 uses the OpenMP
// default.
std::vector<MetricVector> ScoreCorpusSerial(std::span<const DocumentPair> pairs,
                                            const NormalizationPolicy& policy);

std::vector<MetricVector> ScoreCorpusParallel(std::span<const DocumentPair> pairs,
                                              const NormalizationPolicy& policy,
                                              int num_threads = 0);

}  // namespace ocrbench

#endif  // OCRBENCH_SCORE_CORPUS_H_
