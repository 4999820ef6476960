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

#include "ocrbench/score_corpus.h"

namespace ocrbench {

std::vector<MetricVector> ScoreCorpusSerial(std::span<const DocumentPair> pairs,
                                            const NormalizationPolicy& policy) {
  std::vector<MetricVector> out;
  out.reserve(pairs.size());
  for (const DocumentPair& pair : pairs) out.push_back(ScorePair(pair, policy));
  return out;
}

}  // namespace ocrbench
