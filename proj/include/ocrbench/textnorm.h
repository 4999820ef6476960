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

#ifndef OCRBENCH_TEXTNORM_H_
#define OCRBENCH_TEXTNORM_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ocrbench {

enum class LineBreakMode {
  kPreserve,  // keep the reference's line structure
  kJoin,      // one running line of text
};

// Text is always brought to Unicode NFC first; there is no knob for it.
struct NormalizationPolicy {
  LineBreakMode line_break_mode = LineBreakMode::kPreserve;
  // Merge words split across lines by a trailing hyphen.
  bool dehyphenate = false;
  // Runs of spaces/tabs become one space and are trimmed at line edges.
  // Newlines are never touched by this step.
  bool collapse_whitespace = true;

  bool operator==(const NormalizationPolicy&) const = default;
};

// "preserve" and "join" name the two line-break policies; anything else is
// nullopt.
std::optional<NormalizationPolicy> NamedPolicy(std::string_view name);
std::string_view LineBreakModeName(LineBreakMode mode);

// Pipeline: CR/CRLF -> LF, NFC, whitespace collapse, dehyphenation, line
// joining. Idempotent for every policy. Case and punctuation are kept.
//
// Dehyphenation fires only on <letter> '-' '\n' <letter> and removes exactly
// the hyphen and the newline: "Mathe-\nmáticas" -> "Mathemáticas".
std::string Normalize(std::string_view text, const NormalizationPolicy& policy);

// Splits on any run of Unicode whitespace. Never yields empty tokens.
std::vector<std::string> TokenizeWords(std::string_view text);

// One entry per non-blank line, trimmed.
std::vector<std::string> SplitSentences(std::string_view text);

}  // namespace ocrbench

#endif  // OCRBENCH_TEXTNORM_H_
