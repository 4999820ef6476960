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

#include "ocrbench/textnorm.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/unistr.h>

#include <stdexcept>

#include "ocrbench/utf8.h"

namespace ocrbench {
namespace {

std::string ToNfc(std::string_view text) {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2* nfc = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC unavailable");
  icu::UnicodeString source = icu::UnicodeString::fromUTF8(
      icu::StringPiece(text.data(), static_cast<int32_t>(text.size())));
  icu::UnicodeString normalized = nfc->normalize(source, status);
  if (U_FAILURE(status)) throw std::runtime_error("ICU NFC failed");
  std::string out;
  normalized.toUTF8String(out);
  return out;
}

std::u32string UnifyLineEndings(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'\r') {
      out.push_back(U'\n');
      if (i + 1 < text.size() && text[i + 1] == U'\n') ++i;
    } else {
      out.push_back(text[i]);
    }
  }
  return out;
}

bool IsBlank(char32_t c) { return c == U' ' || c == U'\t'; }

bool IsLetter(char32_t c) { return u_isalpha(static_cast<UChar32>(c)); }

bool IsSpace(char32_t c) { return u_isUWhiteSpace(static_cast<UChar32>(c)); }

std::u32string CollapseWhitespace(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  bool pending_space = false;
  bool at_line_start = true;
  for (char32_t c : text) {
    if (IsBlank(c)) {
      pending_space = !at_line_start;
      continue;
    }
    if (c == U'\n') {
      // Trailing blanks on a line are dropped.
      pending_space = false;
      at_line_start = true;
      out.push_back(c);
      continue;
    }
    if (pending_space) out.push_back(U' ');
    pending_space = false;
    at_line_start = false;
    out.push_back(c);
  }
  return out;
}

std::u32string Dehyphenate(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == U'-' && i + 2 < text.size() && text[i + 1] == U'\n' &&
        IsLetter(text[i + 2]) && !out.empty() && IsLetter(out.back())) {
      ++i;  // skip the newline too
      continue;
    }
    out.push_back(text[i]);
  }
  return out;
}

std::u32string JoinLines(std::u32string_view text) {
  std::u32string out;
  out.reserve(text.size());
  bool pending_break = false;
  for (char32_t c : text) {
    if (c == U'\n') {
      pending_break = !out.empty();
      continue;
    }
    if (pending_break) out.push_back(U' ');
    pending_break = false;
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::optional<NormalizationPolicy> NamedPolicy(std::string_view name) {
  NormalizationPolicy policy;
  if (name == "preserve") {
    policy.line_break_mode = LineBreakMode::kPreserve;
  } else if (name == "join") {
    policy.line_break_mode = LineBreakMode::kJoin;
  } else {
    return std::nullopt;
  }
  return policy;
}

std::string_view LineBreakModeName(LineBreakMode mode) {
  return mode == LineBreakMode::kJoin ? "join" : "preserve";
}

std::string Normalize(std::string_view text, const NormalizationPolicy& policy) {
  if (text.empty()) return {};
  std::u32string chars = UnifyLineEndings(DecodeUtf8(ToNfc(text)));
  if (policy.collapse_whitespace) chars = CollapseWhitespace(chars);
  if (policy.dehyphenate) chars = Dehyphenate(chars);
  if (policy.line_break_mode == LineBreakMode::kJoin) chars = JoinLines(chars);
  std::string out = EncodeUtf8(chars);
  // Merging across a removed hyphen can juxtapose composable letters
  // (Hangul jamo, for one).
  if (policy.dehyphenate) out = ToNfc(out);
  return out;
}

std::vector<std::string> TokenizeWords(std::string_view text) {
  std::vector<std::string> tokens;
  std::u32string current;
  for (char32_t c : DecodeUtf8(text)) {
    if (IsSpace(c)) {
      if (!current.empty()) tokens.push_back(EncodeUtf8(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(EncodeUtf8(current));
  return tokens;
}

std::vector<std::string> SplitSentences(std::string_view text) {
  std::vector<std::string> sentences;
  const std::u32string chars = DecodeUtf8(text);
  std::size_t start = 0;
  while (start <= chars.size()) {
    std::size_t end = chars.find(U'\n', start);
    if (end == std::u32string::npos) end = chars.size();
    std::size_t b = start;
    std::size_t e = end;
    while (b < e && IsSpace(chars[b])) ++b;
    while (e > b && IsSpace(chars[e - 1])) --e;
    if (e > b) sentences.push_back(EncodeUtf8(chars.substr(b, e - b)));
    start = end + 1;
  }
  return sentences;
}

}  // namespace ocrbench
