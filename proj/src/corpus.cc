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

#include "ocrbench/corpus.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <random>
#include <set>

#include "json.hpp"
#include "ocrbench/csv.h"
#include "ocrbench/error.h"
#include "ocrbench/fsutil.h"

namespace ocrbench {
namespace {

using ordered_json = nlohmann::ordered_json;

bool EndsWith(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

std::vector<fs::path> RegularFiles(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw EnvironmentError("not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::string name = entry.path().filename().string();
    if (name.empty() || name.front() == '.') continue;
    files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

bool IsUnder(const fs::path& root, const fs::path& p) {
  const fs::path r = root.lexically_normal();
  const fs::path rel = p.lexically_normal().lexically_relative(r);
  if (rel.empty()) return false;
  const std::string first = rel.begin()->string();
  return first != ".." && first != ".";
}

}  // namespace

WorkspaceLayout WorkspaceLayout::ForRoot(const fs::path& root) {
  WorkspaceLayout layout;
  layout.root = root;
  layout.pdf_dir = root / "train" / "pdf";
  layout.ocr_dir = root / "train" / "ocr";
  layout.tiff_dir = root / "train" / "tiff";
  layout.lstmf_dir = root / "train" / "lstmf";
  layout.finetune_dir = root / "finetuning";
  layout.manifest = root / "train" / "list.txt";
  return layout;
}

void WorkspaceLayout::Validate() const {
  for (const fs::path* p :
       {&pdf_dir, &ocr_dir, &tiff_dir, &lstmf_dir, &finetune_dir, &manifest}) {
    if (!IsUnder(root, *p)) {
      throw ValidationError("workspace path " + p->string() +
                            " is not inside root " + root.string());
    }
  }
}

std::vector<TextFile> LoadTextFiles(const fs::path& dir) {
  std::map<std::string, fs::path> by_id;
  for (const fs::path& path : RegularFiles(dir)) {
    if (path.extension() != ".txt") continue;
    std::string id = StemBeforeFirstDot(path);
    if (id.empty()) continue;
    auto [it, inserted] = by_id.emplace(id, path);
    if (!inserted) {
      throw ValidationError("duplicate document id '" + id + "' in " +
                            dir.string() + ": " + it->second.filename().string() +
                            " and " + path.filename().string());
    }
  }
  std::vector<TextFile> files;
  files.reserve(by_id.size());
  for (auto& [id, path] : by_id) files.push_back({id, path, ReadFile(path)});
  std::sort(files.begin(), files.end(),
            [](const TextFile& a, const TextFile& b) { return IdLess(a.id, b.id); });
  return files;
}

PairingResult DiscoverPairs(const fs::path& ref_dir, const fs::path& hyp_dir) {
  std::vector<TextFile> refs = LoadTextFiles(ref_dir);
  std::vector<TextFile> hyps = LoadTextFiles(hyp_dir);
  std::map<std::string, TextFile*> hyp_by_id;
  for (TextFile& h : hyps) hyp_by_id[h.id] = &h;

  PairingResult result;
  std::set<std::string> matched;
  for (TextFile& r : refs) {
    auto it = hyp_by_id.find(r.id);
    if (it == hyp_by_id.end()) {
      result.unmatched_references.push_back(r.id);
      continue;
    }
    matched.insert(r.id);
    result.pairs.push_back({r.id, std::move(r.text), std::move(it->second->text),
                            r.path, it->second->path});
  }
  for (const TextFile& h : hyps) {
    if (!matched.contains(h.id)) result.unmatched_hypotheses.push_back(h.id);
  }
  return result;
}

RenamePlan PlanGtRenames(const fs::path& ocr_dir) {
  RenamePlan plan;
  const std::vector<fs::path> files = RegularFiles(ocr_dir);
  const std::set<fs::path> existing(files.begin(), files.end());
  for (const fs::path& path : files) {
    const std::string name = path.filename().string();
    if (!EndsWith(name, ".txt")) continue;
    if (EndsWith(name, ".gt.txt")) {
      plan.conforming.push_back(path);
      continue;
    }
    fs::path target =
        path.parent_path() / (name.substr(0, name.size() - 4) + ".gt.txt");
    if (existing.contains(target)) {
      throw ValidationError("rename collision: " + name + " -> " +
                            target.filename().string() + " already exists");
    }
    plan.renames.push_back({path, std::move(target)});
  }
  return plan;
}

std::size_t ApplyRenamePlan(const RenamePlan& plan) {
  for (const Rename& r : plan.renames) {
    std::error_code ec;
    if (fs::exists(r.to, ec)) {
      throw ValidationError("rename collision: " + r.to.string() + " appeared");
    }
    fs::rename(r.from, r.to, ec);
    if (ec) {
      throw EnvironmentError("cannot rename " + r.from.string() + ": " +
                             ec.message());
    }
  }
  return plan.renames.size();
}

ManifestResult WriteManifest(const fs::path& lstmf_dir, const fs::path& out) {
  std::vector<std::string> lines;
  for (const fs::path& path : RegularFiles(lstmf_dir)) {
    if (path.extension() != ".lstmf") continue;
    lines.push_back(fs::absolute(path).lexically_normal().string());
  }
  std::sort(lines.begin(), lines.end());
  std::string content;
  for (const std::string& line : lines) content += line + "\n";

  ManifestResult result;
  result.entries = lines.size();
  if (lines.empty()) {
    result.warnings.push_back("no .lstmf files in " + lstmf_dir.string() +
                              "; manifest is empty");
  }
  result.changed = WriteFileIfChanged(out, content);
  return result;
}

const std::string_view kSystemPrompt =
    "You are an OCR expert specialised in Spanish documents.\n"
    "You are analysing an old book scan with potentially low quality.\n"
    "\n"
    "INSTRUCTIONS:\n"
    "\n"
    "    Extract ALL text exactly as it appears.\n"
    "\n"
    "    Do not correct, interpret or modify the text in any way.\n"
    "\n"
    "    Return ONLY the raw text, without any additional comments or formatting.\n"
    "\n"
    "    Do not invent content not present in the image.\n"
    "\n"
    "The output must be EXACTLY the recognised text, without adding anything "
    "else.";

const std::string_view kUserPrompt = "Please perform OCR on this Spanish document.";

std::string ChatRecordToJson(const ChatRecord& record) {
  auto text_part = [](const std::string& text) {
    return ordered_json{{"type", "text"}, {"text", text}};
  };
  ordered_json messages = ordered_json::array();
  messages.push_back({{"role", "system"},
                      {"content", ordered_json::array({text_part(record.system_text)})}});
  messages.push_back(
      {{"role", "user"},
       {"content", ordered_json::array({ordered_json{{"type", "image"},
                                                     {"image", record.image_ref}},
                                        text_part(record.user_text)})}});
  messages.push_back(
      {{"role", "assistant"},
       {"content", ordered_json::array({text_part(record.assistant_text)})}});
  ordered_json doc;
  doc["id"] = record.id;
  doc["messages"] = std::move(messages);
  // Ill-formed bytes become U+FFFD, as in the decoder.
  return doc.dump(-1, ' ', false, ordered_json::error_handler_t::replace);
}

ChatRecord ChatRecordFromJson(std::string_view line) {
  auto fail = [](const std::string& why) -> ValidationError {
    return ValidationError("malformed chat record: " + why);
  };
  ordered_json doc = ordered_json::parse(line, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded() || !doc.is_object()) throw fail("not a JSON object");
  if (!doc.contains("messages") || !doc["messages"].is_array() ||
      doc["messages"].size() != 3) {
    throw fail("expected three messages");
  }
  const auto& m = doc["messages"];
  const char* roles[] = {"system", "user", "assistant"};
  for (std::size_t i = 0; i < 3; ++i) {
    if (!m[i].is_object() || m[i].value("role", "") != roles[i] ||
        !m[i].contains("content") || !m[i]["content"].is_array()) {
      throw fail(std::string("message ") + std::to_string(i) + " must be " + roles[i]);
    }
  }
  auto text_of = [&](const ordered_json& part) -> std::string {
    if (!part.is_object() || part.value("type", "") != "text" ||
        !part.contains("text") || !part["text"].is_string()) {
      throw fail("expected a text part");
    }
    return part["text"].get<std::string>();
  };
  const auto& user = m[1]["content"];
  if (user.size() != 2 || !user[0].is_object() || user[0].value("type", "") != "image" ||
      !user[0].contains("image") || !user[0]["image"].is_string()) {
    throw fail("user message must hold an image then a text part");
  }
  if (m[0]["content"].size() != 1 || m[2]["content"].size() != 1) {
    throw fail("system and assistant messages hold one text part");
  }
  ChatRecord record;
  record.id = doc.value("id", "");
  record.system_text = text_of(m[0]["content"][0]);
  record.image_ref = user[0]["image"].get<std::string>();
  record.user_text = text_of(user[1]);
  record.assistant_text = text_of(m[2]["content"][0]);
  return record;
}

ChatExport ExportChatRecords(const std::vector<DocumentPair>& pairs,
                             const fs::path& image_dir) {
  static constexpr std::string_view kImageExtensions[] = {".png", ".jpg", ".jpeg",
                                                          ".tif", ".tiff"};
  ChatExport out;
  for (const DocumentPair& pair : pairs) {
    fs::path image;
    for (std::string_view ext : kImageExtensions) {
      fs::path candidate = image_dir / (pair.id + std::string(ext));
      std::error_code ec;
      if (fs::is_regular_file(candidate, ec)) {
        image = candidate;
        break;
      }
    }
    if (image.empty()) {
      out.skipped.push_back(pair.id + ": no image in " + image_dir.string());
      continue;
    }
    out.records.push_back({pair.id, std::string(kSystemPrompt),
                           std::string(kUserPrompt), image.string(), pair.reference});
  }
  return out;
}

std::string FormatChatRecords(const std::vector<ChatRecord>& records) {
  std::string out;
  for (const ChatRecord& r : records) out += ChatRecordToJson(r) + "\n";
  return out;
}

DatasetSplit SplitDataset(std::vector<DocumentPair> pairs, double train_fraction,
                          std::uint64_t seed) {
  if (!(train_fraction > 0.0 && train_fraction < 1.0)) {
    throw ValidationError("train fraction must lie strictly between 0 and 1");
  }
  std::mt19937_64 rng(seed);
  // Unbiased draw from [0, bound) by rejection.
  auto draw = [&rng](std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
      x = rng();
    } while (x >= limit);
    return x % bound;
  };
  for (std::size_t i = pairs.size(); i > 1; --i) {
    std::swap(pairs[i - 1], pairs[draw(i)]);
  }

  const std::size_t n = pairs.size();
  auto train_size =
      static_cast<std::size_t>(std::llround(static_cast<double>(n) * train_fraction));
  if (n >= 2) train_size = std::clamp<std::size_t>(train_size, 1, n - 1);
  train_size = std::min(train_size, n);

  DatasetSplit split;
  split.train.assign(std::make_move_iterator(pairs.begin()),
                     std::make_move_iterator(pairs.begin() + train_size));
  split.test.assign(std::make_move_iterator(pairs.begin() + train_size),
                    std::make_move_iterator(pairs.end()));
  return split;
}

namespace {

std::string Bool(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string SerializeFineTuneConfig(const FineTuneConfig& c) {
  std::string out;
  auto put = [&out](std::string_view key, const std::string& value) {
    out += std::string(key) + "=" + value + "\n";
  };
  put("num_train_epochs", std::to_string(c.num_train_epochs));
  put("per_device_train_batch_size", std::to_string(c.per_device_train_batch_size));
  put("gradient_accumulation_steps", std::to_string(c.gradient_accumulation_steps));
  put("warmup_steps", std::to_string(c.warmup_steps));
  put("learning_rate", csv::FormatDouble(c.learning_rate));
  put("weight_decay", csv::FormatDouble(c.weight_decay));
  put("logging_steps", std::to_string(c.logging_steps));
  put("save_strategy", c.save_strategy);
  put("save_steps", std::to_string(c.save_steps));
  put("save_total_limit", std::to_string(c.save_total_limit));
  put("optim", c.optim);
  put("bf16", Bool(c.bf16));
  put("remove_unused_columns", Bool(c.remove_unused_columns));
  put("gradient_checkpointing", Bool(c.gradient_checkpointing));
  put("dataset_text_field", c.dataset_text_field);
  put("skip_prepare_dataset", Bool(c.skip_prepare_dataset));
  return out;
}

FineTuneConfig ParseFineTuneConfig(std::string_view text) {
  std::map<std::string, std::string, std::less<>> values;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ValidationError("fine-tune config: expected key=value, got '" +
                            std::string(line) + "'");
    }
    std::string key(line.substr(0, eq));
    if (!values.emplace(key, std::string(line.substr(eq + 1))).second) {
      throw ValidationError("fine-tune config: duplicate key " + key);
    }
  }

  auto take = [&values](std::string_view key) {
    auto it = values.find(key);
    if (it == values.end()) {
      throw ValidationError("fine-tune config: missing key " + std::string(key));
    }
    std::string v = std::move(it->second);
    values.erase(it);
    return v;
  };
  auto positive_int = [&](std::string_view key) {
    const std::string v = take(key);
    int out = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size() || out <= 0) {
      throw ValidationError("fine-tune config: " + std::string(key) +
                            " must be a positive integer");
    }
    return out;
  };
  auto positive_real = [&](std::string_view key) {
    const double out = csv::ParseDouble(take(key));
    if (!(out > 0.0)) {
      throw ValidationError("fine-tune config: " + std::string(key) +
                            " must be positive");
    }
    return out;
  };
  auto boolean = [&](std::string_view key) {
    const std::string v = take(key);
    if (v == "true") return true;
    if (v == "false") return false;
    throw ValidationError("fine-tune config: " + std::string(key) +
                          " must be true or false");
  };

  FineTuneConfig c;
  c.num_train_epochs = positive_int("num_train_epochs");
  c.per_device_train_batch_size = positive_int("per_device_train_batch_size");
  c.gradient_accumulation_steps = positive_int("gradient_accumulation_steps");
  c.warmup_steps = positive_int("warmup_steps");
  c.learning_rate = positive_real("learning_rate");
  c.weight_decay = positive_real("weight_decay");
  c.logging_steps = positive_int("logging_steps");
  c.save_strategy = take("save_strategy");
  c.save_steps = positive_int("save_steps");
  c.save_total_limit = positive_int("save_total_limit");
  c.optim = take("optim");
  c.bf16 = boolean("bf16");
  c.remove_unused_columns = boolean("remove_unused_columns");
  c.gradient_checkpointing = boolean("gradient_checkpointing");
  c.dataset_text_field = take("dataset_text_field");
  c.skip_prepare_dataset = boolean("skip_prepare_dataset");
  if (!values.empty()) {
    throw ValidationError("fine-tune config: unknown key " + values.begin()->first);
  }
  return c;
}

}  // namespace ocrbench
