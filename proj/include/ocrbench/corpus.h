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

#ifndef OCRBENCH_CORPUS_H_
#define OCRBENCH_CORPUS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ocrbench/document.h"

namespace ocrbench {

namespace fs = std::filesystem;

// On-disk working tree of the Tesseract fine-tuning workflow:
//
//   <root>/train/pdf/      original PDF documents
//   <root>/train/ocr/      transcripts (.gt.txt after preparation)
//   <root>/train/tiff/     300 DPI page images
//   <root>/train/lstmf/    intermediate LSTM training files
//   <root>/train/list.txt  manifest of absolute .lstmf paths
//   <root>/finetuning/     base and fine-tuned .traineddata
struct WorkspaceLayout {
  fs::path root;
  fs::path pdf_dir;
  fs::path ocr_dir;
  fs::path tiff_dir;
  fs::path lstmf_dir;
  fs::path finetune_dir;
  fs::path manifest;

  static WorkspaceLayout ForRoot(const fs::path& root);

  // Throws ValidationError unless every path lies under root.
  void Validate() const;
};

// A plain-text file keyed by its stem.
struct TextFile {
  std::string id;
  fs::path path;
  std::string text;
};

// Every *.txt file in `dir`, id-sorted. Missing directory is an
// EnvironmentError; two files sharing a stem is a ValidationError naming it.
std::vector<TextFile> LoadTextFiles(const fs::path& dir);

struct PairingResult {
  std::vector<DocumentPair> pairs;               // id-sorted
  std::vector<std::string> unmatched_references;  // ids, sorted
  std::vector<std::string> unmatched_hypotheses;  // ids, sorted
};

PairingResult DiscoverPairs(const fs::path& ref_dir, const fs::path& hyp_dir);

struct Rename {
  fs::path from;
  fs::path to;
};

struct RenamePlan {
  std::vector<Rename> renames;        // X.txt -> X.gt.txt
  std::vector<fs::path> conforming;   // already X.gt.txt
};

// Plans the .gt.txt renames without touching the directory. Throws
// ValidationError when a target already exists ("a.txt" next to
// "a.gt.txt").
RenamePlan PlanGtRenames(const fs::path& ocr_dir);

// Applies a plan; returns how many files were renamed.
std::size_t ApplyRenamePlan(const RenamePlan& plan);

struct ManifestResult {
  std::size_t entries = 0;
  bool changed = false;  // false when the file already had this content
  std::vector<std::string> warnings;
};

// Writes one absolute .lstmf path per line, sorted, newline-terminated.
// An empty directory yields an empty manifest and a warning.
ManifestResult WriteManifest(const fs::path& lstmf_dir, const fs::path& out);

// Chat-format fine-tuning records for the vision-language OCR model.
extern const std::string_view kSystemPrompt;
extern const std::string_view kUserPrompt;

struct ChatRecord {
  std::string id;
  std::string system_text;
  std::string user_text;
  std::string image_ref;
  std::string assistant_text;

  bool operator==(const ChatRecord&) const = default;
};

// Single-line JSON: {"id":..., "messages":[system, user(image, text),
// assistant]} with role/content/type/image/text members.
std::string ChatRecordToJson(const ChatRecord& record);
// Throws ValidationError when the line is not a well-formed record.
ChatRecord ChatRecordFromJson(std::string_view line);

struct ChatExport {
  std::vector<ChatRecord> records;
  std::vector<std::string> skipped;  // "<id>: <reason>"
};

// Image for pair X is the first of X.png, X.jpg, X.jpeg, X.tif, X.tiff found
// in `image_dir`. Pairs without an image are skipped and reported.
ChatExport ExportChatRecords(const std::vector<DocumentPair>& pairs,
                             const fs::path& image_dir);

// Newline-delimited JSON, one record per line.
std::string FormatChatRecords(const std::vector<ChatRecord>& records);

struct DatasetSplit {
  std::vector<DocumentPair> train;
  std::vector<DocumentPair> test;
};

// Seeded Fisher-Yates shuffle (mt19937_64 with rejection sampling, so the
// split is the same on every standard library), then the first
// round(N * train_fraction) items train. With N >= 2 both sides keep at
// least one item. Throws ValidationError unless 0 < train_fraction < 1.
DatasetSplit SplitDataset(std::vector<DocumentPair> pairs, double train_fraction,
                          std::uint64_t seed);

// Vision-language fine-tuning hyperparameters.
struct FineTuneConfig {
  int num_train_epochs = 1;
  int per_device_train_batch_size = 1;
  int gradient_accumulation_steps = 8;
  int warmup_steps = 10;
  double learning_rate = 1e-4;
  double weight_decay = 0.01;
  int logging_steps = 10;
  std::string save_strategy = "steps";
  int save_steps = 20;
  int save_total_limit = 1;
  std::string optim = "adamw_torch_fused";
  bool bf16 = true;
  bool remove_unused_columns = false;
  bool gradient_checkpointing = true;
  std::string dataset_text_field;
  bool skip_prepare_dataset = true;

  bool operator==(const FineTuneConfig&) const = default;
};

// Flat key=value lines in a fixed key order.
std::string SerializeFineTuneConfig(const FineTuneConfig& config);
// Every key must be present exactly once and numeric values positive.
FineTuneConfig ParseFineTuneConfig(std::string_view text);

}  // namespace ocrbench

#endif  // OCRBENCH_CORPUS_H_
