// Copyright 2026 The cto Authors.
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

#ifndef CTO_PIPELINE_STAGES_H_
#define CTO_PIPELINE_STAGES_H_

#include <exception>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cto/annotation/http_api.h"
#include "cto/annotation/queue.h"
#include "cto/pipeline/config.h"
#include "cto/registry/registry.h"

namespace cto::pipeline {

enum class Stage {
  kIngest,
  kDetect,
  kExtract,
  kDisambiguate,
  kClassify,
  kServe,
  kStats,
  kReport,
};

std::string_view StageName(Stage s);
std::optional<Stage> ParseStage(std::string_view name);

// Artifact file names inside output_dir.
namespace artifact {
inline constexpr const char* kCorpus = "corpus.jsonl";
inline constexpr const char* kEvents = "events.jsonl";
inline constexpr const char* kMentions = "mentions.jsonl";
inline constexpr const char* kResolutions = "resolutions.jsonl";
inline constexpr const char* kQueue = "queue.jsonl";
inline constexpr const char* kTopics = "topics.jsonl";
inline constexpr const char* kAssociationsJson = "associations.json";
inline constexpr const char* kAssociationsCsv = "associations.csv";
inline constexpr const char* kCorpusCounts = "report_corpus_counts.csv";
inline constexpr const char* kCauseTotals = "report_cause_totals.csv";
inline constexpr const char* kGender = "report_gender.csv";
inline constexpr const char* kAssociationMatrix = "report_associations.csv";
inline constexpr const char* kPerLpSeries = "report_per_lp_series.csv";
inline constexpr const char* kTopicSeries = "report_topic_series.csv";
}  // namespace artifact

struct StageResult {
  // One-line JSON summary for stdout.
  std::string summary;
  // Human-readable notes for stderr (e.g. events excluded from stats).
  std::vector<std::string> warnings;
};

// Runs one non-serve stage: validates the config, checks upstream
// artifacts (DependencyError names the stage to run first), writes this
// stage's artifacts.
StageResult RunStage(Stage stage, const PipelineConfig& config);

// Everything the annotation API needs, rebuilt from artifacts and the
// current annotation log.
class ServeSession {
 public:
  explicit ServeSession(const PipelineConfig& config);

  annotation::ApiServer& server() { return *server_; }
  annotation::AnnotationQueue& queue() { return queue_; }
  std::string Summary() const;

 private:
  registry::MemberRegistry registry_;
  annotation::AnnotationQueue queue_;
  std::unique_ptr<annotation::ApiServer> server_;
};

// 0 ok; 2 invalid input or config; 3 missing upstream stage; 4 I/O or
// external service failure; 1 anything else.
int ExitCodeFor(const std::exception& e);

}  // namespace cto::pipeline

#endif  // CTO_PIPELINE_STAGES_H_
