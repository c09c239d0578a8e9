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

#ifndef CTO_PIPELINE_CONFIG_H_
#define CTO_PIPELINE_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <istream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cto/stats/association.h"
#include "cto/stats/variables.h"

namespace cto::pipeline {

// Plain "key = value" file; '#' starts a comment line. Relative paths are
// taken relative to the directory holding the config file.
//
//   corpus_path          directory (or single file) of protocol XML
//   registry_path        member registry CSV
//   annotation_log_path  annotation log (created on first write)
//   lexicon_path         topic lexicon
//   output_dir           artifact directory (created if missing)
//   seed                 Monte-Carlo seed (required)
//   iterations           Monte-Carlo replicates, >= 999 (default 9999)
//   rules_path           detection rules (optional, built-in defaults)
//   party_aliases_path   extra party aliases (optional)
//   coalitions_path      coalition table (optional, built-in LP 1-19)
//   ner_endpoint         http://host:port/path (optional)
//   topic_endpoint       http://host:port/path (optional)
//   host, port           annotation API bind address (127.0.0.1:8080)
//   threads              worker threads (default 1)
//   v_source             observed | replicate_mean (default observed)
//   associations         var:var pairs, comma-separated (optional)
struct PipelineConfig {
  std::filesystem::path corpus_path;
  std::filesystem::path registry_path;
  std::filesystem::path annotation_log_path;
  std::filesystem::path lexicon_path;
  std::filesystem::path output_dir;
  std::optional<std::uint64_t> seed;
  int iterations = stats::kDefaultIterations;
  std::optional<std::filesystem::path> rules_path;
  std::optional<std::filesystem::path> party_aliases_path;
  std::optional<std::filesystem::path> coalitions_path;
  std::optional<std::string> ner_endpoint;
  std::optional<std::string> topic_endpoint;
  std::string host = "127.0.0.1";
  int port = 8080;
  unsigned threads = 1;
  stats::VSource v_source = stats::VSource::kObserved;
  std::vector<std::pair<stats::Variable, stats::Variable>> associations;

  // ValidationError for unknown keys, repeated keys and malformed values.
  static PipelineConfig FromStream(std::istream& in,
                                   const std::filesystem::path& base_dir);
  static PipelineConfig FromFile(const std::filesystem::path& path);

  // Checks every input path, value ranges and endpoint syntax; creates
  // output_dir. IoError for missing inputs, ValidationError otherwise.
  void Validate() const;
};

// The association matrix used when the config does not list pairs: event
// level pairs first, then has_cto against the contribution variables.
const std::vector<std::pair<stats::Variable, stats::Variable>>&
DefaultAssociations();

}  // namespace cto::pipeline

#endif  // CTO_PIPELINE_CONFIG_H_
