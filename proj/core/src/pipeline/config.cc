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

#include "cto/pipeline/config.h"

#include <charconv>
#include <fstream>
#include <map>
#include <set>

#include "cto/error.h"
#include "cto/net/endpoint.h"
#include "cto/text/utf8.h"

namespace cto::pipeline {

namespace fs = std::filesystem;
using stats::Variable;

namespace {

template <typename T>
T ParseNumber(const std::string& key, const std::string& value) {
  T out{};
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (ec != std::errc() || ptr != value.data() + value.size()) {
    throw ValidationError("config: " + key + " is not a valid number: '" +
                          value + "'");
  }
  return out;
}

std::vector<std::pair<Variable, Variable>> ParsePairs(const std::string& value) {
  std::vector<std::pair<Variable, Variable>> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    std::size_t end = value.find(',', start);
    if (end == std::string::npos) end = value.size();
    const std::string item =
        text::NormalizeWhitespace(value.substr(start, end - start));
    start = end + 1;
    if (item.empty()) continue;
    const std::size_t colon = item.find(':');
    auto a = stats::ParseVariable(text::NormalizeWhitespace(item.substr(0, colon)));
    auto b = colon == std::string::npos
                 ? std::nullopt
                 : stats::ParseVariable(text::NormalizeWhitespace(item.substr(colon + 1)));
    if (!a || !b) {
      throw ValidationError("config: associations entry '" + item +
                            "' is not variable:variable");
    }
    out.emplace_back(*a, *b);
  }
  return out;
}

void RequireFile(const char* key, const fs::path& p) {
  if (p.empty()) throw ValidationError(std::string("config: ") + key + " is required");
  if (!fs::is_regular_file(p)) {
    throw IoError(std::string("config: ") + key + " not found: " + p.string());
  }
}

}  // namespace

PipelineConfig PipelineConfig::FromStream(std::istream& in,
                                          const fs::path& base_dir) {
  PipelineConfig c;
  std::set<std::string> seen;
  const auto path = [&](const std::string& v) {
    fs::path p(v);
    return p.is_absolute() ? p : (base_dir / p).lexically_normal();
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string trimmed = text::NormalizeWhitespace(line);
    if (trimmed.empty() || trimmed[0] == '#') continue;
    const std::size_t eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ValidationError("config line " + std::to_string(line_no) +
                            ": expected key = value");
    }
    const std::string key = text::NormalizeWhitespace(trimmed.substr(0, eq));
    const std::string value = text::NormalizeWhitespace(trimmed.substr(eq + 1));
    if (!seen.insert(key).second) {
      throw ValidationError("config: key '" + key + "' given twice");
    }
    if (key == "corpus_path") {
      c.corpus_path = path(value);
    } else if (key == "registry_path") {
      c.registry_path = path(value);
    } else if (key == "annotation_log_path") {
      c.annotation_log_path = path(value);
    } else if (key == "lexicon_path") {
      c.lexicon_path = path(value);
    } else if (key == "output_dir") {
      c.output_dir = path(value);
    } else if (key == "rules_path") {
      c.rules_path = path(value);
    } else if (key == "party_aliases_path") {
      c.party_aliases_path = path(value);
    } else if (key == "coalitions_path") {
      c.coalitions_path = path(value);
    } else if (key == "ner_endpoint") {
      c.ner_endpoint = value;
    } else if (key == "topic_endpoint") {
      c.topic_endpoint = value;
    } else if (key == "seed") {
      c.seed = ParseNumber<std::uint64_t>(key, value);
    } else if (key == "iterations") {
      c.iterations = ParseNumber<int>(key, value);
    } else if (key == "host") {
      c.host = value;
    } else if (key == "port") {
      c.port = ParseNumber<int>(key, value);
    } else if (key == "threads") {
      c.threads = ParseNumber<unsigned>(key, value);
    } else if (key == "v_source") {
      auto s = stats::ParseVSource(value);
      if (!s) throw ValidationError("config: v_source must be observed or replicate_mean");
      c.v_source = *s;
    } else if (key == "associations") {
      c.associations = ParsePairs(value);
    } else {
      throw ValidationError("config: unknown key '" + key + "'");
    }
  }
  return c;
}

PipelineConfig PipelineConfig::FromFile(const fs::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  return FromStream(in, path.parent_path());
}

void PipelineConfig::Validate() const {
  if (corpus_path.empty()) throw ValidationError("config: corpus_path is required");
  if (!fs::exists(corpus_path)) {
    throw IoError("config: corpus_path not found: " + corpus_path.string());
  }
  RequireFile("registry_path", registry_path);
  RequireFile("lexicon_path", lexicon_path);
  if (rules_path) RequireFile("rules_path", *rules_path);
  if (party_aliases_path) RequireFile("party_aliases_path", *party_aliases_path);
  if (coalitions_path) RequireFile("coalitions_path", *coalitions_path);
  if (annotation_log_path.empty()) {
    throw ValidationError("config: annotation_log_path is required");
  }
  const fs::path log_dir = annotation_log_path.parent_path();
  if (!log_dir.empty() && !fs::is_directory(log_dir)) {
    throw IoError("config: directory of annotation_log_path not found: " +
                  log_dir.string());
  }
  if (fs::exists(annotation_log_path) && !fs::is_regular_file(annotation_log_path)) {
    throw IoError("config: annotation_log_path is not a file: " +
                  annotation_log_path.string());
  }
  if (!seed) throw ValidationError("config: seed is required");
  if (iterations < stats::kMinIterations) {
    throw ValidationError("config: iterations must be >= " +
                          std::to_string(stats::kMinIterations));
  }
  if (threads == 0) throw ValidationError("config: threads must be >= 1");
  if (port < 0 || port > 65535) throw ValidationError("config: port out of range");
  if (ner_endpoint) net::Endpoint::Parse(*ner_endpoint);
  if (topic_endpoint) net::Endpoint::Parse(*topic_endpoint);
  if (output_dir.empty()) throw ValidationError("config: output_dir is required");
  std::error_code ec;
  fs::create_directories(output_dir, ec);
  if (ec || !fs::is_directory(output_dir)) {
    throw IoError("config: cannot create output_dir " + output_dir.string());
  }
}

const std::vector<std::pair<Variable, Variable>>& DefaultAssociations() {
  static const std::vector<std::pair<Variable, Variable>> kPairs = {
      {Variable::kPresidentName, Variable::kPcoName},
      {Variable::kPresidentName, Variable::kPcoGender},
      {Variable::kPresidentName, Variable::kPcoParty},
      {Variable::kPresidentName, Variable::kCause},
      {Variable::kPresidentName, Variable::kPcoAffiliation},
      {Variable::kPresidentGender, Variable::kPcoGender},
      {Variable::kPresidentGender, Variable::kPcoParty},
      {Variable::kPresidentGender, Variable::kCause},
      {Variable::kPresidentGender, Variable::kPcoAffiliation},
      {Variable::kPresidentParty, Variable::kPcoParty},
      {Variable::kPcoName, Variable::kCause},
      {Variable::kPcoGender, Variable::kCause},
      {Variable::kPcoGender, Variable::kLp},
      {Variable::kPcoParty, Variable::kCause},
      {Variable::kCause, Variable::kLp},
      {Variable::kCause, Variable::kDate},
      {Variable::kCause, Variable::kYear},
      {Variable::kCause, Variable::kSessionNumber},
      {Variable::kHasCto, Variable::kDate},
      {Variable::kHasCto, Variable::kLp},
      {Variable::kHasCto, Variable::kSessionNumber},
      {Variable::kHasCto, Variable::kAgendaPosition},
      {Variable::kHasCto, Variable::kTopic},
      {Variable::kHasCto, Variable::kYear},
  };
  return kPairs;
}

}  // namespace cto::pipeline
