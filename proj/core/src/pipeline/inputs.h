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

#ifndef CTO_SRC_PIPELINE_INPUTS_H_
#define CTO_SRC_PIPELINE_INPUTS_H_

#include <cstddef>
#include <exception>
#include <fstream>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "cto/annotation/queue.h"
#include "cto/annotation/store.h"
#include "cto/corpus/party.h"
#include "cto/corpus/types.h"
#include "cto/detect/detector.h"
#include "cto/detect/rules.h"
#include "cto/error.h"
#include "cto/mentions/extractor.h"
#include "cto/pipeline/config.h"
#include "cto/pipeline/stages.h"
#include "cto/registry/disambiguation.h"
#include "cto/registry/registry.h"

namespace cto::pipeline::internal {

corpus::PartyAliases LoadAliases(const PipelineConfig& config);
corpus::CoalitionTable LoadCoalitions(const PipelineConfig& config);
detect::RuleConfig LoadRules(const PipelineConfig& config);
registry::MemberRegistry LoadMembers(const PipelineConfig& config,
                                     const corpus::PartyAliases& aliases);
// The annotation log, with every resolved_member checked against the
// registry; later appends are checked the same way.
annotation::AnnotationStore LoadStore(const PipelineConfig& config,
                                      const registry::MemberRegistry& members);

// DependencyError for the first stage whose artifact is missing.
void Require(const PipelineConfig& config, std::initializer_list<Stage> stages);

std::ifstream OpenArtifact(const PipelineConfig& config, const char* name);

template <typename Reader>
auto ReadArtifact(const PipelineConfig& config, const char* name, Reader read) {
  std::ifstream in = OpenArtifact(config, name);
  try {
    return read(in);
  } catch (const ParseError& e) {
    throw ParseError(std::string(name) + ": " + e.what(), e.line(), e.column());
  }
}

// Written to a temporary file and renamed, so a failed stage leaves the
// previous artifact intact.
void WriteArtifact(const PipelineConfig& config, const char* name,
                   const std::function<void(std::ostream&)>& write);

// Calls fn(i) for i in [0, n) on up to `threads` workers; rethrows the
// first failure.
void ParallelFor(std::size_t n, unsigned threads,
                 const std::function<void(std::size_t)>& fn);

struct QueueInputs {
  const std::vector<corpus::Protocol>* corpus = nullptr;
  const std::vector<detect::CtoEvent>* events = nullptr;
  const std::vector<mentions::ExtractionOutcome>* outcomes = nullptr;
  const std::vector<registry::Resolution>* resolutions = nullptr;
};

annotation::AnnotationQueue BuildQueue(const QueueInputs& in,
                                       annotation::AnnotationStore store,
                                       detect::RuleMatcher matcher);

void WriteQueue(std::ostream& out, const annotation::AnnotationQueue& queue);

}  // namespace cto::pipeline::internal

#endif  // CTO_SRC_PIPELINE_INPUTS_H_
