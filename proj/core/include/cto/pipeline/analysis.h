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

#ifndef CTO_PIPELINE_ANALYSIS_H_
#define CTO_PIPELINE_ANALYSIS_H_

#include <cstddef>
#include <vector>

#include "cto/annotation/store.h"
#include "cto/corpus/party.h"
#include "cto/corpus/types.h"
#include "cto/detect/detector.h"
#include "cto/registry/disambiguation.h"
#include "cto/registry/registry.h"
#include "cto/stats/variables.h"
#include "cto/topics/topics.h"

namespace cto::pipeline {

struct AnalysisInputs {
  const std::vector<corpus::Protocol>* corpus = nullptr;
  const std::vector<detect::CtoEvent>* events = nullptr;
  const std::vector<registry::Resolution>* resolutions = nullptr;
  const std::vector<topics::TopicAssignment>* topics = nullptr;
  const annotation::AnnotationStore* store = nullptr;
  const registry::MemberRegistry* registry = nullptr;
  const corpus::PartyAliases* aliases = nullptr;
  const corpus::CoalitionTable* coalitions = nullptr;
};

struct AnalysisData {
  // Non-rejected events carrying a cause, keyed by event id.
  std::vector<stats::AnalysisRecord> events;
  // Every contribution, keyed "LP-SESSION-INDEX". has_cto is "yes" for the
  // trigger contribution of an event in `events`.
  std::vector<stats::AnalysisRecord> contributions;
  std::size_t rejected = 0;
  std::size_t unannotated = 0;  // not rejected, no cause yet
};

// The person called to order is the annotator's choice when present,
// otherwise the automatic resolution. PCO variables stay empty for events
// without a resolved person. The event's topic is its trigger's topic;
// topic stays empty for "unknown".
AnalysisData BuildAnalysisData(const AnalysisInputs& in);

}  // namespace cto::pipeline

#endif  // CTO_PIPELINE_ANALYSIS_H_
