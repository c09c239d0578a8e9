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

#ifndef CTO_SRC_PIPELINE_REPORT_H_
#define CTO_SRC_PIPELINE_REPORT_H_

#include <string>
#include <vector>

#include "cto/corpus/types.h"
#include "cto/detect/detector.h"
#include "cto/pipeline/analysis.h"
#include "cto/pipeline/config.h"
#include "cto/stats/association.h"

namespace cto::pipeline::internal {

struct ReportInputs {
  const std::vector<corpus::Protocol>* corpus = nullptr;
  const std::vector<detect::CtoEvent>* events = nullptr;
  const AnalysisInputs* analysis_inputs = nullptr;
  const AnalysisData* analysis = nullptr;
  const std::vector<stats::AssociationEntry>* associations = nullptr;
};

// Writes the report CSVs; returns the file names written.
std::vector<std::string> WriteReports(const PipelineConfig& config,
                                      const ReportInputs& in);

}  // namespace cto::pipeline::internal

#endif  // CTO_SRC_PIPELINE_REPORT_H_
