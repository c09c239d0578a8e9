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

#ifndef CTO_STATS_DESCRIPTIVES_H_
#define CTO_STATS_DESCRIPTIVES_H_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cto/stats/variables.h"

namespace cto::stats {

// Middle value, or the mean of the two middle values. DomainError if empty.
double Median(std::vector<double> values);
// Divisor is the number of values. DomainError if empty.
double PopulationStdDev(const std::vector<double>& values);

struct DescriptiveStats {
  Variable group_variable = Variable::kLp;
  // Group label -> counted records, in label order.
  std::vector<std::pair<std::string, std::int64_t>> per_group;
  double median = 0.0;
  double std_dev = 0.0;
  std::int64_t total = 0;
};

using CountingRule = std::function<bool(const AnalysisRecord&)>;

// Counts records satisfying `rule` per value of `group_by`. Groups are the
// labels in `universe` when given, otherwise every label of `group_by`
// observed among `records` (counted or not), so zero counts take part in
// the median and deviation. DomainError when there are no groups.
DescriptiveStats GroupDescriptives(const std::vector<AnalysisRecord>& records,
                                   Variable group_by, const CountingRule& rule,
                                   const std::vector<std::string>& universe = {});

}  // namespace cto::stats

#endif  // CTO_STATS_DESCRIPTIVES_H_
