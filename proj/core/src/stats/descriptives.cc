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

#include "cto/stats/descriptives.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>

#include "cto/error.h"

namespace cto::stats {

double Median(std::vector<double> values) {
  if (values.empty()) throw DomainError("median of an empty set");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

double PopulationStdDev(const std::vector<double>& values) {
  if (values.empty()) throw DomainError("standard deviation of an empty set");
  double mean = 0.0;
  for (double v : values) mean += v;
  mean /= static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - mean) * (v - mean);
  return std::sqrt(ss / static_cast<double>(values.size()));
}

namespace {

// Integer labels sort numerically ahead of the rest.
bool LabelLess(const std::string& a, const std::string& b) {
  long long x = 0, y = 0;
  const bool ax = std::from_chars(a.data(), a.data() + a.size(), x).ptr ==
                      a.data() + a.size() && !a.empty();
  const bool by = std::from_chars(b.data(), b.data() + b.size(), y).ptr ==
                      b.data() + b.size() && !b.empty();
  if (ax && by) return x != y ? x < y : a < b;
  if (ax != by) return ax;
  return a < b;
}

}  // namespace

DescriptiveStats GroupDescriptives(const std::vector<AnalysisRecord>& records,
                                   Variable group_by, const CountingRule& rule,
                                   const std::vector<std::string>& universe) {
  std::map<std::string, std::int64_t, decltype(&LabelLess)> counts(&LabelLess);
  for (const auto& g : universe) counts.emplace(g, 0);
  for (const auto& rec : records) {
    const auto& g = rec.Get(group_by);
    if (!g) continue;
    if (universe.empty()) counts.emplace(*g, 0);
    auto it = counts.find(*g);
    if (it != counts.end() && rule(rec)) ++it->second;
  }
  if (counts.empty()) {
    throw DomainError(std::string("no groups for ") +
                      std::string(VariableName(group_by)));
  }
  DescriptiveStats out;
  out.group_variable = group_by;
  std::vector<double> values;
  for (const auto& [label, count] : counts) {
    out.per_group.emplace_back(label, count);
    out.total += count;
    values.push_back(static_cast<double>(count));
  }
  out.median = Median(values);
  out.std_dev = PopulationStdDev(values);
  return out;
}

}  // namespace cto::stats
