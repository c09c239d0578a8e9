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

#ifndef CTO_STATS_ASSOCIATION_H_
#define CTO_STATS_ASSOCIATION_H_

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/stats/contingency.h"

namespace cto::stats {

inline constexpr int kDefaultIterations = 9999;
inline constexpr int kMinIterations = 999;

struct MonteCarloResult {
  double p_value = 1.0;
  std::int64_t exceed = 0;     // replicates with chi2 >= observed
  double mean_chi2 = 0.0;      // over replicates
  int iterations = 0;
  std::uint64_t seed = 0;
};

// Permutation test: each replicate shuffles the column labels of the n
// observations against the fixed row labels, so both marginals are kept.
// p = (1 + exceed) / (iterations + 1). Replicates are drawn in fixed
// blocks, each with its own stream derived from (seed, block), so the
// result does not depend on `threads`. ValidationError if iterations < 999.
MonteCarloResult MonteCarlo(const ContingencyTable& table, int iterations,
                            std::uint64_t seed, unsigned threads = 1);

inline double MonteCarloP(const ContingencyTable& table, int iterations,
                          std::uint64_t seed, unsigned threads = 1) {
  return MonteCarlo(table, iterations, seed, threads).p_value;
}

// sqrt((chi2 / n) / (min(rows, cols) - 1)). DomainError unless n > 0,
// min(rows, cols) >= 2 and chi2 >= 0.
double CramersV(double chi2, std::int64_t n, std::size_t rows, std::size_t cols);

enum class Effect { kNegligible, kSmall, kMedium, kLarge };

// <0.1 negligible, <0.3 small, <0.5 medium, otherwise large. DomainError
// outside [0, 1].
Effect EffectLabel(double v);
std::string_view EffectName(Effect e);
std::optional<Effect> ParseEffect(std::string_view name);

// Which chi2 feeds Cramer's V. The observed statistic is the default; the
// replicate mean exists for sensitivity checks.
enum class VSource { kObserved, kReplicateMean };
std::string_view VSourceName(VSource s);
std::optional<VSource> ParseVSource(std::string_view name);

struct AssociationOptions {
  int iterations = kDefaultIterations;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  VSource v_source = VSource::kObserved;
};

struct AssociationResult {
  Variable row_variable = Variable::kCause;
  Variable col_variable = Variable::kCause;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::int64_t n = 0;
  double chi2 = 0.0;
  int df = 0;
  double p_value = 1.0;
  int iterations = 0;
  std::uint64_t seed = 0;
  double cramers_v = 0.0;
  Effect effect = Effect::kNegligible;
  VSource v_source = VSource::kObserved;
  // Diagnostic only: upper tail of the chi-square distribution.
  double asymptotic_p = 1.0;

  bool operator==(const AssociationResult&) const = default;
};

AssociationResult Associate(const ContingencyTable& table,
                            const AssociationOptions& options);

// One row of the association matrix. Degenerate pairs keep a note instead
// of a result.
struct AssociationEntry {
  Variable row_variable = Variable::kCause;
  Variable col_variable = Variable::kCause;
  std::optional<AssociationResult> result;
  std::string note;
  std::vector<std::string> record_ids;

  bool operator==(const AssociationEntry&) const = default;
};

// {"associations": [...]} with full-precision numbers.
void WriteAssociationsJson(std::ostream& out,
                           const std::vector<AssociationEntry>& entries);
std::vector<AssociationEntry> ReadAssociationsJson(std::istream& in);

// variable1,variable2,n,chi2,df,p_value,cramers_v,effect,... with fixed
// decimals.
void WriteAssociationsCsv(std::ostream& out,
                          const std::vector<AssociationEntry>& entries);

}  // namespace cto::stats

#endif  // CTO_STATS_ASSOCIATION_H_
