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

#ifndef CTO_STATS_CONTINGENCY_H_
#define CTO_STATS_CONTINGENCY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "cto/stats/variables.h"

namespace cto::stats {

// Counts over observed label pairs. Labels are sorted numerically when
// every label on the axis is an integer, byte-wise otherwise. All-zero rows
// and columns never survive construction.
class ContingencyTable {
 public:
  // Unlabelled table for direct use ("r0", "c0", ...). Drops zero rows and
  // columns; DegenerateTableError when fewer than two remain on an axis,
  // ValidationError on ragged or negative input.
  static ContingencyTable FromCounts(
      const std::vector<std::vector<std::int64_t>>& counts);

  Variable row_variable() const { return row_variable_; }
  Variable col_variable() const { return col_variable_; }
  const std::vector<std::string>& row_labels() const { return row_labels_; }
  const std::vector<std::string>& col_labels() const { return col_labels_; }
  const std::vector<std::vector<std::int64_t>>& counts() const {
    return counts_;
  }
  std::int64_t at(std::size_t r, std::size_t c) const { return counts_[r][c]; }
  std::size_t rows() const { return row_labels_.size(); }
  std::size_t cols() const { return col_labels_.size(); }
  std::int64_t n() const { return n_; }
  std::vector<std::int64_t> RowTotals() const;
  std::vector<std::int64_t> ColTotals() const;

  // Ids of the records counted, sorted.
  const std::vector<std::string>& record_ids() const { return record_ids_; }

 private:
  friend ContingencyTable BuildTable(const std::vector<AnalysisRecord>&,
                                     Variable, Variable);
  static ContingencyTable Finish(Variable row, Variable col,
                                 std::vector<std::string> row_labels,
                                 std::vector<std::string> col_labels,
                                 std::vector<std::vector<std::int64_t>> counts);

  Variable row_variable_ = Variable::kCause;
  Variable col_variable_ = Variable::kCause;
  std::vector<std::string> row_labels_;
  std::vector<std::string> col_labels_;
  std::vector<std::vector<std::int64_t>> counts_;
  std::int64_t n_ = 0;
  std::vector<std::string> record_ids_;
};

// Records lacking either value are skipped. DegenerateTableError when
// fewer than two labels remain on either axis.
ContingencyTable BuildTable(const std::vector<AnalysisRecord>& records,
                            Variable row, Variable col);

struct ChiSquare {
  double statistic = 0.0;
  int df = 0;
};

// Pearson statistic against the independence expectation R_i C_j / n.
ChiSquare PearsonChi2(const ContingencyTable& table);

// Same statistic for raw counts with given marginals; shared with the
// Monte-Carlo replicates.
double PearsonStatistic(const std::vector<std::int64_t>& cells,
                        const std::vector<std::int64_t>& row_totals,
                        const std::vector<std::int64_t>& col_totals,
                        std::int64_t n);

}  // namespace cto::stats

#endif  // CTO_STATS_CONTINGENCY_H_
