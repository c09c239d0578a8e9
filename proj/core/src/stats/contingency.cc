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

#include "cto/stats/contingency.h"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>

#include "cto/error.h"

namespace cto::stats {

namespace {

bool AsInteger(const std::string& s, long long& out) {
  if (s.empty()) return false;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string> SortLabels(const std::set<std::string>& labels) {
  std::vector<std::string> out(labels.begin(), labels.end());
  std::vector<long long> numbers(out.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!AsInteger(out[i], numbers[i])) return out;
  }
  std::vector<std::size_t> order(out.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return numbers[a] != numbers[b] ? numbers[a] < numbers[b] : out[a] < out[b];
  });
  std::vector<std::string> sorted;
  sorted.reserve(out.size());
  for (std::size_t i : order) sorted.push_back(out[i]);
  return sorted;
}

}  // namespace

ContingencyTable ContingencyTable::Finish(
    Variable row, Variable col, std::vector<std::string> row_labels,
    std::vector<std::string> col_labels,
    std::vector<std::vector<std::int64_t>> counts) {
  std::vector<bool> keep_row(row_labels.size(), false);
  std::vector<bool> keep_col(col_labels.size(), false);
  for (std::size_t r = 0; r < counts.size(); ++r) {
    for (std::size_t c = 0; c < counts[r].size(); ++c) {
      if (counts[r][c] > 0) keep_row[r] = keep_col[c] = true;
    }
  }
  ContingencyTable t;
  t.row_variable_ = row;
  t.col_variable_ = col;
  std::vector<std::size_t> cols_kept;
  for (std::size_t c = 0; c < col_labels.size(); ++c) {
    if (keep_col[c]) {
      cols_kept.push_back(c);
      t.col_labels_.push_back(std::move(col_labels[c]));
    }
  }
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    if (!keep_row[r]) continue;
    t.row_labels_.push_back(std::move(row_labels[r]));
    std::vector<std::int64_t> line;
    line.reserve(cols_kept.size());
    for (std::size_t c : cols_kept) {
      line.push_back(counts[r][c]);
      t.n_ += counts[r][c];
    }
    t.counts_.push_back(std::move(line));
  }
  if (t.rows() < 2 || t.cols() < 2) {
    throw DegenerateTableError(
        std::string(VariableName(row)) + " x " + std::string(VariableName(col)) +
        ": need at least 2 labels per axis, got " + std::to_string(t.rows()) +
        " x " + std::to_string(t.cols()));
  }
  return t;
}

ContingencyTable ContingencyTable::FromCounts(
    const std::vector<std::vector<std::int64_t>>& counts) {
  const std::size_t width = counts.empty() ? 0 : counts.front().size();
  std::vector<std::string> rows, cols;
  for (std::size_t r = 0; r < counts.size(); ++r) {
    if (counts[r].size() != width) {
      throw ValidationError("contingency table rows differ in length");
    }
    for (auto v : counts[r]) {
      if (v < 0) throw ValidationError("negative cell count");
    }
    rows.push_back("r" + std::to_string(r));
  }
  for (std::size_t c = 0; c < width; ++c) cols.push_back("c" + std::to_string(c));
  return Finish(Variable::kCause, Variable::kCause, std::move(rows),
                std::move(cols), counts);
}

std::vector<std::int64_t> ContingencyTable::RowTotals() const {
  std::vector<std::int64_t> out(rows(), 0);
  for (std::size_t r = 0; r < rows(); ++r) {
    for (auto v : counts_[r]) out[r] += v;
  }
  return out;
}

std::vector<std::int64_t> ContingencyTable::ColTotals() const {
  std::vector<std::int64_t> out(cols(), 0);
  for (const auto& line : counts_) {
    for (std::size_t c = 0; c < line.size(); ++c) out[c] += line[c];
  }
  return out;
}

ContingencyTable BuildTable(const std::vector<AnalysisRecord>& records,
                            Variable row, Variable col) {
  std::set<std::string> row_set, col_set;
  std::vector<const AnalysisRecord*> used;
  for (const auto& rec : records) {
    const auto& a = rec.Get(row);
    const auto& b = rec.Get(col);
    if (!a || !b) continue;
    row_set.insert(*a);
    col_set.insert(*b);
    used.push_back(&rec);
  }
  auto row_labels = SortLabels(row_set);
  auto col_labels = SortLabels(col_set);
  std::map<std::string, std::size_t> row_index, col_index;
  for (std::size_t i = 0; i < row_labels.size(); ++i) row_index[row_labels[i]] = i;
  for (std::size_t i = 0; i < col_labels.size(); ++i) col_index[col_labels[i]] = i;
  std::vector<std::vector<std::int64_t>> counts(
      row_labels.size(), std::vector<std::int64_t>(col_labels.size(), 0));
  std::vector<std::string> ids;
  ids.reserve(used.size());
  for (const auto* rec : used) {
    ++counts[row_index[*rec->Get(row)]][col_index[*rec->Get(col)]];
    ids.push_back(rec->id);
  }
  auto table = ContingencyTable::Finish(row, col, std::move(row_labels),
                                        std::move(col_labels), std::move(counts));
  std::sort(ids.begin(), ids.end());
  table.record_ids_ = std::move(ids);
  return table;
}

double PearsonStatistic(const std::vector<std::int64_t>& cells,
                        const std::vector<std::int64_t>& row_totals,
                        const std::vector<std::int64_t>& col_totals,
                        std::int64_t n) {
  const std::size_t cols = col_totals.size();
  const double total = static_cast<double>(n);
  double chi2 = 0.0;
  for (std::size_t r = 0; r < row_totals.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const double expected =
          static_cast<double>(row_totals[r]) * static_cast<double>(col_totals[c]) /
          total;
      const double diff = static_cast<double>(cells[r * cols + c]) - expected;
      chi2 += diff * diff / expected;
    }
  }
  return chi2;
}

ChiSquare PearsonChi2(const ContingencyTable& table) {
  const auto row_totals = table.RowTotals();
  const auto col_totals = table.ColTotals();
  for (auto v : row_totals) {
    if (v <= 0) throw DomainError("zero row marginal");
  }
  for (auto v : col_totals) {
    if (v <= 0) throw DomainError("zero column marginal");
  }
  std::vector<std::int64_t> cells;
  cells.reserve(table.rows() * table.cols());
  for (const auto& line : table.counts()) {
    cells.insert(cells.end(), line.begin(), line.end());
  }
  ChiSquare out;
  out.statistic = PearsonStatistic(cells, row_totals, col_totals, table.n());
  out.df = static_cast<int>((table.rows() - 1) * (table.cols() - 1));
  return out;
}

}  // namespace cto::stats
