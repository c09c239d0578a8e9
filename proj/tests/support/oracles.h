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

#ifndef CTO_TESTS_SUPPORT_ORACLES_H_
#define CTO_TESTS_SUPPORT_ORACLES_H_

#include <cstdint>
#include <vector>

// Reference implementations written independently of the library, used
// as test oracles.
namespace cto::oracle {

using Table = std::vector<std::vector<std::int64_t>>;

// Sum over cells of (O - E)^2 / E with E = row * col / n. Zero rows and
// columns are skipped.
double Chi2(const Table& t);

// Exact permutation p-value: the share of all arrangements of the column
// labels against the fixed row labels whose chi2 is at least the observed
// one. Enumerates distinct multiset arrangements with next_permutation
// (every distinct arrangement stands for the same number of raw
// permutations, so the share is the same). Meant for n <= 12.
double ExactPermutationP(const Table& t);

// Number of distinct arrangements enumerated by ExactPermutationP.
std::uint64_t ArrangementCount(const Table& t);

}  // namespace cto::oracle

#endif  // CTO_TESTS_SUPPORT_ORACLES_H_
