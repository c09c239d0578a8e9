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

#ifndef CTO_SRC_COMMON_CSV_H_
#define CTO_SRC_COMMON_CSV_H_

#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cto::csv {

// Reads one RFC 4180 record (quoted fields may contain commas, doubled
// quotes and newlines). Returns nullopt at end of input. `line` is advanced
// by the number of physical lines consumed. Throws ParseError on an
// unterminated quote.
std::optional<std::vector<std::string>> ReadRecord(std::istream& in,
                                                   std::size_t& line);

// Quotes a field when it contains a comma, quote or newline.
std::string Escape(std::string_view field);

}  // namespace cto::csv

#endif  // CTO_SRC_COMMON_CSV_H_
