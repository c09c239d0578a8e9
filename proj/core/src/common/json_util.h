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

#ifndef CTO_SRC_COMMON_JSON_UTIL_H_
#define CTO_SRC_COMMON_JSON_UTIL_H_

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cto/error.h"
#include "json.hpp"

namespace cto::jsonutil {

using Json = nlohmann::ordered_json;

// One compact JSON document per line. Blank lines are skipped; the line
// number of a malformed line is reported.
inline std::vector<Json> ReadLines(std::istream& in) {
  std::vector<Json> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error& e) {
      throw ParseError(std::string("malformed JSON record: ") + e.what(),
                       line_no, e.byte);
    }
  }
  return out;
}

inline std::string Dump(const Json& j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::replace);
}

// Typed field access with SchemaError on absence or wrong type.
template <typename T>
T Get(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) throw SchemaError(key);
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw SchemaError(key, "wrong type");
  }
}

template <typename T>
std::optional<T> GetOptional(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  try {
    return it->get<T>();
  } catch (const Json::exception&) {
    throw SchemaError(key, "wrong type");
  }
}

}  // namespace cto::jsonutil

#endif  // CTO_SRC_COMMON_JSON_UTIL_H_
