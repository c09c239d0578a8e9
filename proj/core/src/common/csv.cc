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

#include "common/csv.h"

#include "cto/error.h"

namespace cto::csv {

std::optional<std::vector<std::string>> ReadRecord(std::istream& in,
                                                   std::size_t& line) {
  std::string physical;
  if (!std::getline(in, physical)) return std::nullopt;
  ++line;
  const std::size_t first_line = line;
  std::vector<std::string> fields(1);
  bool quoted = false;
  std::size_t i = 0;
  while (true) {
    if (i >= physical.size()) {
      if (!quoted) break;
      std::string more;
      if (!std::getline(in, more)) {
        throw ParseError("unterminated quoted field", first_line, 1);
      }
      ++line;
      fields.back().push_back('\n');
      physical = std::move(more);
      i = 0;
      continue;
    }
    const char c = physical[i++];
    if (quoted) {
      if (c == '"') {
        if (i < physical.size() && physical[i] == '"') {
          fields.back().push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        fields.back().push_back(c);
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.emplace_back();
    } else if (c == '\r' && i == physical.size()) {
      // tolerate CRLF
    } else {
      fields.back().push_back(c);
    }
  }
  return fields;
}

std::string Escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) {
    return std::string(field);
  }
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

}  // namespace cto::csv
