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

#include "cto/corpus/types.h"

#include <charconv>
#include <cstdio>

#include "cto/text/utf8.h"

namespace cto::corpus {

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kPresident:
      return "president";
    case Role::kMember:
      return "member";
    case Role::kOther:
      return "other";
  }
  return "other";
}

Role ParseRole(std::string_view value) {
  const std::string v = text::FoldCase(value);
  if (v == "president" || v == "presidency" || v == "praesident" ||
      v == "präsident" || v == "vizepräsident" || v == "chair") {
    return Role::kPresident;
  }
  if (v == "member" || v == "mp" || v == "abgeordneter" || v == "abgeordnete") {
    return Role::kMember;
  }
  return Role::kOther;
}

std::optional<Date> ParseDate(std::string_view value) {
  if (value.size() != 10 || value[4] != '-' || value[7] != '-') {
    return std::nullopt;
  }
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  auto parse = [&](std::size_t off, std::size_t len, auto& out) {
    auto [ptr, ec] =
        std::from_chars(value.data() + off, value.data() + off + len, out);
    return ec == std::errc{} && ptr == value.data() + off + len;
  };
  if (!parse(0, 4, y) || !parse(5, 2, m) || !parse(8, 2, d)) {
    return std::nullopt;
  }
  Date date{std::chrono::year{y}, std::chrono::month{m}, std::chrono::day{d}};
  if (!date.ok()) return std::nullopt;
  return date;
}

std::string FormatDate(const Date& date) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u",
                static_cast<int>(date.year()),
                static_cast<unsigned>(date.month()),
                static_cast<unsigned>(date.day()));
  return buf;
}

}  // namespace cto::corpus
