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

#ifndef CTO_CORPUS_PARTY_H_
#define CTO_CORPUS_PARTY_H_

#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace cto::corpus {

// Canonical party codes used throughout the toolkit.
inline constexpr std::string_view kCduCsu = "CDU/CSU";
inline constexpr std::string_view kSpd = "SPD";
inline constexpr std::string_view kFdp = "FDP";
inline constexpr std::string_view kGruene = "GRÜNE";
inline constexpr std::string_view kLinke = "LINKE/PDS";
inline constexpr std::string_view kAfd = "AfD";
inline constexpr std::string_view kOtherParty = "other";

const std::vector<std::string>& CanonicalParties();

// Maps the many spellings found in protocols and registry data onto the
// canonical set. Lookup is case-insensitive and ignores whitespace.
class PartyAliases {
 public:
  // Built-in table.
  PartyAliases();

  // Tab-separated "alias<TAB>canonical" lines; '#' starts a comment. Entries
  // extend (and override) the built-in table.
  static PartyAliases FromStream(std::istream& in);

  void Add(std::string_view alias, std::string_view canonical);

  // nullopt for unknown strings (treated as "no party").
  std::optional<std::string> Canonicalize(std::string_view raw) const;

 private:
  static std::string Key(std::string_view raw);

  std::map<std::string, std::string> aliases_;
};

// Which canonical parties formed the government in each legislative period.
class CoalitionTable {
 public:
  // Bundled table for LPs 1-19.
  CoalitionTable();

  // "lp<TAB>party,party,..." lines; replaces the bundled table entirely.
  static CoalitionTable FromStream(std::istream& in);

  // nullopt when the LP is not in the table.
  std::optional<bool> IsCoalition(int lp, std::string_view party) const;

  const std::map<int, std::set<std::string>>& table() const { return table_; }

 private:
  std::map<int, std::set<std::string>> table_;
};

}  // namespace cto::corpus

#endif  // CTO_CORPUS_PARTY_H_
