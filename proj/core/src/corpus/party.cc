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

#include "cto/corpus/party.h"

#include <charconv>
#include <sstream>

#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::corpus {

namespace {

std::string Trim(std::string_view s) {
  return text::NormalizeWhitespace(s);
}

std::vector<std::string> SplitList(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t end = s.find(sep, start);
    const std::string item =
        Trim(s.substr(start, end == std::string_view::npos ? s.npos
                                                           : end - start));
    if (!item.empty()) out.push_back(item);
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

}  // namespace

const std::vector<std::string>& CanonicalParties() {
  static const std::vector<std::string> kParties = {
      std::string(kCduCsu), std::string(kSpd),   std::string(kFdp),
      std::string(kGruene), std::string(kLinke), std::string(kAfd),
      std::string(kOtherParty)};
  return kParties;
}

std::string PartyAliases::Key(std::string_view raw) {
  std::string folded = text::FoldCase(raw);
  std::string key;
  for (char c : folded) {
    if (c != ' ' && c != '\t' && c != '.' && c != '-') key.push_back(c);
  }
  return key;
}

PartyAliases::PartyAliases() {
  const std::pair<const char*, std::string_view> kBuiltin[] = {
      {"CDU/CSU", kCduCsu},
      {"CDU", kCduCsu},
      {"CSU", kCduCsu},
      {"Union", kCduCsu},
      {"SPD", kSpd},
      {"FDP", kFdp},
      {"F.D.P.", kFdp},
      {"DVP", kFdp},
      {"GRÜNE", kGruene},
      {"Grüne", kGruene},
      {"DIE GRÜNEN", kGruene},
      {"BÜNDNIS 90/DIE GRÜNEN", kGruene},
      {"Bündnis 90/Die Grünen", kGruene},
      {"B90/GRÜNE", kGruene},
      {"Bündnis 90", kGruene},
      {"LINKE/PDS", kLinke},
      {"DIE LINKE", kLinke},
      {"Die Linke", kLinke},
      {"LINKE", kLinke},
      {"PDS", kLinke},
      {"PDS/LL", kLinke},
      {"Linkspartei.PDS", kLinke},
      {"AfD", kAfd},
      {"DP", kOtherParty},
      {"BP", kOtherParty},
      {"KPD", kOtherParty},
      {"WAV", kOtherParty},
      {"Zentrum", kOtherParty},
      {"GB/BHE", kOtherParty},
      {"BHE", kOtherParty},
      {"DRP", kOtherParty},
      {"SSW", kOtherParty},
      {"fraktionslos", kOtherParty},
      {"parteilos", kOtherParty},
      {"other", kOtherParty},
  };
  for (const auto& [alias, canonical] : kBuiltin) Add(alias, canonical);
}

void PartyAliases::Add(std::string_view alias, std::string_view canonical) {
  aliases_[Key(alias)] = std::string(canonical);
}

PartyAliases PartyAliases::FromStream(std::istream& in) {
  PartyAliases aliases;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos) {
      throw ParseError("party alias line needs alias<TAB>canonical", line_no,
                       1);
    }
    const std::string canonical = Trim(line.substr(tab + 1));
    bool known = false;
    for (const auto& p : CanonicalParties()) known = known || p == canonical;
    if (!known) {
      throw ParseError("unknown canonical party '" + canonical + "'", line_no,
                       tab + 2);
    }
    aliases.Add(Trim(line.substr(0, tab)), canonical);
  }
  return aliases;
}

std::optional<std::string> PartyAliases::Canonicalize(
    std::string_view raw) const {
  const std::string key = Key(raw);
  if (key.empty()) return std::nullopt;
  auto it = aliases_.find(key);
  if (it == aliases_.end()) return std::nullopt;
  return it->second;
}

CoalitionTable::CoalitionTable() {
  const std::string cdu(kCduCsu);
  const std::string spd(kSpd);
  const std::string fdp(kFdp);
  const std::string gruene(kGruene);
  // Majority coalition for the larger part of each period.
  table_ = {
      {1, {cdu, fdp}},  {2, {cdu, fdp}},     {3, {cdu}},
      {4, {cdu, fdp}},  {5, {cdu, spd}},     {6, {spd, fdp}},
      {7, {spd, fdp}},  {8, {spd, fdp}},     {9, {spd, fdp}},
      {10, {cdu, fdp}}, {11, {cdu, fdp}},    {12, {cdu, fdp}},
      {13, {cdu, fdp}}, {14, {spd, gruene}}, {15, {spd, gruene}},
      {16, {cdu, spd}}, {17, {cdu, fdp}},    {18, {cdu, spd}},
      {19, {cdu, spd}},
  };
}

CoalitionTable CoalitionTable::FromStream(std::istream& in) {
  CoalitionTable table;
  table.table_.clear();
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    const std::size_t tab = line.find('\t');
    int lp = 0;
    const std::string lp_text =
        Trim(tab == std::string::npos ? line : line.substr(0, tab));
    auto [ptr, ec] =
        std::from_chars(lp_text.data(), lp_text.data() + lp_text.size(), lp);
    if (tab == std::string::npos || ec != std::errc{} ||
        ptr != lp_text.data() + lp_text.size() || lp <= 0) {
      throw ParseError("coalition line needs lp<TAB>parties", line_no, 1);
    }
    auto& parties = table.table_[lp];
    for (auto& p : SplitList(std::string_view(line).substr(tab + 1), ',')) {
      parties.insert(std::move(p));
    }
  }
  return table;
}

std::optional<bool> CoalitionTable::IsCoalition(int lp,
                                                std::string_view party) const {
  auto it = table_.find(lp);
  if (it == table_.end()) return std::nullopt;
  return it->second.count(std::string(party)) > 0;
}

}  // namespace cto::corpus
