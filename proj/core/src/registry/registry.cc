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

#include "cto/registry/registry.h"

#include <algorithm>
#include <charconv>
#include <fstream>

#include "common/csv.h"
#include "cto/error.h"
#include "cto/text/utf8.h"

namespace cto::registry {

std::string_view GenderName(Gender g) {
  return g == Gender::kMale ? "male" : "female";
}

std::optional<Gender> ParseGender(std::string_view name) {
  if (name == "male") return Gender::kMale;
  if (name == "female") return Gender::kFemale;
  return std::nullopt;
}

std::optional<std::string> MemberRecord::PartyIn(int lp) const {
  for (const auto& stint : parties) {
    if (lp >= stint.lp_from && lp <= stint.lp_to) return stint.party;
  }
  return std::nullopt;
}

std::string MemberRecord::DisplayName() const {
  return first_name.empty() ? surname : first_name + " " + surname;
}

std::string NormalizeNameKey(std::string_view name) {
  const std::string plain =
      text::StripDiacritics(text::FoldCase(text::NormalizeWhitespace(name)));
  std::vector<std::string> kept;
  bool after_particle = false;
  for (const auto& t : text::Tokenize(plain)) {
    const std::string tok(t.text);
    const bool particle = tok == "von" || tok == "zu" || tok == "vom" ||
                          tok == "zum" || tok == "van" || tok == "de" ||
                          (after_particle && (tok == "der" || tok == "den" ||
                                              tok == "und"));
    after_particle = particle;
    if (!particle) kept.push_back(tok);
  }
  std::string key;
  for (const auto& k : kept) {
    if (!key.empty()) key.push_back(' ');
    key += k;
  }
  return key;
}

MemberRegistry::MemberRegistry(std::vector<MemberRecord> members)
    : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end(),
            [](const auto& a, const auto& b) { return a.member_id < b.member_id; });
  for (std::size_t i = 0; i < members_.size(); ++i) {
    by_surname_[NormalizeNameKey(members_[i].surname)].push_back(i);
  }
}

const MemberRecord* MemberRegistry::Find(std::string_view member_id) const {
  auto it = std::lower_bound(
      members_.begin(), members_.end(), member_id,
      [](const MemberRecord& m, std::string_view id) { return m.member_id < id; });
  if (it == members_.end() || it->member_id != member_id) return nullptr;
  return &*it;
}

std::vector<const MemberRecord*> MemberRegistry::Lookup(
    std::string_view surname_key, std::optional<int> lp) const {
  std::vector<const MemberRecord*> out;
  auto it = by_surname_.find(std::string(surname_key));
  if (it == by_surname_.end()) return out;
  for (std::size_t i : it->second) {
    if (!lp || members_[i].served_in(*lp)) out.push_back(&members_[i]);
  }
  return out;
}

namespace {

int ParseLp(const std::string& value, const char* field, std::size_t row) {
  int lp = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), lp);
  if (value.empty() || ec != std::errc{} || ptr != value.data() + value.size() ||
      lp <= 0) {
    throw SchemaError(field, "row " + std::to_string(row) +
                                 ": expected a positive integer, got '" +
                                 value + "'");
  }
  return lp;
}

}  // namespace

MemberRegistry LoadRegistry(std::istream& in,
                            const corpus::PartyAliases& aliases) {
  static const std::vector<std::string> kHeader = {
      "member_id", "surname", "first_name", "gender", "party", "lp_from", "lp_to"};
  std::size_t line = 0;
  auto header = csv::ReadRecord(in, line);
  if (!header) throw ParseError("registry is empty (missing header)", 1, 1);
  for (auto& h : *header) h = text::NormalizeWhitespace(h);
  if (*header != kHeader) {
    throw ParseError("registry header must be member_id,surname,first_name,"
                     "gender,party,lp_from,lp_to",
                     1, 1);
  }

  std::map<std::string, MemberRecord> members;
  std::size_t row = 0;
  while (auto fields = csv::ReadRecord(in, line)) {
    if (fields->size() == 1 && text::NormalizeWhitespace((*fields)[0]).empty()) {
      continue;
    }
    ++row;
    if (fields->size() != kHeader.size()) {
      throw ParseError("registry row " + std::to_string(row) + " has " +
                           std::to_string(fields->size()) + " fields, expected " +
                           std::to_string(kHeader.size()),
                       line, 1);
    }
    for (auto& f : *fields) f = text::NormalizeWhitespace(f);
    const auto& f = *fields;
    const std::string where = "row " + std::to_string(row);
    if (f[0].empty()) throw SchemaError("member_id", where);
    if (f[1].empty()) throw SchemaError("surname", where);
    auto gender = ParseGender(f[3]);
    if (!gender) {
      throw SchemaError("gender", where + (f[3].empty() ? ": missing"
                                                        : ": expected male or "
                                                          "female, got '" +
                                                              f[3] + "'"));
    }
    PartyStint stint;
    if (!f[4].empty()) {
      stint.party = aliases.Canonicalize(f[4])
                        .value_or(std::string(corpus::kOtherParty));
    }
    stint.lp_from = ParseLp(f[5], "lp_from", row);
    stint.lp_to = ParseLp(f[6], "lp_to", row);
    if (stint.lp_to < stint.lp_from) {
      throw SchemaError("lp_to", where + ": lp_to before lp_from");
    }

    auto [it, inserted] = members.try_emplace(f[0]);
    MemberRecord& m = it->second;
    if (inserted) {
      m.member_id = f[0];
      m.surname = f[1];
      m.first_name = f[2];
      m.gender = *gender;
    } else if (m.surname != f[1] || m.first_name != f[2] || m.gender != *gender) {
      throw ValidationError("duplicate member_id '" + f[0] + "' (" + where +
                            ") with different name or gender");
    }
    for (int lp = stint.lp_from; lp <= stint.lp_to; ++lp) {
      if (!m.lps_served.insert(lp).second) {
        throw ValidationError("duplicate member_id '" + f[0] + "' (" + where +
                              "): LP " + std::to_string(lp) +
                              " listed twice");
      }
    }
    m.parties.push_back(std::move(stint));
  }

  std::vector<MemberRecord> list;
  list.reserve(members.size());
  for (auto& [id, m] : members) {
    std::sort(m.parties.begin(), m.parties.end(),
              [](const auto& a, const auto& b) { return a.lp_from < b.lp_from; });
    list.push_back(std::move(m));
  }
  return MemberRegistry(std::move(list));
}

MemberRegistry LoadRegistryFile(const std::filesystem::path& path,
                                const corpus::PartyAliases& aliases) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open registry " + path.string());
  return LoadRegistry(in, aliases);
}

}  // namespace cto::registry
