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

#include "cto/registry/importer.h"

#include <algorithm>
#include <charconv>
#include <map>

#include "common/csv.h"
#include "cto/text/utf8.h"
#include "xml/dom.h"

namespace cto::registry {

namespace {

std::string Field(const xml::Node* parent, std::string_view name) {
  if (parent == nullptr) return {};
  const xml::Node* child = parent->Child(name);
  return child == nullptr ? std::string() : child->OwnText();
}

// Parliamentary group names as printed in the master data.
std::optional<std::string> PartyFromGroup(std::string_view group) {
  const std::string g = text::FoldCase(group);
  auto has = [&](std::string_view needle) {
    return g.find(needle) != std::string::npos;
  };
  if (has("christlich")) return std::string(corpus::kCduCsu);
  if (has("sozialdemokratisch")) return std::string(corpus::kSpd);
  if (has("freien demokratisch") || has("freie demokratisch")) {
    return std::string(corpus::kFdp);
  }
  if (has("grünen") || has("grüne")) return std::string(corpus::kGruene);
  if (has("linke") || has("pds")) return std::string(corpus::kLinke);
  if (has("alternative für deutschland")) return std::string(corpus::kAfd);
  if (has("fraktionslos") || has("gruppe") || has("fraktion")) {
    return std::string(corpus::kOtherParty);
  }
  return std::nullopt;
}

}  // namespace

ImportResult ImportOfficialRegistry(std::string_view xml_text,
                                    const corpus::PartyAliases& aliases) {
  const auto root = xml::Parse(xml_text);
  ImportResult result;
  for (const xml::Node* mdb : root->Children("MDB")) {
    const std::string id = Field(mdb, "ID");
    const xml::Node* names = mdb->Child("NAMEN");
    const auto name_list =
        names ? names->Children("NAME") : std::vector<const xml::Node*>{};
    const xml::Node* bio = mdb->Child("BIOGRAFISCHE_ANGABEN");
    const std::string gender_text = text::FoldCase(Field(bio, "GESCHLECHT"));
    std::string gender;
    if (gender_text == "männlich") gender = "male";
    if (gender_text == "weiblich") gender = "female";
    if (id.empty() || name_list.empty() || gender.empty()) {
      result.skipped_ids.push_back(id);
      continue;
    }
    const xml::Node* name = name_list.back();
    std::string surname = Field(name, "NACHNAME");
    const std::string prefix = Field(name, "PRAEFIX");
    if (!prefix.empty()) surname = prefix + " " + surname;
    const std::string first_name = Field(name, "VORNAME");
    const auto fallback_party = aliases.Canonicalize(Field(bio, "PARTEI_KURZ"));

    std::map<int, std::string> party_by_lp;
    if (const xml::Node* periods = mdb->Child("WAHLPERIODEN")) {
      for (const xml::Node* wp : periods->Children("WAHLPERIODE")) {
        const std::string wp_text = Field(wp, "WP");
        int lp = 0;
        auto [ptr, ec] = std::from_chars(
            wp_text.data(), wp_text.data() + wp_text.size(), lp);
        if (ec != std::errc{} || lp <= 0) continue;
        std::optional<std::string> party;
        if (const xml::Node* inst = wp->Child("INSTITUTIONEN")) {
          for (const xml::Node* i : inst->Children("INSTITUTION")) {
            if (Field(i, "INSART_LANG") != "Fraktion/Gruppe") continue;
            party = PartyFromGroup(Field(i, "INS_LANG"));
            if (party) break;
          }
        }
        if (!party) party = fallback_party;
        party_by_lp[lp] = party.value_or("");
      }
    }
    if (party_by_lp.empty()) {
      result.skipped_ids.push_back(id);
      continue;
    }
    RegistryRow current;
    bool open = false;
    for (const auto& [lp, party] : party_by_lp) {
      if (open && party == current.party && lp == current.lp_to + 1) {
        current.lp_to = lp;
        continue;
      }
      if (open) result.rows.push_back(current);
      current = RegistryRow{id, surname, first_name, gender, party, lp, lp};
      open = true;
    }
    if (open) result.rows.push_back(current);
  }
  std::stable_sort(result.rows.begin(), result.rows.end(),
                   [](const RegistryRow& a, const RegistryRow& b) {
                     return std::tie(a.member_id, a.lp_from) <
                            std::tie(b.member_id, b.lp_from);
                   });
  return result;
}

void WriteRegistryCsv(std::ostream& out, const std::vector<RegistryRow>& rows) {
  out << "member_id,surname,first_name,gender,party,lp_from,lp_to\n";
  for (const auto& r : rows) {
    out << csv::Escape(r.member_id) << ',' << csv::Escape(r.surname) << ','
        << csv::Escape(r.first_name) << ',' << r.gender << ','
        << csv::Escape(r.party) << ',' << r.lp_from << ',' << r.lp_to << '\n';
  }
}

}  // namespace cto::registry
