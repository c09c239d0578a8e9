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

#ifndef CTO_REGISTRY_REGISTRY_H_
#define CTO_REGISTRY_REGISTRY_H_

#include <cstddef>
#include <filesystem>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/party.h"

namespace cto::registry {

enum class Gender { kMale, kFemale };

std::string_view GenderName(Gender g);
std::optional<Gender> ParseGender(std::string_view name);

struct PartyStint {
  std::optional<std::string> party;  // canonical code; nullopt = no party
  int lp_from = 0;
  int lp_to = 0;

  bool operator==(const PartyStint&) const = default;
};

struct MemberRecord {
  std::string member_id;
  std::string surname;
  std::string first_name;
  Gender gender = Gender::kMale;
  std::vector<PartyStint> parties;  // sorted by lp_from, non-overlapping
  std::set<int> lps_served;

  bool served_in(int lp) const { return lps_served.count(lp) > 0; }
  std::optional<std::string> PartyIn(int lp) const;
  std::string DisplayName() const;

  bool operator==(const MemberRecord&) const = default;
};

// Lookup key for surnames: case-folded, diacritics stripped, nobiliary
// particles (von, zu, vom, zum, van, de and a following der/den) dropped.
std::string NormalizeNameKey(std::string_view name);

// Immutable after construction; safe for concurrent lookups.
class MemberRegistry {
 public:
  MemberRegistry() = default;
  explicit MemberRegistry(std::vector<MemberRecord> members);

  std::size_t size() const { return members_.size(); }
  const std::vector<MemberRecord>& members() const { return members_; }

  const MemberRecord* Find(std::string_view member_id) const;

  // Members with the given surname key; restricted to `lp` when given.
  std::vector<const MemberRecord*> Lookup(std::string_view surname_key,
                                          std::optional<int> lp = {}) const;

 private:
  std::vector<MemberRecord> members_;  // sorted by member_id
  std::map<std::string, std::vector<std::size_t>> by_surname_;
};

// Normalized registry CSV with header
//   member_id,surname,first_name,gender,party,lp_from,lp_to
// and one row per party/LP stint. Rows sharing a member_id must agree on
// name and gender and must not overlap in LPs; otherwise the id counts as
// duplicated. Errors name the 1-based data row.
MemberRegistry LoadRegistry(std::istream& in,
                            const corpus::PartyAliases& aliases = {});
MemberRegistry LoadRegistryFile(const std::filesystem::path& path,
                                const corpus::PartyAliases& aliases = {});

}  // namespace cto::registry

#endif  // CTO_REGISTRY_REGISTRY_H_
