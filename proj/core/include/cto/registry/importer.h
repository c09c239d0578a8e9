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

#ifndef CTO_REGISTRY_IMPORTER_H_
#define CTO_REGISTRY_IMPORTER_H_

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cto/corpus/party.h"

namespace cto::registry {

struct RegistryRow {
  std::string member_id;
  std::string surname;
  std::string first_name;
  std::string gender;  // "male" / "female"
  std::string party;   // canonical code or empty
  int lp_from = 0;
  int lp_to = 0;

  bool operator==(const RegistryRow&) const = default;
};

struct ImportResult {
  std::vector<RegistryRow> rows;
  // Members skipped because gender or periods were missing.
  std::vector<std::string> skipped_ids;
};

// Converts the Bundestag open-data member master data (MDB_STAMMDATEN.XML:
// DOCUMENT/MDB with ID, NAMEN/NAME, BIOGRAFISCHE_ANGABEN and
// WAHLPERIODEN/WAHLPERIODE) into normalized registry rows. The parliamentary
// group of each period decides the party; PARTEI_KURZ is the fallback.
// Consecutive periods with the same party collapse into one row.
ImportResult ImportOfficialRegistry(std::string_view xml,
                                    const corpus::PartyAliases& aliases = {});

void WriteRegistryCsv(std::ostream& out, const std::vector<RegistryRow>& rows);

}  // namespace cto::registry

#endif  // CTO_REGISTRY_IMPORTER_H_
