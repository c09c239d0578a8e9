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

#ifndef CTO_CORPUS_PROTOCOL_PARSER_H_
#define CTO_CORPUS_PROTOCOL_PARSER_H_

#include <filesystem>
#include <string_view>
#include <vector>

#include "cto/corpus/party.h"
#include "cto/corpus/sentence_splitter.h"
#include "cto/corpus/types.h"

namespace cto::corpus {

// Protocol XML layout:
//
//   <protocol>
//     <header legislative_period="19" session="12" date="2018-02-01"/>
//     <body>
//       <speech speaker="..." party="SPD" role="president" agenda_item="3">
//         <p>...</p> <interjection>...</interjection> ...
//       </speech>
//     </body>
//   </protocol>
//
// All character data inside <speech> becomes the contribution text.
class ProtocolParser {
 public:
  ProtocolParser() = default;
  ProtocolParser(PartyAliases aliases, SentenceSplitter splitter)
      : aliases_(std::move(aliases)), splitter_(std::move(splitter)) {}

  // Throws ParseError for malformed XML and SchemaError naming the missing
  // field.
  Protocol Parse(std::string_view xml) const;
  Protocol ParseFile(const std::filesystem::path& path) const;

 private:
  PartyAliases aliases_;
  SentenceSplitter splitter_;
};

inline Protocol ParseProtocol(std::string_view xml) {
  return ProtocolParser().Parse(xml);
}

// Every *.xml file under `path` (or the file itself), sorted by
// (LP, session). Parsing runs on up to `threads` workers; the result order
// does not depend on the thread count.
std::vector<Protocol> ParseCorpus(const std::filesystem::path& path,
                                  const ProtocolParser& parser,
                                  unsigned threads = 1);

}  // namespace cto::corpus

#endif  // CTO_CORPUS_PROTOCOL_PARSER_H_
