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

#ifndef CTO_CORPUS_CORPUS_IO_H_
#define CTO_CORPUS_CORPUS_IO_H_

#include <istream>
#include <ostream>
#include <vector>

#include "cto/corpus/types.h"

namespace cto::corpus {

// Normalized corpus: one JSON object per SpeechContribution, carrying its
// protocol coordinates. Field names are documented in docs/formats.md.
void WriteCorpus(std::ostream& out, const std::vector<Protocol>& protocols);

// Regroups records into protocols in file order. Records of one protocol
// must be contiguous with consecutive indices.
std::vector<Protocol> ReadCorpus(std::istream& in);

}  // namespace cto::corpus

#endif  // CTO_CORPUS_CORPUS_IO_H_
