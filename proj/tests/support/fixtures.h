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

#ifndef CTO_TESTS_SUPPORT_FIXTURES_H_
#define CTO_TESTS_SUPPORT_FIXTURES_H_

#include <filesystem>
#include <string>
#include <vector>

#include "cto/pipeline/config.h"

namespace cto::testing {

std::filesystem::path DataDir();
std::filesystem::path TestDataDir();
std::filesystem::path FixtureDir();

std::string ReadFile(const std::filesystem::path& path);
void WriteFile(const std::filesystem::path& path, const std::string& content);

struct LabeledSentence {
  bool rule1 = false;
  bool rule2 = false;
  std::string sentence;
};

// The hand-labeled rule suite (rule1, rule2, sentence per line).
std::vector<LabeledSentence> LoadLabeledSentences();

// Fresh directory under the system temp dir, removed on destruction.
class ScratchDir {
 public:
  ScratchDir();
  ~ScratchDir();
  ScratchDir(const ScratchDir&) = delete;
  ScratchDir& operator=(const ScratchDir&) = delete;

  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const {
    return path_ / name;
  }

 private:
  std::filesystem::path path_;
};

// The bundled fixture config with output_dir and a copy of the annotation
// log moved into `scratch`, so tests never touch the source tree.
pipeline::PipelineConfig FixtureConfig(const ScratchDir& scratch);

}  // namespace cto::testing

#endif  // CTO_TESTS_SUPPORT_FIXTURES_H_
