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

#include "support/fixtures.h"

#include <atomic>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>

#include <unistd.h>

namespace cto::testing {

namespace fs = std::filesystem;

fs::path DataDir() { return CTO_DATA_DIR; }
fs::path TestDataDir() { return CTO_TEST_DATA_DIR; }
fs::path FixtureDir() { return DataDir() / "fixture"; }

std::vector<LabeledSentence> LoadLabeledSentences() {
  std::istringstream in(ReadFile(TestDataDir() / "rule_sentences.tsv"));
  std::vector<LabeledSentence> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto t1 = line.find('\t');
    const auto t2 = line.find('\t', t1 + 1);
    if (t1 == std::string::npos || t2 == std::string::npos) {
      throw std::runtime_error("bad labeled sentence: " + line);
    }
    out.push_back({line.substr(0, t1) == "1", line.substr(t1 + 1, t2 - t1 - 1) == "1",
                   line.substr(t2 + 1)});
  }
  return out;
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteFile(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
}

ScratchDir::ScratchDir() {
  static std::atomic<int> counter{0};
  std::random_device rd;
  path_ = fs::temp_directory_path() /
          ("cto-test-" + std::to_string(::getpid()) + "-" +
           std::to_string(counter++) + "-" + std::to_string(rd()));
  fs::create_directories(path_);
}

ScratchDir::~ScratchDir() {
  std::error_code ec;
  fs::remove_all(path_, ec);
}

pipeline::PipelineConfig FixtureConfig(const ScratchDir& scratch) {
  auto config = pipeline::PipelineConfig::FromFile(FixtureDir() / "pipeline.conf");
  config.output_dir = scratch / "out";
  const fs::path log = scratch / "annotations.jsonl";
  fs::copy_file(FixtureDir() / "annotations.jsonl", log,
                fs::copy_options::overwrite_existing);
  config.annotation_log_path = log;
  return config;
}

}  // namespace cto::testing
