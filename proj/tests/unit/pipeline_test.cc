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

#include <gtest/gtest.h>

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "cto/annotation/store.h"
#include "cto/corpus/corpus_io.h"
#include "cto/detect/detector.h"
#include "cto/error.h"
#include "cto/pipeline/config.h"
#include "cto/pipeline/stages.h"
#include "httplib.h"
#include "json.hpp"
#include "support/e2e.h"
#include "support/fixtures.h"

namespace cto::pipeline {
namespace {

using testing::FixtureConfig;
using testing::FixtureDir;
using testing::ReadFile;
using testing::ScratchDir;

std::vector<std::string> SplitCsvLine(const std::string& line) {
  // Report files never quote fields that hold ids.
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

std::vector<std::string> SplitIds(const std::string& field) {
  std::vector<std::string> out;
  std::stringstream ss(field);
  std::string id;
  while (std::getline(ss, id, ';')) {
    if (!id.empty()) out.push_back(id);
  }
  return out;
}

TEST(ConfigTest, ParsesKeysRelativeToBase) {
  std::istringstream in(
      "# comment\n"
      "corpus_path = protocols\n"
      "registry_path=/abs/registry.csv\n"
      "  seed =  42  \n"
      "iterations = 1999\n"
      "threads = 3\n"
      "v_source = replicate_mean\n"
      "associations = cause:pco_party, has_cto:topic\n"
      "ner_endpoint = http://127.0.0.1:9000/ner\n");
  const auto c = PipelineConfig::FromStream(in, "/base/dir");
  EXPECT_EQ(c.corpus_path, std::filesystem::path("/base/dir/protocols"));
  EXPECT_EQ(c.registry_path, std::filesystem::path("/abs/registry.csv"));
  EXPECT_EQ(c.seed, 42u);
  EXPECT_EQ(c.iterations, 1999);
  EXPECT_EQ(c.threads, 3u);
  EXPECT_EQ(c.v_source, stats::VSource::kReplicateMean);
  ASSERT_EQ(c.associations.size(), 2u);
  EXPECT_EQ(c.associations[1],
            std::make_pair(stats::Variable::kHasCto, stats::Variable::kTopic));
  EXPECT_EQ(c.ner_endpoint, "http://127.0.0.1:9000/ner");
  EXPECT_FALSE(c.topic_endpoint);
  EXPECT_EQ(c.port, 8080);
}

TEST(ConfigTest, RejectsMalformedInput) {
  for (const char* text :
       {"frobnicate = 1\n", "seed = 1\nseed = 2\n", "seed = abc\n",
        "seed\n", "iterations = 12x\n", "v_source = median\n",
        "associations = cause\n", "associations = cause:shoe_size\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(PipelineConfig::FromStream(in, "/"), ValidationError) << text;
  }
  EXPECT_THROW(PipelineConfig::FromFile("/nonexistent/pipeline.conf"), IoError);
}

TEST(ConfigTest, ValidateChecksValuesAndPaths) {
  ScratchDir scratch;
  const auto base = FixtureConfig(scratch);
  EXPECT_NO_THROW(base.Validate());
  EXPECT_TRUE(std::filesystem::is_directory(base.output_dir));

  auto c = base;
  c.seed.reset();
  EXPECT_THROW(c.Validate(), ValidationError);
  c = base;
  c.iterations = 998;
  EXPECT_THROW(c.Validate(), ValidationError);
  c = base;
  c.threads = 0;
  EXPECT_THROW(c.Validate(), ValidationError);
  c = base;
  c.corpus_path = scratch / "missing";
  EXPECT_THROW(c.Validate(), IoError);
  c = base;
  c.registry_path = scratch / "missing.csv";
  EXPECT_THROW(c.Validate(), IoError);
  c = base;
  c.ner_endpoint = "ftp://example.org/x";
  EXPECT_THROW(c.Validate(), ValidationError);
}

TEST(ConfigTest, DefaultAssociationsAreDistinctPairs) {
  const auto& pairs = DefaultAssociations();
  ASSERT_FALSE(pairs.empty());
  std::set<std::pair<stats::Variable, stats::Variable>> seen;
  for (const auto& p : pairs) {
    EXPECT_NE(p.first, p.second);
    EXPECT_TRUE(seen.insert(p).second);
  }
}

TEST(StagesTest, Names) {
  for (Stage s : {Stage::kIngest, Stage::kDetect, Stage::kExtract,
                  Stage::kDisambiguate, Stage::kClassify, Stage::kServe,
                  Stage::kStats, Stage::kReport}) {
    EXPECT_EQ(ParseStage(StageName(s)), s);
  }
  EXPECT_EQ(ParseStage("analyse"), std::nullopt);
}

TEST(StagesTest, MissingUpstreamIsDependencyError) {
  ScratchDir scratch;
  const auto config = FixtureConfig(scratch);
  try {
    RunStage(Stage::kStats, config);
    FAIL() << "expected DependencyError";
  } catch (const DependencyError& e) {
    EXPECT_EQ(e.required_stage(), "ingest");
    EXPECT_EQ(ExitCodeFor(e), 3);
  }
  RunStage(Stage::kIngest, config);
  try {
    RunStage(Stage::kDisambiguate, config);
    FAIL() << "expected DependencyError";
  } catch (const DependencyError& e) {
    EXPECT_EQ(e.required_stage(), "detect");
  }
  EXPECT_THROW(ServeSession{config}, DependencyError);
}

TEST(StagesTest, ExitCodes) {
  EXPECT_EQ(ExitCodeFor(DependencyError("x", "ingest")), 3);
  EXPECT_EQ(ExitCodeFor(IoError("x")), 4);
  EXPECT_EQ(ExitCodeFor(TransportError("x")), 4);
  EXPECT_EQ(ExitCodeFor(ProtocolError("x")), 4);
  EXPECT_EQ(ExitCodeFor(ValidationError("x")), 2);
  EXPECT_EQ(ExitCodeFor(SchemaError("date")), 2);
  EXPECT_EQ(ExitCodeFor(ParseError("x", 1, 2)), 2);
  EXPECT_EQ(ExitCodeFor(DegenerateTableError("x")), 2);
  EXPECT_EQ(ExitCodeFor(std::runtime_error("x")), 1);
}

TEST(StagesTest, InvalidConfigFailsBeforeWork) {
  ScratchDir scratch;
  auto config = FixtureConfig(scratch);
  config.seed.reset();
  EXPECT_THROW(RunStage(Stage::kIngest, config), ValidationError);
  EXPECT_FALSE(std::filesystem::exists(config.output_dir / artifact::kCorpus));
}

class FixturePipelineTest : public ::testing::Test {
 protected:
  void SetUp() override {
    config_ = FixtureConfig(scratch_);
    testing::RunAllStages(config_);
  }

  ScratchDir scratch_;
  PipelineConfig config_;
};

TEST_F(FixturePipelineTest, MatchesGroundTruth) {
  const auto diffs =
      testing::CompareWithExpected(config_.output_dir, FixtureDir() / "expected.tsv");
  for (const auto& d : diffs) ADD_FAILURE() << d;
}

TEST_F(FixturePipelineTest, RerunIsBitIdentical) {
  const auto first = testing::Snapshot(config_.output_dir);
  EXPECT_GE(first.size(), 14u);
  ScratchDir other;
  auto config = FixtureConfig(other);
  config.threads = 4;
  testing::RunAllStages(config);
  EXPECT_EQ(testing::Snapshot(config.output_dir), first);
  testing::RunAllStages(config_);
  EXPECT_EQ(testing::Snapshot(config_.output_dir), first);
}

TEST_F(FixturePipelineTest, ReportRowsTraceToRecords) {
  std::set<std::string> known;
  {
    std::istringstream in(ReadFile(config_.output_dir / artifact::kEvents));
    for (const auto& e : detect::ReadEvents(in)) known.insert(e.ref().ToString());
  }
  {
    std::istringstream in(ReadFile(config_.output_dir / artifact::kCorpus));
    for (const auto& p : corpus::ReadCorpus(in)) {
      for (std::size_t i = 0; i < p.contributions.size(); ++i) {
        known.insert(std::to_string(p.ref.legislative_period) + "-" +
                     std::to_string(p.ref.session_number) + "-" +
                     std::to_string(i));
      }
    }
  }
  std::size_t checked = 0;
  for (const char* name :
       {artifact::kCauseTotals, artifact::kGender, artifact::kAssociationMatrix,
        artifact::kPerLpSeries, artifact::kTopicSeries}) {
    std::istringstream in(ReadFile(config_.output_dir / name));
    std::string header;
    std::getline(in, header);
    ASSERT_EQ(SplitCsvLine(header).back(), "record_ids") << name;
    std::string line;
    while (std::getline(in, line)) {
      for (const auto& id : SplitIds(SplitCsvLine(line).back())) {
        EXPECT_TRUE(known.count(id)) << name << ": " << id;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 0u);
}

TEST_F(FixturePipelineTest, CauseTotalsCountListedRecords) {
  std::istringstream in(ReadFile(config_.output_dir / artifact::kCauseTotals));
  std::string line;
  std::getline(in, line);
  std::int64_t cause_sum = 0;
  std::set<std::string> cause_ids;
  while (std::getline(in, line)) {
    const auto f = SplitCsvLine(line);
    const auto ids = SplitIds(f.back());
    EXPECT_EQ(std::stoll(f[2]), static_cast<std::int64_t>(ids.size())) << line;
    if (f[0] == "cause") {
      cause_sum += std::stoll(f[2]);
      cause_ids.insert(ids.begin(), ids.end());
    }
  }
  // Five fixture events carry a cause in the bundled log.
  EXPECT_EQ(cause_sum, 5);
  EXPECT_EQ(cause_ids.size(), 5u);
}

TEST_F(FixturePipelineTest, AnnotatingTheQueueCompletesEveryEvent) {
  {
    ServeSession session(config_);
    EXPECT_EQ(session.queue().size(), 2u);
    auto& server = session.server();
    const int port = server.BindAnyPort("127.0.0.1");
    ASSERT_GT(port, 0);
    std::thread serving([&] { server.Serve(); });
    server.WaitUntilReady();

    httplib::Client client("127.0.0.1", port);
    auto res = client.Post("/api/item/19-15-2-0/annotate",
                           R"({"cause":"GI","resolved_member":"11000017",)"
                           R"("status":"confirmed","annotator":"t"})",
                           "application/json");
    ASSERT_TRUE(res);
    EXPECT_EQ(res->status, 200) << res->body;
    const auto [status, body] = server.HandleAnnotate(
        "19-16-2-1", R"({"cause":"NV","resolved_member":"11000012","annotator":"t"})");
    EXPECT_EQ(status, 200) << body;
    EXPECT_EQ(session.queue().size(), 0u);
    res = client.Get("/api/progress");
    ASSERT_TRUE(res);
    const auto progress = nlohmann::json::parse(res->body);
    EXPECT_EQ(progress.at("pending"), 0);
    EXPECT_EQ(progress.at("resolved"), 7);  // every fixture event
    server.Stop();
    serving.join();
  }

  // A new session over the same log finds nothing left to do.
  EXPECT_EQ(ServeSession(config_).queue().size(), 0u);

  RunStage(Stage::kStats, config_);
  RunStage(Stage::kReport, config_);
  const auto store = annotation::LoadAnnotationLog(config_.annotation_log_path);
  std::istringstream in(ReadFile(config_.output_dir / artifact::kEvents));
  std::size_t annotated = 0;
  for (const auto& e : detect::ReadEvents(in)) {
    const auto state = store.StateOf(e.ref());
    if (state.rejected()) continue;
    EXPECT_TRUE(state.cause.has_value()) << e.ref().ToString();
    ++annotated;
  }
  EXPECT_EQ(annotated, 7u);

  std::istringstream totals(ReadFile(config_.output_dir / artifact::kCauseTotals));
  std::string line;
  std::getline(totals, line);
  std::multiset<std::string> listed;
  while (std::getline(totals, line)) {
    const auto f = SplitCsvLine(line);
    if (f[0] != "cause") continue;
    for (const auto& id : SplitIds(f.back())) listed.insert(id);
  }
  EXPECT_EQ(listed.size(), 7u);
  EXPECT_EQ(std::set<std::string>(listed.begin(), listed.end()).size(), 7u);
}

TEST_F(FixturePipelineTest, SummariesAreJson) {
  for (Stage s : {Stage::kDetect, Stage::kStats}) {
    const auto result = RunStage(s, config_);
    const auto j = nlohmann::json::parse(result.summary);
    EXPECT_EQ(j.at("stage"), std::string(StageName(s)));
  }
  const auto detect = nlohmann::json::parse(RunStage(Stage::kDetect, config_).summary);
  EXPECT_EQ(detect.at("events"), 7);
  EXPECT_EQ(nlohmann::json::parse(ServeSession(config_).Summary()).at("pending"), 2);
}

}  // namespace
}  // namespace cto::pipeline
