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

// ctoctl: runs the call-to-order pipeline stage by stage.
//
//   ctoctl <stage> --config pipeline.conf [--seed N] [--iterations N]
//                  [--endpoint URL] [--threads N]
//   ctoctl all --config pipeline.conf
//   ctoctl serve --config pipeline.conf [--host H] [--port P] [--ui-dir DIR]
//   ctoctl import-registry --input MDB_STAMMDATEN.XML --output registry.csv

#include <csignal>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "cto/corpus/party.h"
#include "cto/error.h"
#include "cto/pipeline/config.h"
#include "cto/pipeline/stages.h"
#include "cto/registry/importer.h"

namespace {

using cto::pipeline::PipelineConfig;
using cto::pipeline::Stage;

struct Overrides {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<int> iterations;
  std::optional<std::string> endpoint;
  std::optional<unsigned> threads;
  std::optional<std::string> host;
  std::optional<int> port;
  std::string ui_dir;
};

PipelineConfig LoadConfig(const Overrides& o, Stage stage) {
  PipelineConfig c = PipelineConfig::FromFile(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.iterations) c.iterations = *o.iterations;
  if (o.threads) c.threads = *o.threads;
  if (o.host) c.host = *o.host;
  if (o.port) c.port = *o.port;
  if (o.endpoint) {
    if (stage == Stage::kExtract) {
      c.ner_endpoint = *o.endpoint;
    } else if (stage == Stage::kClassify) {
      c.topic_endpoint = *o.endpoint;
    } else {
      throw cto::ValidationError(
          "--endpoint applies to 'extract' and 'classify' only");
    }
  }
  return c;
}

void Print(const cto::pipeline::StageResult& r) {
  for (const auto& w : r.warnings) std::cerr << "warning: " << w << '\n';
  std::cout << r.summary << std::endl;
}

cto::annotation::ApiServer* g_server = nullptr;

void StopServer(int) {
  if (g_server) g_server->Stop();
}

int Serve(const Overrides& o) {
  const PipelineConfig c = LoadConfig(o, Stage::kServe);
  cto::pipeline::ServeSession session(c);
  if (!o.ui_dir.empty()) session.server().MountStatic(o.ui_dir);
  std::cout << session.Summary() << std::endl;
  std::cerr << "listening on http://" << c.host << ':' << c.port << '\n';
  g_server = &session.server();
  std::signal(SIGINT, StopServer);
  std::signal(SIGTERM, StopServer);
  const bool ok = session.server().Listen(c.host, c.port);
  g_server = nullptr;
  if (!ok) {
    throw cto::IoError("cannot bind " + c.host + ":" + std::to_string(c.port));
  }
  return 0;
}

int ImportRegistry(const std::string& input, const std::string& output,
                   const std::string& aliases_path) {
  std::ifstream in(input, std::ios::binary);
  if (!in) throw cto::IoError("cannot open " + input);
  std::stringstream buffer;
  buffer << in.rdbuf();
  cto::corpus::PartyAliases aliases;
  if (!aliases_path.empty()) {
    std::ifstream a(aliases_path);
    if (!a) throw cto::IoError("cannot open " + aliases_path);
    aliases = cto::corpus::PartyAliases::FromStream(a);
  }
  const auto result = cto::registry::ImportOfficialRegistry(buffer.str(), aliases);
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw cto::IoError("cannot write " + output);
  cto::registry::WriteRegistryCsv(out, result.rows);
  if (!out.flush()) throw cto::IoError("write failed for " + output);
  for (const auto& id : result.skipped_ids) {
    std::cerr << "warning: skipped member " << id
              << " (missing gender or periods)\n";
  }
  std::cout << "{\"stage\":\"import-registry\",\"rows\":" << result.rows.size()
            << ",\"skipped\":" << result.skipped_ids.size() << "}" << std::endl;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Call-to-order detection and analysis pipeline"};
  app.require_subcommand(1);
  Overrides o;

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "pipeline config file")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--seed", o.seed, "Monte-Carlo seed");
    sub->add_option("--iterations", o.iterations, "Monte-Carlo replicates");
    sub->add_option("--threads", o.threads, "worker threads");
  };

  std::vector<std::pair<CLI::App*, Stage>> stage_commands;
  const std::vector<std::pair<Stage, const char*>> stages = {
      {Stage::kIngest, "parse protocol XML into corpus.jsonl"},
      {Stage::kDetect, "find calls to order"},
      {Stage::kExtract, "extract person mentions"},
      {Stage::kDisambiguate, "resolve mentions against the registry; build the queue"},
      {Stage::kClassify, "assign topics to contributions"},
      {Stage::kStats, "association tests"},
      {Stage::kReport, "render report tables and series"},
  };
  for (const auto& [stage, help] : stages) {
    auto* sub = app.add_subcommand(std::string(cto::pipeline::StageName(stage)), help);
    add_common(sub);
    if (stage == Stage::kExtract || stage == Stage::kClassify) {
      sub->add_option("--endpoint", o.endpoint, "external service URL");
    }
    stage_commands.emplace_back(sub, stage);
  }
  auto* all = app.add_subcommand("all", "run ingest through report");
  add_common(all);

  auto* serve = app.add_subcommand("serve", "start the annotation HTTP API");
  add_common(serve);
  serve->add_option("--host", o.host, "bind address");
  serve->add_option("--port", o.port, "port");
  serve->add_option("--ui-dir", o.ui_dir, "static files for the console")
      ->check(CLI::ExistingDirectory);

  std::string import_in, import_out, import_aliases;
  auto* import = app.add_subcommand(
      "import-registry", "convert the official member XML into registry CSV");
  import->add_option("--input", import_in, "MDB_STAMMDATEN.XML")
      ->required()
      ->check(CLI::ExistingFile);
  import->add_option("--output", import_out, "registry CSV to write")->required();
  import->add_option("--party-aliases", import_aliases, "extra party aliases");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*import) return ImportRegistry(import_in, import_out, import_aliases);
    if (*serve) return Serve(o);
    if (*all) {
      for (Stage s : {Stage::kIngest, Stage::kDetect, Stage::kExtract,
                      Stage::kDisambiguate, Stage::kClassify, Stage::kStats,
                      Stage::kReport}) {
        Print(cto::pipeline::RunStage(s, LoadConfig(o, s)));
      }
      return 0;
    }
    for (const auto& [sub, stage] : stage_commands) {
      if (*sub) {
        Print(cto::pipeline::RunStage(stage, LoadConfig(o, stage)));
        return 0;
      }
    }
  } catch (const cto::DependencyError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cto::pipeline::ExitCodeFor(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cto::pipeline::ExitCodeFor(e);
  }
  return 0;
}
