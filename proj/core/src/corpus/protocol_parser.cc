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

#include "cto/corpus/protocol_parser.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <fstream>
#include <sstream>
#include <thread>

#include "cto/error.h"
#include "cto/text/utf8.h"
#include "xml/dom.h"

namespace cto::corpus {

namespace {

int RequiredPositiveInt(const xml::Node& node, const char* attr) {
  auto value = node.Attribute(attr);
  if (!value) throw SchemaError(attr);
  int out = 0;
  auto [ptr, ec] =
      std::from_chars(value->data(), value->data() + value->size(), out);
  if (ec != std::errc{} || ptr != value->data() + value->size() || out <= 0) {
    throw SchemaError(attr, "expected a positive integer, got '" + *value +
                                "'");
  }
  return out;
}

std::size_t OptionalIndex(const xml::Node& node, const char* attr) {
  auto value = node.Attribute(attr);
  if (!value || value->empty()) return 0;
  std::size_t out = 0;
  auto [ptr, ec] =
      std::from_chars(value->data(), value->data() + value->size(), out);
  if (ec != std::errc{} || ptr != value->data() + value->size()) {
    throw SchemaError(attr, "expected a non-negative integer, got '" + *value +
                                "' (line " + std::to_string(node.line) + ")");
  }
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Protocol ProtocolParser::Parse(std::string_view xml_text) const {
  const auto root = xml::Parse(xml_text);
  if (root->name != "protocol") {
    throw SchemaError("protocol", "root element is <" + root->name + ">");
  }
  const xml::Node* header = root->Child("header");
  if (header == nullptr) throw SchemaError("header");

  Protocol protocol;
  protocol.ref.legislative_period =
      RequiredPositiveInt(*header, "legislative_period");
  protocol.ref.session_number = RequiredPositiveInt(*header, "session");
  auto date_text = header->Attribute("date");
  if (!date_text) throw SchemaError("date");
  auto date = ParseDate(*date_text);
  if (!date) throw SchemaError("date", "expected YYYY-MM-DD");
  protocol.ref.date = *date;

  const xml::Node* body = root->Child("body");
  if (body == nullptr) return protocol;
  for (const xml::Node* speech : body->Children("speech")) {
    SpeechContribution c;
    c.index = protocol.contributions.size();
    auto speaker = speech->Attribute("speaker");
    if (!speaker || text::NormalizeWhitespace(*speaker).empty()) {
      throw SchemaError("speaker",
                        "speech at line " + std::to_string(speech->line));
    }
    c.speaker_name = text::NormalizeWhitespace(*speaker);
    if (auto party = speech->Attribute("party")) {
      c.speaker_party = aliases_.Canonicalize(*party);
    }
    c.role = ParseRole(speech->Attribute("role").value_or("member"));
    c.agenda_position = OptionalIndex(*speech, "agenda_item");
    c.raw_text = text::NormalizeWhitespace(speech->InnerText());
    c.sentences = splitter_.Split(c.raw_text);
    protocol.contributions.push_back(std::move(c));
  }
  return protocol;
}

Protocol ProtocolParser::ParseFile(const std::filesystem::path& path) const {
  const std::string content = ReadFile(path);
  try {
    return Parse(content);
  } catch (const ParseError& e) {
    throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
  } catch (const SchemaError& e) {
    throw SchemaError(e.field(), path.string() + ": " + e.what());
  }
}

std::vector<Protocol> ParseCorpus(const std::filesystem::path& path,
                                  const ProtocolParser& parser,
                                  unsigned threads) {
  std::vector<std::filesystem::path> files;
  if (std::filesystem::is_directory(path)) {
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".xml") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else if (std::filesystem::is_regular_file(path)) {
    files.push_back(path);
  } else {
    throw IoError("corpus path does not exist: " + path.string());
  }

  std::vector<Protocol> protocols(files.size());
  std::vector<std::exception_ptr> errors(files.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < files.size(); i = next++) {
      try {
        protocols[i] = parser.ParseFile(files[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, files.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  std::stable_sort(protocols.begin(), protocols.end(),
                   [](const Protocol& a, const Protocol& b) {
                     return a.ref < b.ref;
                   });
  for (std::size_t i = 1; i < protocols.size(); ++i) {
    if (protocols[i].ref.legislative_period ==
            protocols[i - 1].ref.legislative_period &&
        protocols[i].ref.session_number ==
            protocols[i - 1].ref.session_number) {
      throw ValidationError(
          "duplicate protocol for LP " +
          std::to_string(protocols[i].ref.legislative_period) + " session " +
          std::to_string(protocols[i].ref.session_number));
    }
  }
  return protocols;
}

}  // namespace cto::corpus
