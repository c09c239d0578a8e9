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

#include "cto/annotation/store.h"

#include <fstream>

#include "common/json_util.h"
#include "cto/error.h"

namespace cto::annotation {

using jsonutil::Json;

namespace {

constexpr const char* kFormatName = "cto-annotations";

Json ToJson(const AnnotationRecord& r) {
  Json j;
  j["event"] = r.event.ToString();
  j["cause"] = r.cause ? Json(CauseName(*r.cause)) : Json(nullptr);
  j["resolved_member"] =
      r.resolved_member ? Json(*r.resolved_member) : Json(nullptr);
  j["status"] = r.status ? Json(OverrideName(*r.status)) : Json(nullptr);
  j["annotator"] = r.annotator;
  j["timestamp"] = r.timestamp;
  j["note"] = r.note ? Json(*r.note) : Json(nullptr);
  return j;
}

AnnotationRecord FromJson(const Json& j) {
  if (!j.is_object()) throw ValidationError("record must be a JSON object");
  AnnotationRecord r;
  auto str = [&](const char* key) -> std::optional<std::string> {
    auto it = j.find(key);
    if (it == j.end() || it->is_null()) return std::nullopt;
    if (!it->is_string()) {
      throw ValidationError(std::string(key) + ": must be a string");
    }
    return it->get<std::string>();
  };
  auto event = str("event");
  if (!event) throw ValidationError("event: missing");
  auto ref = detect::EventRef::Parse(*event);
  if (!ref) throw ValidationError("event: malformed id '" + *event + "'");
  r.event = *ref;
  if (auto cause = str("cause")) {
    r.cause = ParseCause(*cause);
    if (!r.cause) throw ValidationError("cause: unknown label '" + *cause + "'");
  }
  r.resolved_member = str("resolved_member");
  if (auto status = str("status")) {
    r.status = ParseOverride(*status);
    if (!r.status) throw ValidationError("status: unknown value '" + *status + "'");
  }
  r.annotator = str("annotator").value_or("");
  r.timestamp = str("timestamp").value_or("");
  r.note = str("note");
  return r;
}

}  // namespace

void AnnotationStore::ApplyTo(EventState& state, const AnnotationRecord& r) {
  if (r.status) {
    state.status = r.status;
    if (*r.status == StatusOverride::kRejected) state.cause.reset();
  }
  if (r.cause) state.cause = r.cause;
  if (r.resolved_member) state.resolved_member = r.resolved_member;
}

void AnnotationStore::Append(AnnotationRecord record) {
  Check(record);
  ApplyTo(state_[record.event], record);
  log_.push_back(std::move(record));
}

void AnnotationStore::Check(const AnnotationRecord& record) const {
  record.Validate();
  const EventState current = StateOf(record.event);
  if (current.rejected() && record.cause &&
      record.status != StatusOverride::kConfirmed) {
    throw ValidationError(
        "rejected-with-cause: event " + record.event.ToString() +
        " is rejected; confirm it in the same record to add a cause");
  }
  if (record.resolved_member && member_check_ &&
      !member_check_(*record.resolved_member)) {
    throw ValidationError("resolved_member: unknown member '" +
                          *record.resolved_member + "'");
  }
}

EventState AnnotationStore::StateOf(const detect::EventRef& ref) const {
  auto it = state_.find(ref);
  return it == state_.end() ? EventState{} : it->second;
}

std::map<detect::EventRef, EventState> AnnotationStore::Fold(
    const std::vector<AnnotationRecord>& log) {
  std::map<detect::EventRef, EventState> state;
  for (const auto& r : log) ApplyTo(state[r.event], r);
  return state;
}

std::string AnnotationStore::HeaderLine() {
  Json h;
  h["format"] = kFormatName;
  h["version"] = kLogFormatVersion;
  return jsonutil::Dump(h);
}

std::string AnnotationStore::RecordToJson(const AnnotationRecord& record) {
  return jsonutil::Dump(ToJson(record));
}

void AnnotationStore::Export(std::ostream& out) const {
  out << HeaderLine() << '\n';
  for (const auto& r : log_) out << RecordToJson(r) << '\n';
}

AnnotationStore AnnotationStore::Import(std::istream& in) {
  const auto lines = jsonutil::ReadLines(in);
  if (lines.empty()) throw ValidationError("annotation log: missing header");
  const Json& header = lines.front();
  if (!header.is_object() || header.value("format", "") != kFormatName) {
    throw ValidationError("annotation log: bad header");
  }
  if (!header.contains("version") || !header["version"].is_number_integer() ||
      header["version"].get<int>() != kLogFormatVersion) {
    throw ValidationError("annotation log: unsupported version (expected " +
                          std::to_string(kLogFormatVersion) + ")");
  }
  AnnotationStore store;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    try {
      store.Append(FromJson(lines[i]));
    } catch (const ValidationError& e) {
      throw ValidationError("annotation record " + std::to_string(i - 1) +
                            ": " + e.what());
    }
  }
  return store;
}

AnnotationLogWriter::AnnotationLogWriter(std::filesystem::path path)
    : path_(std::move(path)) {
  if (!std::filesystem::exists(path_)) {
    std::ofstream out(path_);
    if (!out) throw IoError("cannot create annotation log " + path_.string());
    out << AnnotationStore::HeaderLine() << '\n';
  }
}

void AnnotationLogWriter::Write(const AnnotationRecord& record) {
  std::ofstream out(path_, std::ios::app);
  if (!out) throw IoError("cannot append to " + path_.string());
  out << AnnotationStore::RecordToJson(record) << '\n';
  out.flush();
  if (!out) throw IoError("write failed on " + path_.string());
}

AnnotationStore LoadAnnotationLog(const std::filesystem::path& path) {
  if (!std::filesystem::exists(path)) return AnnotationStore{};
  std::ifstream in(path);
  if (!in) throw IoError("cannot open annotation log " + path.string());
  return AnnotationStore::Import(in);
}

AnnotationRecord AnnotationStore::ParseRecord(
    std::string_view json_text, std::optional<detect::EventRef> default_event) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error&) {
    throw ValidationError("body: not valid JSON");
  }
  if (!j.is_object()) throw ValidationError("body: must be a JSON object");
  if (default_event && (!j.contains("event") || j["event"].is_null())) {
    j["event"] = default_event->ToString();
  }
  return FromJson(j);
}

}  // namespace cto::annotation
