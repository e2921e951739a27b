// corpus/manifest.cc

// Copyright 2026  The M2DS2 Toolkit Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#include "m2ds2/corpus/manifest.h"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace corpus {

using nlohmann::json;

Manifest::Manifest(std::vector<Utterance> entries, Split split)
    : split_(split) {
  entries_.reserve(entries.size());
  for (auto &u : entries) Add(std::move(u));
}

void Manifest::Add(Utterance u) {
  if (u.HasSegment() && u.duration == 0.0)
    u.duration = *u.end_time - *u.start_time;
  u.Check();
  if (!ids_.insert(u.id).second)
    throw DataError("duplicate utterance id " + u.id);
  total_duration_ += u.duration;
  entries_.push_back(std::move(u));
}

namespace {

template <typename T>
json OptionalToJson(const std::optional<T> &v) {
  return v ? json(*v) : json(nullptr);
}

json UtteranceToJson(const Utterance &u) {
  json j;
  j["id"] = u.id;
  j["audio_path"] = u.audio_path;
  j["recording_id"] = u.recording_id.empty() ? json(nullptr) : json(u.recording_id);
  j["start"] = OptionalToJson(u.start_time);
  j["end"] = OptionalToJson(u.end_time);
  j["duration"] = u.duration;
  j["text"] = OptionalToJson(u.transcript);
  j["speaker"] = OptionalToJson(u.speaker);
  j["gender"] = u.gender ? json(std::string(GenderName(*u.gender))) : json(nullptr);
  j["domain"] = std::string(DomainName(u.domain));
  return j;
}

Utterance UtteranceFromJson(const json &j) {
  Utterance u;
  u.id = j.at("id").get<std::string>();
  if (j.contains("audio_path") && !j["audio_path"].is_null())
    u.audio_path = j["audio_path"].get<std::string>();
  if (j.contains("recording_id") && !j["recording_id"].is_null())
    u.recording_id = j["recording_id"].get<std::string>();
  if (j.contains("start") && !j["start"].is_null())
    u.start_time = j["start"].get<double>();
  if (j.contains("end") && !j["end"].is_null())
    u.end_time = j["end"].get<double>();
  if (j.contains("duration") && !j["duration"].is_null())
    u.duration = j["duration"].get<double>();
  else if (u.HasSegment())
    u.duration = *u.end_time - *u.start_time;
  if (j.contains("text") && !j["text"].is_null())
    u.transcript = j["text"].get<std::string>();
  if (j.contains("speaker") && !j["speaker"].is_null())
    u.speaker = j["speaker"].get<std::string>();
  if (j.contains("gender") && !j["gender"].is_null())
    u.gender = ParseGender(j["gender"].get<std::string>());
  u.domain = ParseDomain(j.at("domain").get<std::string>());
  return u;
}

}  // namespace

Manifest ReadManifest(const std::string &path, Split split) {
  std::ifstream is(path);
  if (!is) throw DataError("cannot open manifest " + path);
  Manifest m(split);
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      m.Add(UtteranceFromJson(json::parse(line)));
    } catch (const json::exception &e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return m;
}

std::string ManifestToString(const Manifest &m) {
  std::ostringstream os;
  for (const auto &u : m.entries()) os << UtteranceToJson(u).dump() << '\n';
  return os.str();
}

void WriteManifest(const Manifest &m, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open " + path + " for writing");
  os << ManifestToString(m);
  if (!os) throw DataError("write failed for " + path);
}

}  // namespace corpus
}  // namespace m2ds2
