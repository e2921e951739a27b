// corpus/dataset-dir.cc

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

#include "m2ds2/corpus/dataset-dir.h"

#include <algorithm>
#include <filesystem>
#include <map>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace corpus {

namespace fs = std::filesystem;

void EmitDatasetDir(const Manifest &m, const std::string &dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create directory " + dir + ": " + ec.message());

  std::map<std::string, std::string> text, segments, utt2spk, wav;
  std::map<std::string, Gender> spk2gender;
  for (const auto &u : m.entries()) {
    if (u.transcript) text[u.id] = u.id + " " + *u.transcript;
    if (u.HasSegment()) {
      if (!u.speaker)
        throw DataError("segmented utterance " + u.id + " has no speaker");
      segments[u.id] = u.id + " " + u.RecordingId() + " " +
                       FormatFixed(*u.start_time, 2) + " " +
                       FormatFixed(*u.end_time, 2);
    }
    const std::string spk = u.speaker ? *u.speaker : u.id;
    utt2spk[u.id] = u.id + " " + spk;
    if (u.speaker && u.gender) {
      auto it = spk2gender.find(spk);
      if (it != spk2gender.end() && it->second != *u.gender)
        throw DataError("speaker " + spk + " has conflicting genders");
      spk2gender[spk] = *u.gender;
    }
    const std::string rec = u.HasSegment() ? u.RecordingId() : u.id;
    auto it = wav.find(rec);
    std::string line = rec + " " + u.audio_path;
    if (it != wav.end() && it->second != line)
      throw DataError("recording " + rec + " maps to two audio paths");
    wav[rec] = line;
  }

  auto values = [](const std::map<std::string, std::string> &m) {
    std::vector<std::string> out;
    out.reserve(m.size());
    for (const auto &kv : m) out.push_back(kv.second);
    return out;
  };
  std::vector<std::string> gender_lines;
  for (const auto &kv : spk2gender)
    gender_lines.push_back(kv.first + " " + std::string(GenderName(kv.second)));

  const fs::path base(dir);
  WriteLines((base / "text").string(), values(text));
  WriteLines((base / "segments").string(), values(segments));
  WriteLines((base / "utt2spk").string(), values(utt2spk));
  WriteLines((base / "spk2gender").string(), gender_lines);
  WriteLines((base / "wav.scp").string(), values(wav));
}

namespace {

// First field -> rest of line.
std::map<std::string, std::string> ReadTable(const fs::path &p) {
  std::map<std::string, std::string> table;
  if (!fs::exists(p)) return table;
  for (const auto &line : ReadLines(p.string())) {
    auto trimmed = TrimWhitespace(line);
    if (trimmed.empty()) continue;
    size_t sp = trimmed.find(' ');
    std::string key(trimmed.substr(0, sp));
    std::string rest = sp == std::string_view::npos
                           ? std::string()
                           : std::string(TrimWhitespace(trimmed.substr(sp + 1)));
    table[key] = rest;
  }
  return table;
}

}  // namespace

Manifest ReadDatasetDir(const std::string &dir, Domain domain, Split split) {
  const fs::path base(dir);
  if (!fs::exists(base / "utt2spk"))
    throw DataError(dir + " is not a data directory (no utt2spk)");
  auto text = ReadTable(base / "text");
  auto segments = ReadTable(base / "segments");
  auto utt2spk = ReadTable(base / "utt2spk");
  auto spk2gender = ReadTable(base / "spk2gender");
  auto wav = ReadTable(base / "wav.scp");

  Manifest m(split);
  for (const auto &[id, spk] : utt2spk) {
    Utterance u;
    u.id = id;
    u.domain = domain;
    if (spk != id) u.speaker = spk;
    auto g = spk2gender.find(spk);
    if (g != spk2gender.end()) u.gender = ParseGender(g->second);
    auto t = text.find(id);
    if (t != text.end()) u.transcript = t->second;
    std::string rec = id;
    auto s = segments.find(id);
    if (s != segments.end()) {
      auto fields = SplitTokens(s->second);
      if (fields.size() != 3) throw DataError("bad segments line for " + id);
      rec = fields[0];
      u.recording_id = rec;
      u.start_time = ParseDouble(fields[1]);
      u.end_time = ParseDouble(fields[2]);
      u.duration = *u.end_time - *u.start_time;
    }
    auto w = wav.find(rec);
    if (w != wav.end()) u.audio_path = w->second;
    m.Add(std::move(u));
  }
  return m;
}

}  // namespace corpus
}  // namespace m2ds2
