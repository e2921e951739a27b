// alignpipe/chunking.cc

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

#include "m2ds2/alignpipe/chunking.h"

#include <cmath>
#include <fstream>

#include "json.hpp"
#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace alignpipe {

std::vector<TimeSpan> ChunkAudio(double duration_s, double chunk_s) {
  if (!(duration_s > 0.0) || !(chunk_s > 0.0))
    throw ConfigError("chunking needs positive duration and chunk length");
  std::vector<TimeSpan> out;
  // Integer chunk index avoids drift from repeated addition.
  for (size_t k = 0;; ++k) {
    double start = static_cast<double>(k) * chunk_s;
    if (start >= duration_s) break;
    out.push_back({start, std::min(duration_s, start + chunk_s)});
  }
  return out;
}

std::vector<Document> SplitDocuments(const std::vector<std::string> &transcript,
                                     int words_per_doc) {
  if (transcript.empty()) throw DataError("cannot split an empty transcript");
  if (words_per_doc <= 0) throw ConfigError("words_per_doc must be positive");
  std::vector<Document> docs;
  for (size_t begin = 0; begin < transcript.size(); begin += words_per_doc) {
    size_t end = std::min(transcript.size(), begin + static_cast<size_t>(words_per_doc));
    Document d;
    d.doc_id = "doc" + std::to_string(docs.size());
    d.tokens.assign(transcript.begin() + begin, transcript.begin() + end);
    d.source_offset = begin;
    docs.push_back(std::move(d));
  }
  return docs;
}

std::vector<AudioChunk> ReadChunkHypotheses(const std::string &path) {
  std::vector<AudioChunk> chunks;
  size_t lineno = 0;
  for (const auto &line : ReadLines(path)) {
    ++lineno;
    if (TrimWhitespace(line).empty()) continue;
    try {
      auto j = nlohmann::json::parse(line);
      AudioChunk c;
      c.recording_id = j.at("recording_id").get<std::string>();
      c.start = j.at("start").get<double>();
      c.end = j.at("end").get<double>();
      if (j.contains("hypothesis") && !j["hypothesis"].is_null())
        c.hypothesis = SplitTokens(j["hypothesis"].get<std::string>());
      chunks.push_back(std::move(c));
    } catch (const nlohmann::json::exception &e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return chunks;
}

void WriteChunkHypotheses(const std::vector<AudioChunk> &chunks, const std::string &path) {
  std::vector<std::string> lines;
  for (const auto &c : chunks) {
    nlohmann::json j;
    j["recording_id"] = c.recording_id;
    j["start"] = c.start;
    j["end"] = c.end;
    j["hypothesis"] = c.hypothesis ? nlohmann::json(JoinTokens(*c.hypothesis))
                                   : nlohmann::json(nullptr);
    lines.push_back(j.dump());
  }
  WriteLines(path, lines);
}

}  // namespace alignpipe
}  // namespace m2ds2
