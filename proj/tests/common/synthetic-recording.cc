// tests/common/synthetic-recording.cc

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

#include "common/synthetic-recording.h"

namespace m2ds2 {
namespace testing {

namespace {
std::string LexiconWord(int k) { return "w" + std::to_string(k); }
}  // namespace

SyntheticRecording MakeRecording(Rng *rng, int num_words, int lexicon_size,
                                 double chunk_seconds) {
  SyntheticRecording rec;
  rec.recording_id = "rec" + std::to_string(UniformIndex(*rng, 1000));
  double t = 0.2;
  for (int i = 0; i < num_words; ++i) {
    rec.transcript.push_back(LexiconWord(static_cast<int>(UniformIndex(*rng, lexicon_size))));
    double dur = 0.2 + 0.3 * UniformUnit(*rng);
    rec.word_times.push_back({t, t + dur});
    t += dur + 0.15 * UniformUnit(*rng);
  }
  rec.duration = t + 0.2;
  for (const auto &span : alignpipe::ChunkAudio(rec.duration, chunk_seconds)) {
    alignpipe::AudioChunk c;
    c.recording_id = rec.recording_id;
    c.start = span.start;
    c.end = span.end;
    PlantedChunk p;
    for (int i = 0; i < num_words; ++i) {
      double mid = 0.5 * (rec.word_times[i].start + rec.word_times[i].end);
      if (mid < span.start || mid >= span.end) continue;
      if (p.words.empty()) p.first_word_start = rec.word_times[i].start;
      p.last_word_end = rec.word_times[i].end;
      p.words.push_back(rec.transcript[i]);
    }
    c.hypothesis = p.words;
    rec.chunks.push_back(c);
    rec.planted.push_back(p);
  }
  return rec;
}

void SubstituteWords(SyntheticRecording *rec, double p, int lexicon_size, Rng *rng) {
  for (auto &c : rec->chunks) {
    for (auto &w : *c.hypothesis) {
      if (UniformUnit(*rng) >= p) continue;
      std::string r;
      do {
        r = LexiconWord(static_cast<int>(UniformIndex(*rng, lexicon_size)));
      } while (r == w);
      w = r;
    }
  }
}

}  // namespace testing
}  // namespace m2ds2
