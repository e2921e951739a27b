// alignpipe/segment-extractor.cc

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

#include "m2ds2/alignpipe/segment-extractor.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>

#include "m2ds2/alignpipe/tfidf-matcher.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/corpus/manifest-ops.h"

namespace m2ds2 {
namespace alignpipe {

std::vector<AlignedSegment> ExtractSegments(const std::vector<AudioChunk> &chunks,
                                            const std::vector<std::string> &transcript,
                                            const ExtractOptions &opts) {
  opts.sw.Check();
  if (opts.context_docs < 0) throw ConfigError("context_docs must be nonnegative");
  auto docs = SplitDocuments(transcript, opts.words_per_doc);
  TfidfIndex index(docs);
  const double floor = opts.EffectiveFloor();

  std::vector<std::optional<AlignedSegment>> slots(chunks.size());
  ParallelFor(chunks.size(), [&](size_t k) {
    const AudioChunk &chunk = chunks[k];
    if (!chunk.hypothesis || chunk.hypothesis->empty()) return;
    const auto &hyp = *chunk.hypothesis;
    TfidfMatch match = index.Match(hyp);
    if (match.zero_similarity) return;
    size_t first = match.doc_index >= static_cast<size_t>(opts.context_docs)
                       ? match.doc_index - opts.context_docs
                       : 0;
    size_t last = std::min(docs.size() - 1, match.doc_index + opts.context_docs);
    size_t ctx_begin = docs[first].source_offset;
    size_t ctx_end = docs[last].source_offset + docs[last].tokens.size();
    std::vector<std::string> window(transcript.begin() + ctx_begin,
                                    transcript.begin() + ctx_end);
    SwAlignment al = SmithWaterman(hyp, window, opts.sw);
    if (al.empty() || al.score < floor) return;
    size_t rb = al.ref_begin, re = al.ref_end;
    if (opts.complete_boundaries) {
      rb -= std::min(rb, al.hyp_begin);
      re = std::min(window.size(), re + (hyp.size() - al.hyp_end));
    }
    AlignedSegment seg;
    seg.recording_id = chunk.recording_id;
    seg.start = chunk.start;
    seg.end = chunk.end;
    seg.text.assign(window.begin() + rb, window.begin() + re);
    seg.score = al.score;
    seg.word_offset = ctx_begin + rb;
    seg.context_begin = ctx_begin;
    seg.context_end = ctx_end;
    slots[k] = std::move(seg);
  });

  std::vector<AlignedSegment> out;
  for (auto &s : slots)
    if (s) out.push_back(std::move(*s));
  M2DS2_VLOG(1) << "aligned " << out.size() << " of " << chunks.size() << " chunks";
  return out;
}

std::vector<SpeakerRange> ReadSpeakerRanges(const std::string &path) {
  std::vector<SpeakerRange> ranges;
  size_t lineno = 0;
  for (const auto &line : ReadLines(path)) {
    ++lineno;
    auto f = SplitTokens(line);
    if (f.empty()) continue;
    if (f.size() != 3)
      throw DataError(path + ":" + std::to_string(lineno) + ": expected 'begin end speaker'");
    SpeakerRange r;
    long long b = ParseInt(f[0]), e = ParseInt(f[1]);
    if (b < 0 || e <= b)
      throw DataError(path + ":" + std::to_string(lineno) + ": bad word range");
    r.begin = static_cast<size_t>(b);
    r.end = static_cast<size_t>(e);
    r.speaker = f[2];
    ranges.push_back(std::move(r));
  }
  return ranges;
}

std::vector<std::string> ReinsertSpokenNoise(const std::vector<std::string> &tokens,
                                             const std::vector<std::string> &context,
                                             size_t max_gap) {
  std::vector<std::string> out;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] != kSpokenNoise) {
      out.push_back(tokens[i]);
      continue;
    }
    bool has_flanks = i > 0 && i + 1 < tokens.size() && tokens[i - 1] != kSpokenNoise &&
                      tokens[i + 1] != kSpokenNoise;
    if (!has_flanks) {
      out.push_back(tokens[i]);
      continue;
    }
    const std::string &left = tokens[i - 1], &right = tokens[i + 1];
    size_t hits = 0, gap_begin = 0, gap_end = 0;
    for (size_t p = 0; p < context.size() && hits < 2; ++p) {
      if (context[p] != left) continue;
      // Nearest right flank after p, leaving at least one word to restore.
      for (size_t q = p + 2; q < context.size() && q - p - 1 <= max_gap; ++q) {
        if (context[q] == right) {
          ++hits;
          gap_begin = p + 1;
          gap_end = q;
          break;
        }
      }
    }
    if (hits == 1) {
      out.insert(out.end(), context.begin() + gap_begin, context.begin() + gap_end);
    } else {
      out.push_back(tokens[i]);
    }
  }
  return out;
}

std::string SegmentId(const std::string &recording_id, double start, double end) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "-%07lld-%07lld", std::llround(start * 100.0),
                std::llround(end * 100.0));
  return recording_id + buf;
}

PostprocessResult Postprocess(const std::vector<AlignedSegment> &segments,
                              const std::vector<SpeakerRange> &speakers,
                              const PostprocessOptions &opts) {
  PostprocessResult result;
  for (const auto &seg : segments) {
    std::vector<std::string> words = seg.text;
    if (opts.transcript != nullptr) {
      size_t cb = std::min(seg.context_begin, opts.transcript->size());
      size_t ce = std::min(std::max(seg.context_end, cb), opts.transcript->size());
      std::vector<std::string> ctx(opts.transcript->begin() + cb, opts.transcript->begin() + ce);
      words = ReinsertSpokenNoise(words, ctx);
    }
    if (words.size() < opts.min_words) continue;

    // Majority overlap against the transcript words the segment covers.
    size_t seg_begin = seg.word_offset, seg_end = seg.word_offset + seg.text.size();
    const SpeakerRange *best = nullptr;
    size_t best_overlap = 0;
    for (const auto &r : speakers) {
      size_t lo = std::max(seg_begin, r.begin), hi = std::min(seg_end, r.end);
      size_t overlap = hi > lo ? hi - lo : 0;
      if (overlap == 0) continue;
      if (best == nullptr || overlap > best_overlap ||
          (overlap == best_overlap && r.begin < best->begin)) {
        best = &r;
        best_overlap = overlap;
      }
    }
    if (best == nullptr) continue;

    corpus::Utterance u;
    u.id = SegmentId(seg.recording_id, seg.start, seg.end);
    u.recording_id = seg.recording_id;
    auto ap = opts.audio_paths.find(seg.recording_id);
    u.audio_path = ap == opts.audio_paths.end() ? "" : ap->second;
    u.start_time = seg.start;
    u.end_time = seg.end;
    u.duration = seg.end - seg.start;
    u.transcript = JoinTokens(words);
    u.domain = opts.domain;
    u.speaker = best->speaker;
    u.gender = corpus::InferGender(best->speaker);
    result.segmented_seconds += u.duration;
    result.manifest.Add(std::move(u));
  }
  return result;
}

double YieldRatio(double segmented_seconds, double raw_seconds) {
  if (!(raw_seconds > 0.0)) throw ConfigError("raw duration must be positive");
  return segmented_seconds / raw_seconds;
}

}  // namespace alignpipe
}  // namespace m2ds2
