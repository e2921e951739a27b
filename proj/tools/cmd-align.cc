// tools/cmd-align.cc

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

// align: chunk hypotheses + long transcript -> segmented manifest.

#include <algorithm>

#include "cli-common.h"
#include "m2ds2/alignpipe/segment-extractor.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/corpus/manifest.h"

namespace m2ds2 {
namespace cli {

void RegisterAlignCommand(CLI::App &app, std::vector<Runner> *runners) {
  struct Args {
    std::string chunks, transcript, speakers, audio, domain = "source", out;
    int words_per_doc = alignpipe::kDefaultWordsPerDocument;
    int context_docs = 1;
    size_t min_words = 2;
    double match = 2.0, mismatch = -1.0, gap = -1.0;
    double raw_seconds = 0.0;
  };
  auto a = std::make_shared<Args>();
  CLI::App *sub = app.add_subcommand(
      "align", "Segment a long recording by aligning chunk hypotheses to its transcript");
  sub->add_option("--chunks", a->chunks, "Chunk hypotheses, JSONL {recording_id, start, end, hypothesis}")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--transcript", a->transcript, "Normalized transcript of the recording")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--speakers", a->speakers, "Speaker turns: 'begin end speaker' word ranges")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--audio", a->audio, "Audio path written into the manifest")->required();
  sub->add_option("--domain", a->domain, "source or target")->capture_default_str();
  sub->add_option("--words-per-doc", a->words_per_doc, "Transcript words per document")->capture_default_str();
  sub->add_option("--context-docs", a->context_docs, "Neighbouring documents searched")->capture_default_str();
  sub->add_option("--min-words", a->min_words, "Shortest segment kept, in words")->capture_default_str();
  sub->add_option("--match", a->match, "Smith-Waterman match score")->capture_default_str();
  sub->add_option("--mismatch", a->mismatch, "Smith-Waterman mismatch score")->capture_default_str();
  sub->add_option("--gap", a->gap, "Smith-Waterman gap score")->capture_default_str();
  sub->add_option("--raw-seconds", a->raw_seconds,
                  "Recording length for the yield ratio (default: last chunk end)");
  sub->add_option("--out", a->out, "Output manifest (JSONL)")->required();
  runners->push_back({sub, [a, sub] {
    auto chunks = alignpipe::ReadChunkHypotheses(a->chunks);
    if (chunks.empty()) throw DataError(a->chunks + " holds no chunks");
    for (const auto &c : chunks)
      if (c.recording_id != chunks.front().recording_id)
        throw DataError(a->chunks + " mixes recordings " + chunks.front().recording_id + " and " +
                        c.recording_id + "; align one recording at a time");
    std::vector<std::string> transcript;
    for (const auto &line : ReadTextLines(a->transcript))
      for (auto &w : SplitTokens(line)) transcript.push_back(std::move(w));
    alignpipe::ExtractOptions eo;
    eo.words_per_doc = a->words_per_doc;
    eo.context_docs = a->context_docs;
    eo.sw = {a->match, a->mismatch, a->gap};
    eo.sw.Check();
    auto segments = alignpipe::ExtractSegments(chunks, transcript, eo);
    alignpipe::PostprocessOptions po;
    po.min_words = a->min_words;
    po.domain = corpus::ParseDomain(a->domain);
    po.audio_paths[chunks.front().recording_id] = a->audio;
    po.transcript = &transcript;
    auto result = alignpipe::Postprocess(segments, alignpipe::ReadSpeakerRanges(a->speakers), po);
    corpus::WriteManifest(result.manifest, a->out);
    WriteSnapshot(*sub, a->out + ".config");
    double raw = a->raw_seconds;
    if (raw <= 0.0)
      for (const auto &c : chunks) raw = std::max(raw, c.end);
    M2DS2_LOG << result.manifest.size() << " segments, "
              << FormatFixed(100.0 * alignpipe::YieldRatio(result.segmented_seconds, raw), 1)
              << "% of the audio kept";
  }});
}

}  // namespace cli
}  // namespace m2ds2
