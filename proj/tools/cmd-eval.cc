// tools/cmd-eval.cc

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

// eval-wer, eval-rai, diagnose-codebook, project-codes.

#include <iostream>
#include <unordered_map>

#include "cli-common.h"
#include "m2ds2/acoustic/checkpoint.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/corpus/dataset.h"
#include "m2ds2/metrics/code-projection.h"
#include "m2ds2/metrics/wer.h"
#include "m2ds2/objectives/codebook-stats.h"

namespace m2ds2 {
namespace cli {

namespace {

struct CodeData {
  acoustic::Wav2VecModel model;
  std::vector<std::vector<std::vector<int>>> indices;  // per utterance
  std::vector<std::string> domains;                    // per utterance
};

CodeData ExtractCodes(const std::string &model_path, const std::vector<std::string> &manifests,
                      size_t max_utts) {
  CodeData d{acoustic::LoadModel(acoustic::ReadCheckpoint(model_path)), {}, {}};
  for (const auto &path : manifests) {
    corpus::Manifest m = corpus::ReadManifest(path);
    std::vector<corpus::Utterance> head(m.entries().begin(),
                                        m.entries().begin() + std::min(max_utts, m.size()));
    corpus::Dataset data = corpus::LoadDataset(corpus::Manifest(head, m.split()));
    std::vector<std::vector<std::vector<int>>> idx(data.size());
    ParallelFor(data.size(), [&](size_t i) { idx[i] = d.model.CodeIndices(d.model.Latents(data.inputs[i])); });
    for (size_t i = 0; i < data.size(); ++i) {
      d.indices.push_back(std::move(idx[i]));
      d.domains.emplace_back(corpus::DomainName(data.manifest[i].domain));
    }
  }
  return d;
}

}  // namespace

void RegisterEvalCommands(CLI::App &app, std::vector<Runner> *runners) {
  {
    auto ref = std::make_shared<std::string>();
    auto hyp = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    CLI::App *sub = app.add_subcommand("eval-wer", "Corpus-level word error rate");
    sub->add_option("--ref", *ref, "Reference manifest (transcripts)")->required()->check(CLI::ExistingFile);
    sub->add_option("--hyp", *hyp, "Hypotheses JSONL {id, text}")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", *out, "Per-utterance report, JSONL");
    runners->push_back({sub, [ref, hyp, out, sub] {
      corpus::Manifest m = corpus::ReadManifest(*ref);
      std::unordered_map<std::string, std::string> hyps;
      for (const auto &r : ReadJsonLines(*hyp)) hyps[r.at("id").get<std::string>()] = r.at("text").get<std::string>();
      std::vector<std::string> refs, hs;
      std::vector<nlohmann::json> recs;
      for (const auto &u : m.entries()) {
        if (!u.transcript) throw DataError("reference " + u.id + " has no transcript");
        auto it = hyps.find(u.id);
        if (it == hyps.end()) throw DataError("no hypothesis for " + u.id);
        refs.push_back(*u.transcript);
        hs.push_back(it->second);
        auto e = metrics::AlignWords(SplitTokens(refs.back()), SplitTokens(hs.back()));
        recs.push_back({{"id", u.id}, {"ref", refs.back()}, {"hyp", hs.back()},
                        {"sub", e.substitutions}, {"ins", e.insertions}, {"del", e.deletions}});
      }
      auto r = metrics::ComputeWer(refs, hs);
      std::cout << metrics::FormatEvalResult(r) << "\n";
      if (!out->empty()) {
        recs.push_back({{"summary", true}, {"wer", r.wer}, {"sub", r.substitutions}, {"ins", r.insertions},
                        {"del", r.deletions}, {"n_ref_words", r.n_ref_words}});
        WriteJsonLines(recs, *out);
        WriteSnapshot(*sub, *out + ".config");
      }
    }});
  }
  {
    auto adapted = std::make_shared<double>(0.0);
    auto unadapted = std::make_shared<double>(0.0);
    CLI::App *sub = app.add_subcommand("eval-rai", "Relative adaptation improvement, percent");
    sub->add_option("--adapted", *adapted, "WER of the adapted model, percent")->required();
    sub->add_option("--unadapted", *unadapted, "WER of the unadapted baseline, percent")->required();
    runners->push_back({sub, [adapted, unadapted] {
      std::cout << FormatFixed(metrics::Rai(*adapted, *unadapted), 2) << "\n";
    }});
  }
  {
    struct Args {
      std::string model, out;
      std::vector<std::string> data;
      size_t max_utts = 100;
    };
    auto a = std::make_shared<Args>();
    CLI::App *sub = app.add_subcommand("diagnose-codebook", "Code usage and entropy per codebook");
    sub->add_option("--model", a->model, "Checkpoint")->required()->check(CLI::ExistingFile);
    sub->add_option("--data", a->data, "Manifest(s), pooled")->required()->check(CLI::ExistingFile);
    sub->add_option("--max-utts", a->max_utts, "Leading utterances used per manifest")->capture_default_str();
    sub->add_option("--out", a->out, "JSON report");
    runners->push_back({sub, [a, sub] {
      CodeData d = ExtractCodes(a->model, a->data, a->max_utts);
      std::vector<std::vector<int>> pooled;
      for (auto &u : d.indices) pooled.insert(pooled.end(), u.begin(), u.end());
      const auto &q = d.model.config().quantizer;
      auto stats = objectives::CodebookStatsFromIndices(pooled, q.num_codebooks, q.codebook_size);
      std::cout << stats.ToJson() << "\n";
      if (!a->out.empty()) {
        WriteLines(a->out, {stats.ToJson()});
        WriteSnapshot(*sub, a->out + ".config");
      }
    }});
  }
  {
    struct Args {
      std::string model, out;
      std::vector<std::string> data;
      size_t max_utts = 100;
      int dims = 2;
    };
    auto a = std::make_shared<Args>();
    CLI::App *sub = app.add_subcommand("project-codes", "PCA projection of the selected code vectors, as CSV");
    sub->add_option("--model", a->model, "Checkpoint")->required()->check(CLI::ExistingFile);
    sub->add_option("--data", a->data, "Manifest(s); rows are labeled with the entry's domain")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--max-utts", a->max_utts, "Leading utterances used per manifest")->capture_default_str();
    sub->add_option("--dims", a->dims, "Output dimensions")->capture_default_str();
    sub->add_option("--out", a->out, "CSV x,y,domain")->required();
    runners->push_back({sub, [a, sub] {
      CodeData d = ExtractCodes(a->model, a->data, a->max_utts);
      std::vector<acoustic::Matrix> blocks;
      std::vector<std::string> labels;
      Eigen::Index rows = 0;
      for (size_t u = 0; u < d.indices.size(); ++u) {
        blocks.push_back(acoustic::CodeVectors(d.model.params(), d.model.config().quantizer, d.indices[u]));
        rows += blocks.back().rows();
        labels.insert(labels.end(), d.indices[u].size(), d.domains[u]);
      }
      if (blocks.empty()) throw DataError("no utterances to project");
      acoustic::Matrix all(rows, blocks.front().cols());
      Eigen::Index r = 0;
      for (const auto &b : blocks) {
        all.middleRows(r, b.rows()) = b;
        r += b.rows();
      }
      metrics::WriteProjectionCsv(metrics::ProjectCodes(all, a->dims), labels, a->out);
      WriteSnapshot(*sub, a->out + ".config");
    }});
  }
}

}  // namespace cli
}  // namespace m2ds2
