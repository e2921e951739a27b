// tools/cmd-text.cc

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

// normalize, lm-train, lm-prune, lm-score, lm-filter.

#include "cli-common.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/corpus/text-normalizer.h"
#include "m2ds2/ngram/arpa-io.h"
#include "m2ds2/ngram/lm-adaptation.h"

namespace m2ds2 {
namespace cli {

namespace {

// "3,5,7" -> {2:3, 3:5, 4:7}: one threshold per order starting at bigrams.
std::map<int, int64_t> ParseThresholds(const std::string &spec, int order) {
  std::map<int, int64_t> out;
  if (spec.empty()) return out;
  std::string s = spec;
  for (char &c : s)
    if (c == ',') c = ' ';
  int n = 2;
  for (const auto &tok : SplitTokens(s)) {
    if (n > order) throw ConfigError("more prune thresholds than orders above 1");
    long long v = ParseInt(tok);
    if (v < 1) throw ConfigError("prune thresholds must be positive");
    out[n++] = v;
  }
  return out;
}

struct LmTrainArgs {
  std::string text, out;
  int order = ngram::kDefaultOrder;
  std::string thresholds;
};

void AddLmTrain(CLI::App &app, std::vector<Runner> *runners, const char *name, const char *help,
                const char *default_thresholds) {
  auto args = std::make_shared<LmTrainArgs>();
  args->thresholds = default_thresholds;
  CLI::App *sub = app.add_subcommand(name, help);
  sub->add_option("--text", args->text, "Normalized training text, one sentence per line")
      ->required()
      ->check(CLI::ExistingFile);
  sub->add_option("--order", args->order, "N-gram order")->capture_default_str()->check(CLI::Range(1, 9));
  sub->add_option("--thresholds", args->thresholds,
                  "Minimum counts for orders 2, 3, ... (comma separated; empty keeps all)")
      ->capture_default_str();
  sub->add_option("--out", args->out, "Output ARPA file")->required();
  runners->push_back({sub, [args, sub] {
                        auto lines = ReadTextLines(args->text);
                        auto lm = ngram::TrainLm(lines, args->order,
                                                 ParseThresholds(args->thresholds, args->order));
                        ngram::WriteArpa(lm, args->out);
                        WriteSnapshot(*sub, args->out + ".config");
                        M2DS2_LOG << "wrote " << lm.NumEntries() << " n-grams to " << args->out;
                      }});
}

}  // namespace

void RegisterTextCommands(CLI::App &app, std::vector<Runner> *runners) {
  {
    auto in = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    CLI::App *sub = app.add_subcommand("normalize", "Normalize raw transcripts line by line");
    sub->add_option("--in", *in, "Raw text, one utterance per line")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", *out, "Normalized text")->required();
    runners->push_back({sub, [in, out, sub] {
                          auto lines = ReadTextLines(*in);
                          std::vector<std::string> norm(lines.size());
                          ParallelFor(lines.size(), [&](size_t i) { norm[i] = corpus::NormalizeText(lines[i]); });
                          WriteLines(*out, norm);
                          WriteSnapshot(*sub, *out + ".config");
                        }});
  }
  AddLmTrain(app, runners, "lm-train", "Estimate a Kneser-Ney n-gram LM (no pruning by default)", "");
  AddLmTrain(app, runners, "lm-prune",
             "Estimate a Kneser-Ney n-gram LM after count pruning (3/5/7 by default)", "3,5,7");
  {
    auto lm = std::make_shared<std::string>();
    auto text = std::make_shared<std::string>();
    auto out = std::make_shared<std::string>();
    CLI::App *sub = app.add_subcommand("lm-score", "Per-line perplexity under an ARPA model");
    sub->add_option("--lm", *lm, "ARPA model")->required()->check(CLI::ExistingFile);
    sub->add_option("--text", *text, "Text to score")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", *out, "Output JSONL {line, text, perplexity}")->required();
    runners->push_back({sub, [lm, text, out, sub] {
                          auto model = ngram::ReadArpa(*lm);
                          auto scored = ngram::ScoreLines(model, ReadTextLines(*text));
                          std::vector<nlohmann::json> recs;
                          for (size_t i = 0; i < scored.size(); ++i)
                            recs.push_back({{"line", i}, {"text", scored[i].text},
                                            {"perplexity", scored[i].perplexity}});
                          WriteJsonLines(recs, *out);
                          WriteSnapshot(*sub, *out + ".config");
                        }});
  }
  {
    struct Args {
      std::string lm, in_domain, text, out;
      double keep = ngram::kDefaultKeepRatio;
    };
    auto a = std::make_shared<Args>();
    CLI::App *sub = app.add_subcommand(
        "lm-filter", "Keep the lines a domain-biased LM finds least perplexing");
    auto *lm_opt = sub->add_option("--lm", a->lm, "Biased ARPA model")->check(CLI::ExistingFile);
    sub->add_option("--in-domain", a->in_domain,
                    "In-domain text; builds the biased 4-gram LM (3/5/7 pruning) instead of --lm")
        ->check(CLI::ExistingFile)
        ->excludes(lm_opt);
    sub->add_option("--text", a->text, "Candidate corpus, one sentence per line")
        ->required()
        ->check(CLI::ExistingFile);
    sub->add_option("--keep", a->keep, "Fraction of lines kept")->capture_default_str();
    sub->add_option("--out", a->out, "Kept lines, original order")->required();
    runners->push_back({sub, [a, sub] {
                          if (a->lm.empty() == a->in_domain.empty())
                            throw ConfigError("lm-filter needs exactly one of --lm and --in-domain");
                          ngram::NGramModel biased = a->lm.empty()
                                                         ? ngram::BuildBiasedLm(ReadTextLines(a->in_domain))
                                                         : ngram::ReadArpa(a->lm);
                          auto lines = ReadTextLines(a->text);
                          auto kept = ngram::PerplexityFilter(lines, biased, a->keep);
                          WriteLines(a->out, kept);
                          WriteSnapshot(*sub, a->out + ".config");
                          M2DS2_LOG << "kept " << kept.size() << " of " << lines.size() << " lines";
                        }});
  }
}

}  // namespace cli
}  // namespace m2ds2
