// tools/cmd-train.cc

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

// synthesize-data, train, decode.

#include <filesystem>

#include "cli-common.h"
#include "m2ds2/acoustic/checkpoint.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/corpus/audio-io.h"
#include "m2ds2/corpus/synthetic-corpus.h"
#include "m2ds2/decoder/ctc-decoder.h"
#include "m2ds2/ngram/arpa-io.h"
#include "m2ds2/trainer/trainer.h"

namespace m2ds2 {
namespace cli {

namespace fs = std::filesystem;

namespace {

corpus::Dataset LoadManifestData(const std::string &path, corpus::Split split) {
  return corpus::LoadDataset(corpus::ReadManifest(path, split));
}

void RegisterSynthesize(CLI::App &app, std::vector<Runner> *runners) {
  auto cfg = std::make_shared<corpus::SyntheticConfig>();
  auto out = std::make_shared<std::string>();
  CLI::App *sub = app.add_subcommand("synthesize-data", "Build the synthetic two-domain corpus");
  sub->add_option("--out-dir", *out, "Output directory")->required();
  sub->add_option("--seed", cfg->seed, "Generator seed")->capture_default_str();
  sub->add_option("--num-chars", cfg->num_chars, "Alphabet size")->capture_default_str();
  sub->add_option("--lexicon-size", cfg->lexicon_size, "Distinct words")->capture_default_str();
  sub->add_option("--source-train", cfg->source_train, "Source training utterances")->capture_default_str();
  sub->add_option("--source-dev", cfg->source_dev, "Source dev utterances")->capture_default_str();
  sub->add_option("--target-train", cfg->target_train, "Target training utterances")->capture_default_str();
  sub->add_option("--target-dev", cfg->target_dev, "Target dev utterances")->capture_default_str();
  sub->add_option("--target-test", cfg->target_test, "Target test utterances")->capture_default_str();
  sub->add_option("--source-noise", cfg->source_noise, "Frame noise, source")->capture_default_str();
  sub->add_option("--target-noise", cfg->target_noise, "Frame noise, target")->capture_default_str();
  sub->add_option("--channel-mix", cfg->channel_mix, "Target channel rotation weight")->capture_default_str();
  sub->add_option("--background", cfg->background_scale, "Target background offset scale")->capture_default_str();
  sub->add_option("--drift", cfg->background_drift, "Target background drift per frame")->capture_default_str();
  runners->push_back({sub, [cfg, out, sub] {
                        auto corpus = corpus::GenerateSyntheticCorpus(*cfg);
                        corpus::WriteSyntheticCorpus(corpus, *out);
                        WriteSnapshot(*sub, (fs::path(*out) / "synthesize.config").string());
                        M2DS2_LOG << "wrote synthetic corpus to " << *out;
                      }});
}

struct TrainArgs {
  std::string mode = "m2ds2";
  std::string source_train, source_dev, target_train;
  std::string out_dir, config, vocab, init, seed_model;
  std::vector<std::string> overrides;
  std::optional<double> alpha, beta, lr;
  std::optional<long long> max_steps;
  std::optional<uint64_t> seed;
  bool resume = false;
};

void RegisterTrain(CLI::App &app, std::vector<Runner> *runners) {
  auto a = std::make_shared<TrainArgs>();
  CLI::App *sub = app.add_subcommand("train", "Train an acoustic model (so, m2ds2, cpt or psl)");
  sub->add_option("--mode", a->mode, "Training regime")
      ->check(CLI::IsMember({"so", "m2ds2", "cpt", "psl"}))
      ->capture_default_str();
  sub->add_option("--source-train", a->source_train, "Labeled source manifest")->check(CLI::ExistingFile);
  sub->add_option("--source-dev", a->source_dev, "Labeled source dev manifest (early stopping)")
      ->check(CLI::ExistingFile);
  sub->add_option("--target-train", a->target_train, "Target audio manifest")->check(CLI::ExistingFile);
  sub->add_option("--out-dir", a->out_dir, "Run directory")->required();
  sub->add_option("--config", a->config, "key = value training config file")->check(CLI::ExistingFile);
  sub->add_option("--set", a->overrides, "Config override key=value (repeatable)");
  sub->add_option("--alpha", a->alpha, "Source self-supervision weight (default 0.01)");
  sub->add_option("--beta", a->beta, "Target self-supervision weight (default 0.02)");
  sub->add_option("--lr", a->lr, "Peak learning rate (default 3e-4)");
  sub->add_option("--max-steps", a->max_steps, "Optimizer updates (default 10000)");
  sub->add_option("--seed", a->seed, "Run seed (default 0)");
  sub->add_option("--vocab", a->vocab, "Character vocabulary (default: built from source transcripts)")
      ->check(CLI::ExistingFile);
  sub->add_option("--init", a->init, "Start from this checkpoint instead of a fresh model")
      ->check(CLI::ExistingFile);
  sub->add_option("--seed-model", a->seed_model, "psl: model that produces the silver transcripts")
      ->check(CLI::ExistingFile);
  sub->add_flag("--resume", a->resume, "Continue from <out-dir>/last.ckpt when present");
  runners->push_back({sub, [a, sub] {
    const std::string &mode = a->mode;
    if (a->source_dev.empty()) throw ConfigError("train needs --source-dev");
    if (mode != "psl" && a->source_train.empty()) throw ConfigError(mode + " training needs --source-train");
    if ((mode == "m2ds2" || mode == "cpt" || mode == "psl") && a->target_train.empty())
      throw ConfigError(mode + " training needs --target-train");
    if (mode == "psl" && a->seed_model.empty()) throw ConfigError("psl training needs --seed-model");
    fs::create_directories(a->out_dir);

    corpus::Dataset source_train, source_dev, target_train;
    if (!a->source_train.empty()) source_train = LoadManifestData(a->source_train, corpus::Split::kTrain);
    source_dev = LoadManifestData(a->source_dev, corpus::Split::kDev);
    if (!a->target_train.empty()) target_train = LoadManifestData(a->target_train, corpus::Split::kTrain);

    decoder::CharVocab vocab;
    if (!a->vocab.empty()) {
      vocab = decoder::CharVocab::Read(a->vocab);
    } else {
      const corpus::Dataset &labeled = source_train.size() > 0 ? source_train : source_dev;
      std::vector<std::string> texts;
      for (const auto &u : labeled.manifest.entries()) texts.push_back(u.transcript.value_or(""));
      vocab = decoder::CharVocab::FromTranscripts(texts);
    }
    vocab.Write((fs::path(a->out_dir) / "vocab.txt").string());

    // Defaults < config file < --set < dedicated flags.
    trainer::TrainConfig tc;
    const corpus::Dataset &probe = source_dev;
    const bool features = corpus::IsFeaturePath(probe.manifest[0].audio_path);
    acoustic::ModelConfig mc =
        trainer::DefaultModelConfig(static_cast<int>(probe.inputs[0].cols()), vocab.size());
    if (!features) {
      mc.encoder.synthetic_feature_mode = false;
      mc.encoder.conv_layers = acoustic::FullScaleConvLayers(mc.encoder.model_dim);
    }
    std::map<std::string, std::string> kv;
    if (!a->config.empty()) kv = trainer::ReadConfigFile(a->config);
    for (const auto &o : a->overrides) {
      auto eq = o.find('=');
      if (eq == std::string::npos) throw ConfigError("--set expects key=value, got " + o);
      kv[o.substr(0, eq)] = o.substr(eq + 1);
    }
    trainer::ApplyConfig(kv, &tc, &mc);
    if (a->alpha) tc.weights.alpha = *a->alpha;
    if (a->beta) tc.weights.beta = *a->beta;
    if (a->lr) tc.peak_lr = *a->lr;
    if (a->max_steps) tc.max_steps = *a->max_steps;
    if (a->seed) tc.seed = *a->seed;
    tc.Check();
    mc.Check();
    trainer::WriteConfigFile(trainer::ConfigToMap(tc, mc), (fs::path(a->out_dir) / "config.txt").string());
    WriteSnapshot(*sub, (fs::path(a->out_dir) / "command.config").string());

    acoustic::Wav2VecModel init = a->init.empty() ? acoustic::Wav2VecModel(mc, tc.seed)
                                                  : acoustic::LoadModel(acoustic::ReadCheckpoint(a->init));
    if (init.config().vocab_size != vocab.size())
      throw ConfigError("model has " + std::to_string(init.config().vocab_size) + " outputs, vocabulary " +
                        std::to_string(vocab.size()));
    trainer::FitData data{&source_train, &source_dev, &target_train};
    const fs::path out(a->out_dir);
    trainer::FitResult result;
    if (mode == "so" || mode == "m2ds2") {
      result = trainer::Fit(mode == "so" ? trainer::TrainMode::kSourceOnly : trainer::TrainMode::kM2ds2,
                            data, tc, init, vocab, a->out_dir, a->resume);
    } else if (mode == "cpt") {
      auto pre = trainer::Fit(trainer::TrainMode::kCptPretrain, data, tc, init, vocab,
                              (out / "pretrain").string(), a->resume);
      result = trainer::Fit(trainer::TrainMode::kCptFinetune, data, tc, pre.model, vocab,
                            (out / "finetune").string(), a->resume);
      fs::copy_file(out / "finetune" / "best.ckpt", out / "best.ckpt", fs::copy_options::overwrite_existing);
    } else {
      auto seed_model = acoustic::LoadModel(acoustic::ReadCheckpoint(a->seed_model));
      corpus::Dataset silver = trainer::PslGenerate(seed_model, target_train, vocab);
      corpus::WriteManifest(silver.manifest, (out / "silver.jsonl").string());
      trainer::FitData sd{nullptr, &source_dev, &silver};
      result = trainer::Fit(trainer::TrainMode::kPseudoLabel, sd, tc, init, vocab, a->out_dir, a->resume);
    }
    M2DS2_LOG << "best model (step " << result.state.best_step << ") in "
              << (out / "best.ckpt").string();
  }});
}

void RegisterDecode(CLI::App &app, std::vector<Runner> *runners) {
  struct Args {
    std::string model, vocab, data, method = "greedy", lm, out;
    decoder::DecodeConfig dc;
  };
  auto a = std::make_shared<Args>();
  CLI::App *sub = app.add_subcommand("decode", "Transcribe a manifest (greedy or beam search)");
  sub->add_option("--model", a->model, "Checkpoint")->required()->check(CLI::ExistingFile);
  sub->add_option("--vocab", a->vocab, "Character vocabulary")->required()->check(CLI::ExistingFile);
  sub->add_option("--data", a->data, "Manifest to decode")->required()->check(CLI::ExistingFile);
  sub->add_option("--method", a->method, "greedy or beam")
      ->check(CLI::IsMember({"greedy", "beam"}))
      ->capture_default_str();
  sub->add_option("--lm", a->lm, "ARPA model for shallow fusion (beam only)")->check(CLI::ExistingFile);
  sub->add_option("--beam", a->dc.beam_width, "Beam width")->capture_default_str();
  sub->add_option("--lm-weight", a->dc.lm_weight, "LM weight")->capture_default_str();
  sub->add_option("--word-bonus", a->dc.word_bonus, "Per-word bonus")->capture_default_str();
  sub->add_option("--out", a->out, "Hypotheses, JSONL {id, text, ...scores}")->required();
  runners->push_back({sub, [a, sub] {
    a->dc.Check();
    if (a->method == "greedy" && !a->lm.empty()) throw ConfigError("--lm needs --method beam");
    auto model = acoustic::LoadModel(acoustic::ReadCheckpoint(a->model));
    auto vocab = decoder::CharVocab::Read(a->vocab);
    if (model.config().vocab_size != vocab.size()) throw ConfigError("vocabulary does not match the model");
    auto data = LoadManifestData(a->data, corpus::Split::kTest);
    std::optional<ngram::NGramModel> lm;
    if (!a->lm.empty()) lm = ngram::ReadArpa(a->lm);
    std::vector<nlohmann::json> recs(data.size());
    ParallelFor(data.size(), [&](size_t i) {
      Eigen::MatrixXd lp = model.CtcLogProbs(model.Latents(data.inputs[i]));
      nlohmann::json r = {{"id", data.manifest[i].id}};
      if (a->method == "greedy") {
        r["text"] = decoder::GreedyDecode(lp, vocab);
      } else {
        auto h = decoder::BeamDecode(lp, vocab, lm ? &*lm : nullptr, a->dc);
        r["text"] = h.text;
        r["acoustic"] = h.acoustic;
        r["lm"] = h.lm;
        r["combined"] = h.combined;
        r["num_words"] = h.num_words;
        if (h.underflow) r["underflow"] = true;
      }
      recs[i] = std::move(r);
    });
    WriteJsonLines(recs, a->out);
    WriteSnapshot(*sub, a->out + ".config");
  }});
}

}  // namespace

void RegisterTrainCommands(CLI::App &app, std::vector<Runner> *runners) {
  RegisterSynthesize(app, runners);
  RegisterTrain(app, runners);
  RegisterDecode(app, runners);
}

}  // namespace cli
}  // namespace m2ds2
