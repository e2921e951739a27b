// trainer/trainer.cc

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

#include "m2ds2/trainer/trainer.h"

#include <cmath>
#include <filesystem>
#include <fstream>

#include "m2ds2/acoustic/checkpoint.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/parallel.h"
#include "m2ds2/base/random.h"
#include "m2ds2/base/text-utils.h"
#include "m2ds2/decoder/ctc-decoder.h"
#include "m2ds2/objectives/ctc-loss.h"
#include "m2ds2/trainer/lr-schedule.h"

namespace m2ds2 {
namespace trainer {

using acoustic::Matrix;
using acoustic::Wav2VecModel;
using nlohmann::json;

PreparedSet Prepare(const Wav2VecModel &model, const corpus::Dataset &data,
                    const decoder::CharVocab &vocab, bool labeled) {
  std::vector<Matrix> latents(data.size());
  ParallelFor(data.size(), [&](size_t i) { latents[i] = model.Latents(data.inputs[i]); });
  PreparedSet out;
  size_t dropped = 0;
  for (size_t i = 0; i < data.size(); ++i) {
    const corpus::Utterance &u = data.manifest[i];
    if (labeled) {
      if (!u.transcript) throw ConfigError("utterance " + u.id + " has no transcript");
      std::vector<int> target = vocab.Encode(*u.transcript);
      if (objectives::CtcMinimumFrames(target) > latents[i].rows()) {
        M2DS2_VLOG(1) << "dropping " << u.id << ": " << target.size() << " labels, "
                      << latents[i].rows() << " frames";
        ++dropped;
        continue;
      }
      out.labels.push_back(std::move(target));
    }
    out.ids.push_back(u.id);
    out.latents.push_back(std::move(latents[i]));
  }
  if (dropped > 0)
    M2DS2_WARN << "dropped " << dropped << " utterances too short for their transcripts";
  return out;
}

double MeanCtcLoss(const Wav2VecModel &model, const PreparedSet &set) {
  if (set.size() == 0 || !set.labeled()) throw DataError("CTC evaluation needs labeled data");
  std::vector<double> losses(set.size());
  ParallelFor(set.size(), [&](size_t i) {
    losses[i] = objectives::CtcLoss(model.CtcLogProbs(set.latents[i]), set.labels[i]).loss;
  });
  double sum = 0.0;
  for (double l : losses) sum += l;
  return sum / static_cast<double>(set.size());
}

std::vector<std::string> GreedyTranscripts(const Wav2VecModel &model,
                                           const std::vector<Matrix> &latents,
                                           const decoder::CharVocab &vocab) {
  std::vector<std::string> out(latents.size());
  ParallelFor(latents.size(), [&](size_t i) {
    out[i] = decoder::GreedyDecode(model.CtcLogProbs(latents[i]), vocab);
  });
  return out;
}

objectives::CodebookStats PooledCodebookStats(const Wav2VecModel &model,
                                              const std::vector<const PreparedSet *> &sets) {
  std::vector<const Matrix *> all;
  for (const PreparedSet *s : sets)
    for (const Matrix &z : s->latents) all.push_back(&z);
  std::vector<std::vector<std::vector<int>>> per(all.size());
  ParallelFor(all.size(), [&](size_t i) { per[i] = model.CodeIndices(*all[i]); });
  std::vector<std::vector<int>> pooled;
  for (auto &p : per) pooled.insert(pooled.end(), p.begin(), p.end());
  const auto &q = model.config().quantizer;
  return objectives::CodebookStatsFromIndices(pooled, q.num_codebooks, q.codebook_size);
}

namespace {

bool NeedsLabeled(TrainMode m) { return m != TrainMode::kCptPretrain; }
bool NeedsUnlabeled(TrainMode m) { return m == TrainMode::kM2ds2 || m == TrainMode::kCptPretrain; }

json OptionalNumber(const std::optional<double> &v) { return v ? json(*v) : json(nullptr); }

json ComponentsJson(const objectives::LossComponents &c) {
  json j = json::object();
  if (c.ctc) j["ctc"] = *c.ctc;
  if (c.ss_src) j["ss_src"] = *c.ss_src;
  if (c.ss_tgt) j["ss_tgt"] = *c.ss_tgt;
  if (!c.diversity_src.empty()) j["diversity_src"] = c.diversity_src;
  if (!c.diversity_tgt.empty()) j["diversity_tgt"] = c.diversity_tgt;
  j["total"] = c.total;
  return j;
}

bool AllFinite(const objectives::LossComponents &c) {
  for (const auto &v : {c.ctc, c.ss_src, c.ss_tgt})
    if (v && !std::isfinite(*v)) return false;
  return std::isfinite(c.total);
}

}  // namespace

Trainer::Trainer(TrainMode mode, const TrainConfig &cfg, Wav2VecModel model, PreparedSet labeled,
                 PreparedSet unlabeled, PreparedSet dev)
    : mode_(mode),
      cfg_(cfg),
      model_(std::move(model)),
      labeled_(std::move(labeled)),
      unlabeled_(std::move(unlabeled)),
      dev_(std::move(dev)) {
  cfg_.Check();
  const std::string name(TrainModeName(mode));
  if (NeedsLabeled(mode)) {
    if (labeled_.size() == 0 || !labeled_.labeled())
      throw ConfigError(name + " training needs labeled data");
    if (dev_.size() == 0 || !dev_.labeled())
      throw ConfigError(name + " training needs a labeled dev set");
  }
  if (NeedsUnlabeled(mode) && unlabeled_.size() == 0)
    throw ConfigError(name + " training needs unlabeled target data");
  adam_ = AdamW(model_.params(), cfg_.adam);
}

long long Trainer::MaxSteps() const {
  return mode_ == TrainMode::kCptPretrain ? cfg_.cpt_steps : cfg_.max_steps;
}

Wav2VecModel Trainer::BestModel() const {
  if (!best_params_) return model_;
  return Wav2VecModel(model_.config(), *best_params_);
}

CycleBatches Trainer::NextBatches() const {
  const long long cycle = state_.step;
  switch (mode_) {
    case TrainMode::kM2ds2:
      return MixedCycle(labeled_.size(), unlabeled_.size(), cfg_.source_batch, cfg_.target_batch,
                        cfg_.minibatch_size, cfg_.seed, cycle);
    case TrainMode::kCptPretrain:
      return SingleCycle(unlabeled_.size(), cfg_.cpt_batch_size, cfg_.minibatch_size, cfg_.seed,
                         cycle, true);
    default:
      return SingleCycle(labeled_.size(), cfg_.so_batch_size, cfg_.minibatch_size, cfg_.seed, cycle,
                         false);
  }
}

std::vector<objectives::Minibatch> Trainer::Gather(const std::vector<std::vector<int>> &lists,
                                                   const PreparedSet &set,
                                                   uint64_t first_index) const {
  std::vector<objectives::Minibatch> out;
  for (size_t b = 0; b < lists.size(); ++b) {
    objectives::Minibatch mb;
    for (int i : lists[b]) {
      mb.latents.push_back(set.latents[i]);
      if (set.labeled()) mb.labels.push_back(set.labels[i]);
    }
    mb.seed = DeriveSeed(cfg_.seed, {static_cast<uint64_t>(state_.step), first_index + b});
    out.push_back(std::move(mb));
  }
  return out;
}

objectives::LossComponents Trainer::Step() {
  if (Done()) throw ConfigError("training already finished");
  const CycleBatches batches = NextBatches();
  // Unlabeled views so target batches never see labels they might carry.
  PreparedSet target_view;
  const PreparedSet *target_set = &unlabeled_;
  if (unlabeled_.labeled()) {
    target_view = unlabeled_;
    target_view.labels.clear();
    target_set = &target_view;
  }
  auto source = Gather(batches.source, labeled_, 0);
  auto target = Gather(batches.target, *target_set, batches.source.size());

  objectives::LossWeights w = cfg_.weights;
  if (mode_ == TrainMode::kCptPretrain) {
    w.alpha = 0.0;
    w.beta = 1.0;
  } else if (mode_ != TrainMode::kM2ds2) {
    w.alpha = w.beta = 0.0;
  }
  const double temperature = model_.config().quantizer.TemperatureAt(state_.step);
  const double lr = LrAt(state_.step + 1, MaxSteps(), cfg_.peak_lr, cfg_.warmup_fraction);

  acoustic::Gradients grads(model_.params().size());
  objectives::LossComponents c = objectives::MixedLoss(
      model_, source, target, w, cfg_.ssl, temperature, mode_ != TrainMode::kCptPretrain, &grads);
  const double grad_norm = std::sqrt(grads.SquaredNorm());
  if (!AllFinite(c) || !std::isfinite(grad_norm)) {
    if (!dump_path_.empty()) {
      json d = {{"step", state_.step + 1},     {"mode", TrainModeName(mode_)},
                {"lr", lr},                    {"temperature", temperature},
                {"grad_norm", OptionalNumber(std::isfinite(grad_norm) ? std::optional(grad_norm)
                                                                      : std::nullopt)},
                {"losses", ComponentsJson(c)}, {"source_batches", batches.source},
                {"target_batches", batches.target}};
      std::ofstream(dump_path_) << d.dump(1) << "\n";
    }
    throw NumericError("non-finite loss at step " + std::to_string(state_.step + 1) +
                       (dump_path_.empty() ? "" : "; state dumped to " + dump_path_));
  }
  if (cfg_.max_grad_norm > 0.0 && grad_norm > cfg_.max_grad_norm)
    grads.Scale(cfg_.max_grad_norm / grad_norm);
  adam_.Step(&model_.mutable_params(), grads, lr);
  ++state_.step;

  if (log_) {
    json rec = ComponentsJson(c);
    rec["step"] = state_.step;
    rec["lr"] = lr;
    rec["temperature"] = temperature;
    rec["grad_norm"] = grad_norm;
    log_->push_back(std::move(rec));
  }
  return c;
}

double Trainer::Evaluate() {
  const double loss = MeanCtcLoss(model_, dev_);
  ++state_.num_evals;
  if (!state_.has_best || loss < state_.best_dev_loss) {
    state_.has_best = true;
    state_.best_dev_loss = loss;
    state_.best_step = state_.step;
    state_.evals_since_improvement = 0;
    best_params_ = model_.params();
  } else if (++state_.evals_since_improvement >= cfg_.patience) {
    state_.stopped = true;
  }
  if (log_)
    log_->push_back({{"step", state_.step},
                     {"event", "eval"},
                     {"dev_ctc", loss},
                     {"best_dev_ctc", state_.best_dev_loss},
                     {"best_step", state_.best_step}});
  M2DS2_VLOG(1) << TrainModeName(mode_) << " step " << state_.step << " dev ctc " << loss;
  return loss;
}

void Trainer::Run(const std::string &out_dir) {
  auto checkpoint = [&] {
    if (!out_dir.empty()) Save(out_dir + "/last.ckpt");
  };
  while (!Done()) {
    Step();
    const bool at_eval = state_.step % cfg_.eval_every == 0;
    const bool at_end = state_.step >= MaxSteps();
    if (mode_ != TrainMode::kCptPretrain && (at_eval || at_end)) Evaluate();
    if (at_eval || at_end || state_.stopped) checkpoint();
  }
}

void Trainer::Save(const std::string &path) const {
  acoustic::Checkpoint ck;
  acoustic::StoreModel(model_, &ck);
  adam_.Store(&ck, model_.params());
  ck.meta["train_state"] = {{"mode", TrainModeName(mode_)},
                            {"seed", cfg_.seed},
                            {"step", state_.step},
                            {"best_dev_loss", state_.best_dev_loss},
                            {"best_step", state_.best_step},
                            {"evals_since_improvement", state_.evals_since_improvement},
                            {"num_evals", state_.num_evals},
                            {"has_best", state_.has_best},
                            {"stopped", state_.stopped}};
  ck.meta["train_config"] = ConfigToMap(cfg_, model_.config());
  if (best_params_)
    for (size_t i = 0; i < best_params_->size(); ++i)
      ck.tensors.emplace_back("best/" + (*best_params_)[i].name, (*best_params_)[i].value);
  acoustic::WriteCheckpoint(ck, path);
}

void Trainer::Restore(const std::string &path) {
  acoustic::Checkpoint ck = acoustic::ReadCheckpoint(path);
  if (!ck.meta.contains("train_state")) throw DataError(path + " holds no training state");
  const json &s = ck.meta["train_state"];
  if (s.at("mode").get<std::string>() != TrainModeName(mode_))
    throw ConfigError(path + " was written by " + s.at("mode").get<std::string>() + " training");
  if (s.at("seed").get<uint64_t>() != cfg_.seed)
    throw ConfigError(path + " was written with a different seed");
  Wav2VecModel restored = acoustic::LoadModel(ck);
  if (json(restored.config()) != json(model_.config()))
    throw ConfigError(path + " holds a different model configuration");
  model_ = std::move(restored);
  adam_ = AdamW(model_.params(), cfg_.adam);
  adam_.Restore(ck, model_.params());
  state_.step = s.at("step").get<long long>();
  state_.best_dev_loss = s.at("best_dev_loss").get<double>();
  state_.best_step = s.at("best_step").get<long long>();
  state_.evals_since_improvement = s.at("evals_since_improvement").get<int>();
  state_.num_evals = s.at("num_evals").get<int>();
  state_.has_best = s.at("has_best").get<bool>();
  state_.stopped = s.at("stopped").get<bool>();
  best_params_.reset();
  if (state_.has_best) {
    acoustic::ParameterSet best = model_.params();
    for (size_t i = 0; i < best.size(); ++i) {
      const Matrix *m = ck.Find("best/" + best[i].name);
      if (!m) throw DataError(path + " lacks best parameter " + best[i].name);
      best[i].value = *m;
    }
    best_params_ = std::move(best);
  }
}

corpus::Dataset PslGenerate(const Wav2VecModel &model, const corpus::Dataset &target,
                            const decoder::CharVocab &vocab) {
  std::vector<Matrix> latents(target.size());
  ParallelFor(target.size(), [&](size_t i) { latents[i] = model.Latents(target.inputs[i]); });
  std::vector<std::string> silver = GreedyTranscripts(model, latents, vocab);
  corpus::Dataset out;
  out.manifest = corpus::Manifest(target.manifest.split());
  for (size_t i = 0; i < target.size(); ++i) {
    if (silver[i].empty()) continue;
    corpus::Utterance u = target.manifest[i];
    u.transcript = silver[i];
    out.manifest.Add(std::move(u));
    out.inputs.push_back(target.inputs[i]);
  }
  if (out.size() < target.size())
    M2DS2_LOG << "pseudo-labeling dropped " << target.size() - out.size() << " empty decodes";
  return out;
}

FitResult Fit(TrainMode mode, const FitData &data, const TrainConfig &cfg, const Wav2VecModel &init,
              const decoder::CharVocab &vocab, const std::string &out_dir, bool resume) {
  const std::string name(TrainModeName(mode));
  auto need = [&](const corpus::Dataset *d, const char *what) -> const corpus::Dataset & {
    if (!d || d->size() == 0) throw ConfigError(name + " training needs " + what);
    return *d;
  };
  PreparedSet labeled, unlabeled, dev;
  switch (mode) {
    case TrainMode::kSourceOnly:
    case TrainMode::kCptFinetune:
      labeled = Prepare(init, need(data.source_train, "labeled source data"), vocab, true);
      break;
    case TrainMode::kM2ds2:
      labeled = Prepare(init, need(data.source_train, "labeled source data"), vocab, true);
      unlabeled = Prepare(init, need(data.target_train, "target audio"), vocab, false);
      break;
    case TrainMode::kCptPretrain:
      unlabeled = Prepare(init, need(data.target_train, "target audio"), vocab, false);
      break;
    case TrainMode::kPseudoLabel:
      labeled = Prepare(init, need(data.target_train, "silver-labeled target data"), vocab, true);
      break;
  }
  if (mode != TrainMode::kCptPretrain)
    dev = Prepare(init, need(data.source_dev, "a labeled source dev set"), vocab, true);

  FitResult result;
  Trainer t(mode, cfg, init, std::move(labeled), std::move(unlabeled), std::move(dev));
  t.set_log(&result.log);
  const std::string last = out_dir.empty() ? "" : out_dir + "/last.ckpt";
  const std::string log_path = out_dir.empty() ? "" : out_dir + "/train.log.jsonl";
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    t.set_dump_path(out_dir + "/numeric-dump.json");
  }
  if (resume && !last.empty() && std::filesystem::exists(last)) {
    t.Restore(last);
    if (std::filesystem::exists(log_path))
      for (const std::string &line : ReadLines(log_path)) {
        json rec = json::parse(line);
        if (rec.at("step").get<long long>() <= t.state().step) result.log.push_back(rec);
      }
    M2DS2_LOG << "resuming " << name << " training at step " << t.state().step;
  }
  try {
    t.Run(out_dir);
  } catch (...) {
    if (!log_path.empty()) {
      std::vector<std::string> lines;
      for (const json &r : result.log) lines.push_back(r.dump());
      WriteLines(log_path, lines);
    }
    throw;
  }
  result.model = t.BestModel();
  result.state = t.state();
  if (!out_dir.empty()) {
    std::vector<std::string> lines;
    for (const json &r : result.log) lines.push_back(r.dump());
    WriteLines(log_path, lines);
    acoustic::Checkpoint ck;
    acoustic::StoreModel(result.model, &ck);
    ck.meta["train_state"] = {{"mode", name},
                              {"steps", result.state.step},
                              {"best_step", result.state.best_step},
                              {"early_stopped", result.state.stopped}};
    if (result.state.has_best) ck.meta["train_state"]["best_dev_ctc"] = result.state.best_dev_loss;
    acoustic::WriteCheckpoint(ck, out_dir + "/best.ckpt");
  }
  M2DS2_LOG << name << " training finished after " << result.state.step << " steps"
            << (result.state.stopped ? " (early stop)" : "");
  return result;
}

}  // namespace trainer
}  // namespace m2ds2
