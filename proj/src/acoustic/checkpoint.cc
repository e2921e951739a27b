// acoustic/checkpoint.cc

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

#include "m2ds2/acoustic/checkpoint.h"

#include <cstring>
#include <fstream>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace acoustic {

namespace {

const char kMagic[8] = {'M', '2', 'C', 'K', 'P', 'T', '0', '1'};

template <typename T>
void Put(std::ostream &os, const T &v) {
  os.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

template <typename T>
T Get(std::istream &is, const std::string &path) {
  T v;
  is.read(reinterpret_cast<char *>(&v), sizeof(T));
  if (!is) throw DataError(path + ": truncated checkpoint");
  return v;
}

std::string GetString(std::istream &is, uint64_t n, const std::string &path) {
  if (n > (1ull << 32)) throw DataError(path + ": implausible string length");
  std::string s(n, '\0');
  is.read(s.data(), static_cast<std::streamsize>(n));
  if (!is) throw DataError(path + ": truncated checkpoint");
  return s;
}

}  // namespace

const Matrix *Checkpoint::Find(const std::string &name) const {
  for (const auto &t : tensors)
    if (t.first == name) return &t.second;
  return nullptr;
}

void WriteCheckpoint(const Checkpoint &ckpt, const std::string &path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot write " + path);
  os.write(kMagic, sizeof(kMagic));
  Put<uint32_t>(os, kCheckpointVersion);
  std::string meta = ckpt.meta.dump();
  Put<uint64_t>(os, meta.size());
  os.write(meta.data(), static_cast<std::streamsize>(meta.size()));
  Put<uint64_t>(os, ckpt.tensors.size());
  for (const auto &[name, m] : ckpt.tensors) {
    Put<uint64_t>(os, name.size());
    os.write(name.data(), static_cast<std::streamsize>(name.size()));
    Put<int64_t>(os, m.rows());
    Put<int64_t>(os, m.cols());
    // Row-major on disk, independent of Eigen's storage order.
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c) Put<double>(os, m(r, c));
  }
  if (!os) throw DataError("write failed: " + path);
}

Checkpoint ReadCheckpoint(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open " + path);
  char magic[sizeof(kMagic)];
  is.read(magic, sizeof(magic));
  if (!is || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0)
    throw DataError(path + ": not a checkpoint");
  uint32_t version = Get<uint32_t>(is, path);
  if (version != kCheckpointVersion)
    throw DataError(path + ": unsupported checkpoint version " + std::to_string(version));
  Checkpoint ckpt;
  try {
    ckpt.meta = nlohmann::json::parse(GetString(is, Get<uint64_t>(is, path), path));
  } catch (const nlohmann::json::exception &e) {
    throw DataError(path + ": bad metadata: " + e.what());
  }
  uint64_t n = Get<uint64_t>(is, path);
  for (uint64_t i = 0; i < n; ++i) {
    std::string name = GetString(is, Get<uint64_t>(is, path), path);
    int64_t rows = Get<int64_t>(is, path), cols = Get<int64_t>(is, path);
    if (rows < 0 || cols < 0 || rows * cols > (1ll << 31)) throw DataError(path + ": bad shape");
    Matrix m(rows, cols);
    for (int64_t r = 0; r < rows; ++r)
      for (int64_t c = 0; c < cols; ++c) m(r, c) = Get<double>(is, path);
    ckpt.tensors.emplace_back(std::move(name), std::move(m));
  }
  return ckpt;
}

void StoreModel(const Wav2VecModel &model, Checkpoint *ckpt) {
  ckpt->meta["model"] = model.config();
  const ParameterSet &ps = model.params();
  for (size_t i = 0; i < ps.size(); ++i) ckpt->tensors.emplace_back("param/" + ps[i].name, ps[i].value);
}

Wav2VecModel LoadModel(const Checkpoint &ckpt) {
  if (!ckpt.meta.contains("model")) throw DataError("checkpoint has no model config");
  ModelConfig cfg;
  try {
    cfg = ckpt.meta.at("model").get<ModelConfig>();
  } catch (const nlohmann::json::exception &e) {
    throw DataError(std::string("bad model config: ") + e.what());
  }
  ParameterSet ps;
  for (const auto &[name, m] : ckpt.tensors)
    if (name.rfind("param/", 0) == 0) ps.Add(name.substr(6), m);
  return Wav2VecModel(cfg, std::move(ps));
}

}  // namespace acoustic
}  // namespace m2ds2
