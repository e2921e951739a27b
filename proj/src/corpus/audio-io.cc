// corpus/audio-io.cc

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

#include "m2ds2/corpus/audio-io.h"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace corpus {

namespace {

constexpr char kFeatMagic[8] = {'M', '2', 'F', 'E', 'A', 'T', '0', '1'};

uint32_t ReadU32(const unsigned char *p) {
  return p[0] | (p[1] << 8) | (p[2] << 16) | (static_cast<uint32_t>(p[3]) << 24);
}
uint16_t ReadU16(const unsigned char *p) { return p[0] | (p[1] << 8); }

void PutU32(std::ostream &os, uint32_t v) {
  unsigned char b[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                        static_cast<unsigned char>(v >> 16),
                        static_cast<unsigned char>(v >> 24)};
  os.write(reinterpret_cast<char *>(b), 4);
}
void PutU16(std::ostream &os, uint16_t v) {
  unsigned char b[2] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8)};
  os.write(reinterpret_cast<char *>(b), 2);
}

}  // namespace

std::vector<float> ReadWav(const std::string &path, std::optional<double> start,
                           std::optional<double> end) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open " + path);
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(is)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 12 || std::memcmp(bytes.data(), "RIFF", 4) != 0 ||
      std::memcmp(bytes.data() + 8, "WAVE", 4) != 0)
    throw DataError(path + ": not a RIFF/WAVE file");

  size_t pos = 12;
  bool have_fmt = false;
  uint16_t channels = 0, bits = 0, format = 0;
  uint32_t rate = 0;
  const unsigned char *data = nullptr;
  size_t data_size = 0;
  while (pos + 8 <= bytes.size()) {
    const unsigned char *chunk = bytes.data() + pos;
    uint32_t size = ReadU32(chunk + 4);
    size_t body = pos + 8;
    if (body + size > bytes.size()) size = static_cast<uint32_t>(bytes.size() - body);
    if (std::memcmp(chunk, "fmt ", 4) == 0 && size >= 16) {
      format = ReadU16(bytes.data() + body);
      channels = ReadU16(bytes.data() + body + 2);
      rate = ReadU32(bytes.data() + body + 4);
      bits = ReadU16(bytes.data() + body + 14);
      have_fmt = true;
    } else if (std::memcmp(chunk, "data", 4) == 0) {
      data = bytes.data() + body;
      data_size = size;
    }
    pos = body + size + (size & 1);
  }
  if (!have_fmt || data == nullptr) throw DataError(path + ": missing fmt or data chunk");
  if (format != 1 || bits != 16)
    throw DataError(path + ": only 16-bit PCM is supported");
  if (channels != 1 || rate != kSampleRate)
    throw DataError(path + ": expected mono 16 kHz audio");

  size_t n = data_size / 2;
  size_t first = 0, last = n;
  if (start) first = std::min(n, static_cast<size_t>(std::llround(*start * kSampleRate)));
  if (end) last = std::min(n, static_cast<size_t>(std::llround(*end * kSampleRate)));
  if (last < first) last = first;
  std::vector<float> samples(last - first);
  for (size_t i = first; i < last; ++i) {
    int16_t s = static_cast<int16_t>(ReadU16(data + 2 * i));
    samples[i - first] = static_cast<float>(s) / 32768.0f;
  }
  return samples;
}

void WriteWav(const std::string &path, const std::vector<float> &samples) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open " + path + " for writing");
  uint32_t data_size = static_cast<uint32_t>(samples.size() * 2);
  os.write("RIFF", 4);
  PutU32(os, 36 + data_size);
  os.write("WAVEfmt ", 8);
  PutU32(os, 16);
  PutU16(os, 1);
  PutU16(os, 1);
  PutU32(os, kSampleRate);
  PutU32(os, kSampleRate * 2);
  PutU16(os, 2);
  PutU16(os, 16);
  os.write("data", 4);
  PutU32(os, data_size);
  for (float f : samples) {
    float c = std::clamp(f, -1.0f, 32767.0f / 32768.0f);
    PutU16(os, static_cast<uint16_t>(static_cast<int16_t>(std::lround(c * 32768.0f))));
  }
  if (!os) throw DataError("write failed for " + path);
}

Eigen::MatrixXd ReadFeatureMatrix(const std::string &path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw DataError("cannot open " + path);
  char magic[8];
  int64_t rows = 0, cols = 0;
  is.read(magic, 8);
  is.read(reinterpret_cast<char *>(&rows), 8);
  is.read(reinterpret_cast<char *>(&cols), 8);
  if (!is || std::memcmp(magic, kFeatMagic, 8) != 0 || rows < 0 || cols < 0)
    throw DataError(path + ": not a feature matrix file");
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> m(rows, cols);
  is.read(reinterpret_cast<char *>(m.data()),
          static_cast<std::streamsize>(rows * cols * sizeof(double)));
  if (!is) throw DataError(path + ": truncated feature matrix");
  return m;
}

void WriteFeatureMatrix(const std::string &path, const Eigen::MatrixXd &m) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw DataError("cannot open " + path + " for writing");
  int64_t rows = m.rows(), cols = m.cols();
  os.write(kFeatMagic, 8);
  os.write(reinterpret_cast<const char *>(&rows), 8);
  os.write(reinterpret_cast<const char *>(&cols), 8);
  Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor> rm = m;
  os.write(reinterpret_cast<const char *>(rm.data()),
           static_cast<std::streamsize>(rows * cols * sizeof(double)));
  if (!os) throw DataError("write failed for " + path);
}

bool IsFeaturePath(const std::string &path) {
  return path.size() >= 6 && path.compare(path.size() - 6, 6, ".feats") == 0;
}

}  // namespace corpus
}  // namespace m2ds2
