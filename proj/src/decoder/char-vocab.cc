// decoder/char-vocab.cc

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

#include "m2ds2/decoder/char-vocab.h"

#include <algorithm>
#include <set>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace decoder {

namespace {
const char *const kReserved[] = {"<blk>", "|", "<unk>"};
}

std::vector<std::string> SplitUtf8(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xe ? 3 : (c >> 3) == 0x1e ? 4 : 0;
    if (len == 0 || i + len > s.size()) throw DataError("malformed UTF-8");
    for (size_t k = 1; k < len; ++k)
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) throw DataError("malformed UTF-8");
    out.emplace_back(s.substr(i, len));
    i += len;
  }
  return out;
}

CharVocab::CharVocab() {
  for (const char *r : kReserved) AddSymbol(r);
}

void CharVocab::AddSymbol(const std::string &s) {
  if (index_.count(s)) throw DataError("duplicate vocabulary symbol: " + s);
  index_.emplace(s, static_cast<int>(symbols_.size()));
  symbols_.push_back(s);
}

CharVocab CharVocab::FromTranscripts(const std::vector<std::string> &lines) {
  // UTF-8 byte order equals code-point order.
  std::set<std::string> chars;
  for (const auto &line : lines)
    for (const auto &w : SplitTokens(line))
      for (auto &ch : SplitUtf8(w)) chars.insert(std::move(ch));
  CharVocab v;
  for (const auto &ch : chars)
    if (!v.index_.count(ch)) v.AddSymbol(ch);
  return v;
}

CharVocab CharVocab::Read(const std::string &path) {
  auto lines = ReadLines(path);
  if (lines.size() < 3) throw DataError(path + ": vocabulary is missing reserved symbols");
  for (int k = 0; k < 3; ++k)
    if (lines[k] != kReserved[k]) throw DataError(path + ": reserved symbols out of order");
  CharVocab v;
  for (size_t i = 3; i < lines.size(); ++i) v.AddSymbol(lines[i]);
  return v;
}

void CharVocab::Write(const std::string &path) const { WriteLines(path, symbols_); }

int CharVocab::Label(const std::string &symbol) const {
  auto it = index_.find(symbol);
  return it == index_.end() ? kUnknown : it->second;
}

std::vector<int> CharVocab::Encode(std::string_view text) const {
  std::vector<int> labels;
  for (const auto &w : SplitTokens(text)) {
    if (!labels.empty()) labels.push_back(kDelimiter);
    for (const auto &ch : SplitUtf8(w)) labels.push_back(Label(ch));
  }
  return labels;
}

std::string CharVocab::Decode(const std::vector<int> &labels) const {
  std::string out;
  bool pending_space = false;
  for (int l : labels) {
    if (l == kBlank) continue;
    if (l == kDelimiter) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out += Symbol(l);
  }
  return out;
}

}  // namespace decoder
}  // namespace m2ds2
