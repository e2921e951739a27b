// decoder/char-vocab.h

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

#ifndef M2DS2_DECODER_CHAR_VOCAB_H_
#define M2DS2_DECODER_CHAR_VOCAB_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace m2ds2 {
namespace decoder {

// Splits UTF-8 text into code points, each returned as its byte string.
// Throws DataError on malformed input.
std::vector<std::string> SplitUtf8(std::string_view s);

// CTC output alphabet.  Label 0 is the blank, 1 the word delimiter and 2 the
// unknown character; characters follow in code-point order.
class CharVocab {
 public:
  static constexpr int kBlank = 0;
  static constexpr int kDelimiter = 1;
  static constexpr int kUnknown = 2;

  CharVocab();
  static CharVocab FromTranscripts(const std::vector<std::string> &lines);
  // One symbol per line, in label order; the reserved symbols come first.
  static CharVocab Read(const std::string &path);
  void Write(const std::string &path) const;

  int size() const { return static_cast<int>(symbols_.size()); }
  const std::string &Symbol(int label) const { return symbols_.at(label); }
  int Label(const std::string &symbol) const;

  // Words joined by delimiters, no delimiter at either end.
  std::vector<int> Encode(std::string_view text) const;
  // Blanks are dropped, delimiters become single spaces, result is trimmed.
  std::string Decode(const std::vector<int> &labels) const;

 private:
  void AddSymbol(const std::string &s);
  std::vector<std::string> symbols_;
  std::unordered_map<std::string, int> index_;
};

}  // namespace decoder
}  // namespace m2ds2

#endif  // M2DS2_DECODER_CHAR_VOCAB_H_
