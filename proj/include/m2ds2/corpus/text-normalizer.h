// corpus/text-normalizer.h

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

#ifndef M2DS2_CORPUS_TEXT_NORMALIZER_H_
#define M2DS2_CORPUS_TEXT_NORMALIZER_H_

#include <string>
#include <string_view>

namespace m2ds2 {
namespace corpus {

// Lowercases, strips accents (canonical decomposition, then removal of
// combining marks), deletes punctuation and collapses whitespace to single
// spaces.  Input and output are UTF-8.  Idempotent.
//
//   NormalizeText("Καλημέρα,  Κόσμε!") == "καλημερα κοσμε"
std::string NormalizeText(std::string_view raw);

}  // namespace corpus
}  // namespace m2ds2

#endif  // M2DS2_CORPUS_TEXT_NORMALIZER_H_
