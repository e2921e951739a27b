// corpus/text-normalizer.cc

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

#include "m2ds2/corpus/text-normalizer.h"

#include <unicode/normalizer2.h>
#include <unicode/uchar.h>
#include <unicode/locid.h>
#include <unicode/unistr.h>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace corpus {

namespace {

const icu::Normalizer2 &Nfd() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFDInstance(status);
  if (U_FAILURE(status)) throw DataError("ICU NFD normalizer unavailable");
  return *n;
}

const icu::Normalizer2 &Nfc() {
  UErrorCode status = U_ZERO_ERROR;
  const icu::Normalizer2 *n = icu::Normalizer2::getNFCInstance(status);
  if (U_FAILURE(status)) throw DataError("ICU NFC normalizer unavailable");
  return *n;
}

bool IsCombiningMark(UChar32 c) {
  int8_t type = u_charType(c);
  return type == U_NON_SPACING_MARK || type == U_ENCLOSING_MARK ||
         type == U_COMBINING_SPACING_MARK;
}

}  // namespace

std::string NormalizeText(std::string_view raw) {
  icu::UnicodeString text = icu::UnicodeString::fromUTF8(
      icu::StringPiece(raw.data(), static_cast<int32_t>(raw.size())));
  // Root-locale full case mapping; handles the contextual final sigma.
  text.toLower(icu::Locale::getRoot());

  UErrorCode status = U_ZERO_ERROR;
  icu::UnicodeString decomposed = Nfd().normalize(text, status);
  if (U_FAILURE(status)) throw DataError("NFD normalization failed");

  icu::UnicodeString cleaned;
  bool pending_space = false;
  for (int32_t i = 0; i < decomposed.length();) {
    UChar32 c = decomposed.char32At(i);
    i += U16_LENGTH(c);
    if (IsCombiningMark(c) || u_ispunct(c)) continue;
    if (u_isUWhiteSpace(c) || u_iscntrl(c)) {
      pending_space = cleaned.length() > 0;
      continue;
    }
    if (pending_space) {
      cleaned.append(static_cast<UChar>(' '));
      pending_space = false;
    }
    cleaned.append(c);
  }

  icu::UnicodeString composed = Nfc().normalize(cleaned, status);
  if (U_FAILURE(status)) throw DataError("NFC normalization failed");
  std::string out;
  composed.toUTF8String(out);
  return out;
}

}  // namespace corpus
}  // namespace m2ds2
