// ngram/arpa-io.h

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

#ifndef M2DS2_NGRAM_ARPA_IO_H_
#define M2DS2_NGRAM_ARPA_IO_H_

#include <iosfwd>
#include <string>

#include "m2ds2/ngram/ngram-model.h"

namespace m2ds2 {
namespace ngram {

// ARPA text format.  Fields within an entry are tab separated
// ("logprob<TAB>w1 w2<TAB>backoff"); values are written in the shortest
// decimal form that reads back to the identical double, so a
// write/read/write cycle is byte-identical.  Entries are sorted by their
// word strings.  Backoff fields are omitted when zero.
void WriteArpa(const NGramModel &m, std::ostream &os);
void WriteArpa(const NGramModel &m, const std::string &path);
std::string ArpaToString(const NGramModel &m);

// Accepts tab- or space-separated entries; throws DataError on malformed
// input.
NGramModel ReadArpa(std::istream &is);
NGramModel ReadArpa(const std::string &path);

}  // namespace ngram
}  // namespace m2ds2

#endif  // M2DS2_NGRAM_ARPA_IO_H_
