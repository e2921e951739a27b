// corpus/utterance.cc

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

#include "m2ds2/corpus/utterance.h"

#include <cmath>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace corpus {

std::string_view DomainName(Domain d) {
  return d == Domain::kSource ? "source" : "target";
}

Domain ParseDomain(std::string_view s) {
  if (s == "source") return Domain::kSource;
  if (s == "target") return Domain::kTarget;
  throw DataError("unknown domain '" + std::string(s) + "'");
}

std::string_view GenderName(Gender g) { return g == Gender::kMale ? "m" : "f"; }

Gender ParseGender(std::string_view s) {
  if (s == "m" || s == "male") return Gender::kMale;
  if (s == "f" || s == "female") return Gender::kFemale;
  throw DataError("unknown gender '" + std::string(s) + "'");
}

std::string_view SplitName(Split s) {
  switch (s) {
    case Split::kTrain: return "train";
    case Split::kDev: return "dev";
    case Split::kTest: return "test";
  }
  return "train";
}

Split ParseSplit(std::string_view s) {
  if (s == "train") return Split::kTrain;
  if (s == "dev") return Split::kDev;
  if (s == "test") return Split::kTest;
  throw ConfigError("unknown split '" + std::string(s) + "'");
}

void Utterance::Check() const {
  if (id.empty()) throw DataError("utterance with empty id");
  if (start_time.has_value() != end_time.has_value())
    throw DataError("utterance " + id + ": start and end must both be set");
  if (HasSegment()) {
    if (!(*end_time > *start_time))
      throw DataError("utterance " + id + ": end_time <= start_time");
    if (std::fabs(duration - (*end_time - *start_time)) > 1e-3)
      throw DataError("utterance " + id + ": duration does not match segment");
  }
  if (!(duration >= 0.0) || !std::isfinite(duration))
    throw DataError("utterance " + id + ": invalid duration");
  if (domain == Domain::kSource && !transcript)
    throw DataError("source utterance " + id + " has no transcript");
}

}  // namespace corpus
}  // namespace m2ds2
