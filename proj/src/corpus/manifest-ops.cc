// corpus/manifest-ops.cc

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

#include "m2ds2/corpus/manifest-ops.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "m2ds2/base/error.h"
#include "m2ds2/base/random.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace corpus {

Manifest FilterByDuration(const Manifest &m, double max_seconds) {
  if (!(max_seconds > 0.0)) throw ConfigError("max_seconds must be positive");
  Manifest out(m.split());
  for (const auto &u : m.entries())
    if (u.duration <= max_seconds) out.Add(u);
  return out;
}

Manifest SubsetFraction(const Manifest &m, double fraction, uint64_t seed) {
  if (!(fraction > 0.0 && fraction <= 1.0))
    throw ConfigError("subset fraction must be in (0, 1]");
  if (fraction == 1.0) return m;

  std::vector<size_t> order(m.size());
  std::iota(order.begin(), order.end(), 0);
  Rng rng(DeriveSeed(seed, {0x5b5e7}));
  Shuffle(order.begin(), order.end(), rng);

  const double budget = fraction * m.TotalDuration();
  const double slack = 1e-9 * m.TotalDuration();
  std::vector<char> keep(m.size(), 0);
  double total = 0.0;
  for (size_t idx : order) {
    double d = m[idx].duration;
    if (total + d <= budget + slack) {
      keep[idx] = 1;
      total += d;
    }
    if (total >= budget) break;
  }
  Manifest out(m.split());
  for (size_t i = 0; i < m.size(); ++i)
    if (keep[i]) out.Add(m[i]);
  return out;
}

Gender InferGender(std::string_view speaker_name) {
  std::string name(TrimWhitespace(speaker_name));
  if (name.empty()) throw DataError("cannot infer gender of an empty name");
  std::transform(name.begin(), name.end(), name.begin(), [](unsigned char c) {
    return static_cast<char>(std::tolower(c));
  });
  char last = name.back();
  if (last == 'a' || last == 'h' || last == 'w') return Gender::kFemale;
  if (name.size() >= 2 && name.compare(name.size() - 2, 2, "is") == 0)
    return Gender::kFemale;
  return Gender::kMale;
}

}  // namespace corpus
}  // namespace m2ds2
