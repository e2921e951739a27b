// trainer/lr-schedule.cc

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

#include "m2ds2/trainer/lr-schedule.h"

#include <cmath>
#include <string>

#include "m2ds2/base/error.h"

namespace m2ds2 {
namespace trainer {

long long WarmupSteps(long long max_steps, double warmup_fraction) {
  return std::llround(warmup_fraction * static_cast<double>(max_steps));
}

double LrAt(long long step, long long max_steps, double peak_lr, double warmup_fraction) {
  if (max_steps <= 0) throw ConfigError("max_steps must be positive");
  if (step < 0 || step > max_steps)
    throw ConfigError("step " + std::to_string(step) + " outside [0, " + std::to_string(max_steps) + "]");
  long long warm = WarmupSteps(max_steps, warmup_fraction);
  if (step < warm) return peak_lr * static_cast<double>(step) / static_cast<double>(warm);
  if (warm == max_steps) return peak_lr;
  return peak_lr * static_cast<double>(max_steps - step) / static_cast<double>(max_steps - warm);
}

}  // namespace trainer
}  // namespace m2ds2
