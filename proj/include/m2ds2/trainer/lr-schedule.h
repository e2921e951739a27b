// trainer/lr-schedule.h

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

#ifndef M2DS2_TRAINER_LR_SCHEDULE_H_
#define M2DS2_TRAINER_LR_SCHEDULE_H_

namespace m2ds2 {
namespace trainer {

// Linear warmup from 0 to peak over round(warmup_fraction * max_steps)
// steps, then linear decay to 0 at max_steps.  Throws ConfigError for a step
// outside [0, max_steps].
double LrAt(long long step, long long max_steps, double peak_lr, double warmup_fraction);

long long WarmupSteps(long long max_steps, double warmup_fraction);

}  // namespace trainer
}  // namespace m2ds2

#endif  // M2DS2_TRAINER_LR_SCHEDULE_H_
