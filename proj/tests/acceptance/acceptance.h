// tests/acceptance/acceptance.h

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

#ifndef M2DS2_TESTS_ACCEPTANCE_ACCEPTANCE_H_
#define M2DS2_TESTS_ACCEPTANCE_ACCEPTANCE_H_

#include <functional>
#include <sstream>
#include <string>
#include <vector>

namespace m2ds2 {
namespace acceptance {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id = 0;
  std::string title;
  std::function<Outcome()> run;
};

void AddOracleCriteria(std::vector<Criterion> *out);    // 1-8
void AddTrainingCriteria(std::vector<Criterion> *out);  // 9-11
void AddPipelineCriteria(std::vector<Criterion> *out);  // 12-13

// Seconds since the first call; used for the runtime limits.
double Elapsed();

// Small formatting helper for the detail strings.
template <typename... Args>
std::string Cat(const Args &...args) {
  std::ostringstream os;
  (os << ... << args);
  return os.str();
}

}  // namespace acceptance
}  // namespace m2ds2

#endif  // M2DS2_TESTS_ACCEPTANCE_ACCEPTANCE_H_
