// base/log.h

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

#ifndef M2DS2_BASE_LOG_H_
#define M2DS2_BASE_LOG_H_

#include <sstream>
#include <string>

namespace m2ds2 {

// Verbosity is read once from the M2DS2_VERBOSE environment variable
// (default 0).  Warnings are always printed; LOG messages need level >= 0,
// VLOG(n) needs level >= n.
int GetVerboseLevel();
void SetVerboseLevel(int level);

class LogMessage {
 public:
  LogMessage(const char *kind, const char *file, int line);
  ~LogMessage();
  std::ostream &stream() { return ss_; }

 private:
  std::ostringstream ss_;
};

}  // namespace m2ds2

#define M2DS2_LOG                            \
  if (::m2ds2::GetVerboseLevel() < 0) {      \
  } else                                     \
    ::m2ds2::LogMessage("LOG", __FILE__, __LINE__).stream()
#define M2DS2_WARN ::m2ds2::LogMessage("WARNING", __FILE__, __LINE__).stream()
#define M2DS2_VLOG(v)                        \
  if (::m2ds2::GetVerboseLevel() < (v)) {    \
  } else                                     \
    ::m2ds2::LogMessage("VLOG", __FILE__, __LINE__).stream()

#endif  // M2DS2_BASE_LOG_H_
