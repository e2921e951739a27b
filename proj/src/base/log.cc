// base/log.cc

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

#include "m2ds2/base/log.h"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <mutex>

namespace m2ds2 {

namespace {

int ReadVerboseFromEnv() {
  const char *env = std::getenv("M2DS2_VERBOSE");
  if (env == nullptr || *env == '\0') return 0;
  return std::atoi(env);
}

std::atomic<int> &VerboseLevel() {
  static std::atomic<int> level(ReadVerboseFromEnv());
  return level;
}

std::mutex &LogMutex() {
  static std::mutex m;
  return m;
}

}  // namespace

int GetVerboseLevel() { return VerboseLevel().load(); }

void SetVerboseLevel(int level) { VerboseLevel().store(level); }

LogMessage::LogMessage(const char *kind, const char *file, int line) {
  const char *base = std::strrchr(file, '/');
  ss_ << kind << " (" << (base ? base + 1 : file) << ":" << line << ") ";
}

LogMessage::~LogMessage() {
  std::lock_guard<std::mutex> lock(LogMutex());
  std::cerr << ss_.str() << '\n';
}

}  // namespace m2ds2
