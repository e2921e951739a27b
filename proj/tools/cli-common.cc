// tools/cli-common.cc

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

#include "cli-common.h"

#include <fstream>

#include "m2ds2/base/error.h"
#include "m2ds2/base/text-utils.h"

namespace m2ds2 {
namespace cli {

void WriteSnapshot(const CLI::App &sub, const std::string &path) {
  std::ofstream os(path);
  if (!os) throw DataError("cannot write " + path);
  os << "# m2ds2 " << sub.get_name() << "\n" << sub.config_to_str(true, false);
}

std::vector<std::string> ReadTextLines(const std::string &path) { return ReadLines(path); }

void WriteJsonLines(const std::vector<nlohmann::json> &records, const std::string &path) {
  std::vector<std::string> lines;
  lines.reserve(records.size());
  for (const auto &r : records) lines.push_back(r.dump());
  WriteLines(path, lines);
}

std::vector<nlohmann::json> ReadJsonLines(const std::string &path) {
  std::vector<nlohmann::json> out;
  size_t lineno = 0;
  for (const std::string &line : ReadLines(path)) {
    ++lineno;
    if (TrimWhitespace(line).empty()) continue;
    try {
      out.push_back(nlohmann::json::parse(line));
    } catch (const nlohmann::json::exception &e) {
      throw DataError(path + ":" + std::to_string(lineno) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace cli
}  // namespace m2ds2
