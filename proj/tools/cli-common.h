// tools/cli-common.h

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

#ifndef M2DS2_TOOLS_CLI_COMMON_H_
#define M2DS2_TOOLS_CLI_COMMON_H_

#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

namespace m2ds2 {
namespace cli {

// A subcommand registers its options and the body to run once parsing
// succeeded.
struct Runner {
  CLI::App *sub = nullptr;
  std::function<void()> run;
};

void RegisterTextCommands(CLI::App &app, std::vector<Runner> *runners);
void RegisterAlignCommand(CLI::App &app, std::vector<Runner> *runners);
void RegisterTrainCommands(CLI::App &app, std::vector<Runner> *runners);
void RegisterEvalCommands(CLI::App &app, std::vector<Runner> *runners);

// Every option of the parsed subcommand, defaults included, in CLI11's
// config format.  Written once per run for reproducibility.
void WriteSnapshot(const CLI::App &sub, const std::string &path);

std::vector<std::string> ReadTextLines(const std::string &path);
void WriteJsonLines(const std::vector<nlohmann::json> &records, const std::string &path);
std::vector<nlohmann::json> ReadJsonLines(const std::string &path);

}  // namespace cli
}  // namespace m2ds2

#endif  // M2DS2_TOOLS_CLI_COMMON_H_
