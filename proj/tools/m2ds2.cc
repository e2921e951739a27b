// tools/m2ds2.cc

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

// Command-line front end.  Each subcommand maps onto one library pipeline;
// see `m2ds2 <subcommand> --help`.

#include <iostream>

#include "cli-common.h"
#include "m2ds2/base/error.h"
#include "m2ds2/base/log.h"
#include "m2ds2/base/parallel.h"

int main(int argc, char **argv) {
  using namespace m2ds2;
  CLI::App app{"m2ds2: domain adaptation toolkit for CTC speech recognizers"};
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);
  int verbose = -1;
  app.add_option("-v,--verbose", verbose,
                 "Log verbosity; overrides the M2DS2_VERBOSE environment variable");

  std::vector<cli::Runner> runners;
  cli::RegisterTextCommands(app, &runners);
  cli::RegisterAlignCommand(app, &runners);
  cli::RegisterTrainCommands(app, &runners);
  cli::RegisterEvalCommands(app, &runners);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitUsage;
  }
  try {
    if (workers > 0) SetNumWorkers(workers);
    if (verbose >= 0) SetVerboseLevel(verbose);
    CLI::App *chosen = app.get_subcommands().front();
    for (const auto &r : runners)
      if (r.sub == chosen) r.run();
  } catch (const ConfigError &e) {
    std::cerr << "ERROR (config): " << e.what() << "\n";
    return kExitConfig;
  } catch (const DataError &e) {
    std::cerr << "ERROR (data): " << e.what() << "\n";
    return kExitData;
  } catch (const NumericError &e) {
    std::cerr << "ERROR (numeric): " << e.what() << "\n";
    return kExitNumeric;
  } catch (const std::exception &e) {
    std::cerr << "ERROR: " << e.what() << "\n";
    return kExitData;
  }
  return kExitOk;
}
