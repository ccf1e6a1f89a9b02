// Copyright 2026 The cantor-k Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cantork/scenario.hpp"

int main(int argc, char** argv) {
  CLI::App app{"cantor-k: exact invariants of minimal systems on the product "
               "of a Cantor set and the circle"};
  app.require_subcommand(1);

  // run
  std::string scenario_path;
  std::string format = "json";
  std::string output;
  bool strict = false, parallel = false, flip = false;
  int budget_level = 12;
  if (const char* env = std::getenv("CANTORK_BUDGET_LEVEL")) {
    budget_level = std::atoi(env);
    if (budget_level <= 0) budget_level = 12;
  }

  CLI::App* run = app.add_subcommand("run", "run a scenario file");
  run->add_option("scenario", scenario_path,
                  "scenario path or bundled name (see `cantor-k examples`)")
      ->required();
  run->add_flag("--strict", strict, "exit 2 on any 'unknown' verdict");
  run->add_flag("--parallel", parallel, "run independent commands concurrently");
  run->add_option("--budget-level", budget_level,
                  "default search level budget (env CANTORK_BUDGET_LEVEL)");
  run->add_option("--format", format, "report format: json|table")
      ->check(CLI::IsMember({"json", "table"}));
  run->add_option("-o,--output", output, "write the report to a file");
  run->add_flag("--flip", flip,
                "restrict kconj decisions to the flip branch");

  // examples
  CLI::App* examples =
      app.add_subcommand("examples", "list or dump bundled scenarios");
  std::string dump_name;
  examples->add_option("--dump", dump_name, "print the named scenario");

  CLI11_PARSE(app, argc, argv);

  if (examples->parsed()) {
    if (!dump_name.empty()) {
      for (const auto& [name, text] : cantork::cli::bundled_scenarios())
        if (name == dump_name) {
          std::cout << text << "\n";
          return 0;
        }
      std::cerr << "no bundled scenario named '" << dump_name << "'\n";
      return 1;
    }
    for (const auto& [name, text] : cantork::cli::bundled_scenarios())
      std::cout << name << "\n";
    return 0;
  }

  cantork::cli::RunFlags flags;
  flags.strict = strict;
  flags.parallel = parallel;
  flags.budget_level = budget_level;
  flags.flip = flip ? cantork::crossed::FlipMode::FlipOnly
                    : cantork::crossed::FlipMode::Auto;

  cantork::cli::Report report =
      cantork::cli::run_scenario_file(scenario_path, flags);
  std::string doc = cantork::cli::emit_report(report, format);
  if (output.empty()) {
    std::cout << doc;
  } else {
    std::ofstream out(output);
    out << doc;
  }
  return report.exit_code;
}
