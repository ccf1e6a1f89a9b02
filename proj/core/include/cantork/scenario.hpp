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

#pragma once

#include <string>

#include <json.hpp>

#include "cantork/crossed.hpp"

namespace cantork::cli {

struct RunFlags {
  bool strict = false;     // exit 2 on any "unknown" verdict
  bool parallel = false;   // concurrent commands (pure; falls back to
                           // sequential when commands bind names)
  int budget_level = cocycle::kDefaultMaxLevel;
  crossed::FlipMode flip = crossed::FlipMode::Auto;
};

struct Report {
  nlohmann::ordered_json doc;
  int exit_code = 0;
};

// Parses and runs a scenario document (JSON text). Reports are
// deterministic: identical scenario and budgets give byte-identical output.
Report run_scenario_text(const std::string& text, const RunFlags& flags = {});
Report run_scenario_file(const std::string& path, const RunFlags& flags = {});

// "json" or "table".
std::string emit_report(const Report& report, const std::string& format);

// Name -> scenario text for the scenarios bundled into the library.
const std::vector<std::pair<std::string, std::string>>& bundled_scenarios();

}  // namespace cantork::cli
