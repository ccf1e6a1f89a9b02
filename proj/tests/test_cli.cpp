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

#include <doctest.h>

#include "cantork/scenario.hpp"

using namespace cantork;
using namespace cantork::cli;
using json = nlohmann::ordered_json;

namespace {

const char* kSmall = R"({
  "schema": "cantor-k/1",
  "generators": [{"name": "gold", "kind": "golden"}],
  "systems": [{"name": "X", "odometer": {"mults": [3, 9], "extend": "x3"}}],
  "cocycles": [
    {"name": "xi", "system": "X", "level": 0, "values": ["gold"]},
    {"name": "third", "system": "X", "level": 0, "values": ["1/3"]}
  ],
  "commands": [
    {"op": "minimality_test", "cocycle": "xi"},
    {"op": "coboundary_test", "cocycle": "third"},
    {"op": "k0_class", "system": "X", "level": 1, "values": [1, 0, 0]},
    {"op": "sym_sign", "value": "gold - 3/5"}
  ]
})";

}  // namespace

TEST_CASE("run_scenario: basic commands and witnesses") {
  Report r = run_scenario_text(kSmall);
  REQUIRE(r.exit_code == 0);
  const json& cmds = r.doc.at("commands");
  REQUIRE(cmds.size() == 4);
  CHECK(cmds[0].at("verdict") == "yes");
  CHECK(cmds[1].at("verdict") == "yes");
  CHECK(cmds[1].at("witness").at("reverified") == true);
  CHECK(cmds[2].at("value") == "1/3");
  CHECK(cmds[3].at("sign") == 1);
}

TEST_CASE("reports are byte-identical across runs") {
  RunFlags flags;
  std::string a = emit_report(run_scenario_text(kSmall, flags), "json");
  std::string b = emit_report(run_scenario_text(kSmall, flags), "json");
  CHECK(a == b);
  // Parallel evaluation preserves command order and bytes.
  flags.parallel = true;
  std::string c = emit_report(run_scenario_text(kSmall, flags), "json");
  CHECK(a == c);
}

TEST_CASE("json report round-trips to an equal document") {
  Report r = run_scenario_text(kSmall);
  std::string text = emit_report(r, "json");
  json parsed = json::parse(text);
  CHECK(parsed == r.doc);
}

TEST_CASE("table format has one row per command") {
  Report r = run_scenario_text(kSmall);
  std::string table = emit_report(r, "table");
  int rows = 0;
  for (char ch : table)
    if (ch == '\n') ++rows;
  CHECK(rows == 4);
  CHECK_THROWS_AS(emit_report(r, "csv"), PreconditionError);
}

TEST_CASE("empty command list gives an empty report, exit 0") {
  Report r = run_scenario_text(R"({"schema": "cantor-k/1", "commands": []})");
  CHECK(r.exit_code == 0);
  CHECK(r.doc.at("commands").empty());
}

TEST_CASE("strict mode: unknown verdicts exit 2") {
  // 1/81 over a 3^inf odometer needs level 4; a budget of 3 leaves the
  // witness out of reach.
  const char* scn = R"({
    "schema": "cantor-k/1",
    "systems": [{"name": "X", "odometer": {"mults": [3, 9], "extend": "x3"}}],
    "cocycles": [{"name": "u", "system": "X", "level": 0, "values": ["1/81"]}],
    "commands": [{"op": "coboundary_test", "cocycle": "u", "max_level": 3}]
  })";
  Report loose = run_scenario_text(scn);
  CHECK(loose.exit_code == 0);
  CHECK(loose.doc.at("commands")[0].at("verdict") == "unknown");
  RunFlags strict;
  strict.strict = true;
  CHECK(run_scenario_text(scn, strict).exit_code == 2);

  // A reason field accompanies the unknown verdict.
  CHECK(!loose.doc.at("commands")[0]
             .at("reason")
             .get<std::string>()
             .empty());
}

TEST_CASE("errors are reported with exit 1") {
  Report bad = run_scenario_text("{ not json");
  CHECK(bad.exit_code == 1);
  CHECK(bad.doc.contains("error"));

  Report schema = run_scenario_text(R"({"schema": "other"})");
  CHECK(schema.exit_code == 1);

  const char* bad_ref = R"({
    "schema": "cantor-k/1",
    "commands": [{"op": "minimality_test", "cocycle": "nope"}]
  })";
  Report r = run_scenario_text(bad_ref);
  CHECK(r.exit_code == 1);
  CHECK(r.doc.at("commands")[0].at("status") == "error");

  const char* bad_decl = R"({
    "schema": "cantor-k/1",
    "systems": [{"name": "X", "odometer": {"mults": [3, 7]}}],
    "commands": []
  })";
  CHECK(run_scenario_text(bad_decl).exit_code == 1);
}

TEST_CASE("class comparison, state evaluation, and orbit dumps") {
  const char* scn = R"({
    "schema": "cantor-k/1",
    "systems": [{"name": "X", "odometer": {"mults": [3, 9], "extend": "x3"}}],
    "cocycles": [{"name": "third", "system": "X", "level": 0, "values": ["1/3"]}],
    "commands": [
      {"op": "k0_compare", "system": "X",
       "a": {"level": 1, "values": [1, 0, 0]},
       "b": {"level": 1, "values": [1, 1, 0]}},
      {"op": "state_eval", "system": "X", "level": 1, "values": [0, 1, 0]},
      {"op": "simulate", "system": "X", "cocycle": "third",
       "start": {"level": 1, "residue": "0", "fiber": "0"}, "steps": 3,
       "dump": true}
    ]
  })";
  Report r = run_scenario_text(scn);
  REQUIRE(r.exit_code == 0);
  const json& cmds = r.doc.at("commands");
  CHECK(cmds[0].at("a_le_b") == true);
  CHECK(cmds[0].at("equal") == false);
  CHECK(cmds[0].at("a_positive") == true);
  CHECK(cmds[1].at("value") == "1/3");
  // One tabular row per step, including step 0.
  REQUIRE(cmds[2].at("orbit").size() == 4);
  CHECK(cmds[2].at("orbit")[1] == "1\t1\t1/3");
}

TEST_CASE("commands can bind names for later commands") {
  const char* scn = R"({
    "schema": "cantor-k/1",
    "systems": [{"name": "X", "odometer": {"mults": [3, 9, 27], "extend": "x3"}}],
    "commands": [
      {"op": "example93_cocycle", "system": "X", "targets": ["1/4"], "name": "xi"},
      {"op": "untwist", "sign": "xi_sign", "cocycle": "xi", "name": "delta"},
      {"op": "coboundary_test", "cocycle": "delta"}
    ]
  })";
  Report r = run_scenario_text(scn);
  REQUIRE(r.exit_code == 0);
  // The untwisted cocycle over the skew product is a coboundary (its cycle
  // sum over a doubled period vanishes).
  CHECK(r.doc.at("commands")[2].at("verdict") == "yes");
}

TEST_CASE("bundled scenarios parse and succeed") {
  for (const auto& [name, text] : bundled_scenarios()) {
    CAPTURE(name);
    Report r = run_scenario_text(text);
    CHECK(r.exit_code == 0);
    for (const auto& cmd : r.doc.at("commands"))
      CHECK(cmd.at("status") == "ok");
  }
}

TEST_CASE("bundled example reports carry the expected verdicts") {
  const auto& all = bundled_scenarios();
  auto find = [&](const std::string& name) -> const std::string& {
    for (const auto& [n, t] : all)
      if (n == name) return t;
    throw Error("missing scenario");
  };
  Report e92 = run_scenario_text(find("example_9_2.scn"));
  CHECK(e92.doc.at("commands")[0].at("verdict") == "no");
  CHECK(e92.doc.at("commands")[1].at("verdict") == "yes");
  CHECK(e92.doc.at("commands")[2].at("exists") == false);

  Report e93 = run_scenario_text(find("example_9_3.scn"));
  const json& cmds = e93.doc.at("commands");
  CHECK(cmds[1].at("is_zero") == false);                 // [o] != 0
  CHECK(cmds[2].at("torsion_order") == "2");             // K_1 torsion Z_2
  CHECK(cmds[3].at("identities_verified") == true);
  CHECK(cmds[4].at("final_fiber") == "5/8");             // -t_6 mod 1
  CHECK(cmds[7].at("k1").get<std::string>().find("Z_2") !=
        std::string::npos);
}

TEST_CASE("run_scenario_file resolves bundled names and real paths") {
  Report byname = run_scenario_file("example_9_2.scn");
  CHECK(byname.exit_code == 0);
  Report missing = run_scenario_file("/nonexistent/path.scn");
  CHECK(missing.exit_code == 1);
}
