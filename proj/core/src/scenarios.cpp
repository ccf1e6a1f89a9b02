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

#include "cantork/scenario.hpp"

namespace cantork::cli {

namespace {

const char kExample92[] = R"SCN({
  "schema": "cantor-k/1",
  "generators": [
    {"name": "r2", "kind": "sqrt", "radicand": "2"},
    {"name": "r3", "kind": "sqrt", "radicand": "3"}
  ],
  "commands": [
    {"op": "kconj_decision",
     "a": {"denjoy": {"theta": "-1 + r2", "mean": "-1 + r3"}},
     "b": {"denjoy": {"theta": "-1 + r3", "mean": "-1 + r2"}}},
    {"op": "kconj_decision",
     "a": {"denjoy": {"theta": "-1 + r2", "mean": "-1 + r3"}},
     "b": {"denjoy": {"theta": "-1 + r2", "mean": "-3 + r2 + r3"}}},
    {"op": "order_iso_decision",
     "g": {"z_generators": ["-1 + r2", "-1 + r3"]},
     "h": {"z_generators": ["-1 + r2", "-1 + r3"]},
     "sub_g": {"z_generators": ["-1 + r2"]},
     "sub_h": {"z_generators": ["-1 + r3"]}}
  ]
})SCN";

const char kExample93[] = R"SCN({
  "schema": "cantor-k/1",
  "systems": [
    {"name": "X", "odometer": {"mults": [3, 9, 27], "extend": "x3"}}
  ],
  "sign_cocycles": [
    {"name": "o", "system": "X", "level": 0, "values": [1]}
  ],
  "commands": [
    {"op": "system_info", "system": "X"},
    {"op": "mod2_class", "system": "X", "sign": "o"},
    {"op": "quotient_torsion", "system": "X", "sign": "o"},
    {"op": "example93_cocycle", "system": "X",
     "targets": ["1/2", "1/4", "3/4", "1/8", "5/8", "3/8"], "name": "xi"},
    {"op": "simulate", "system": "X", "sign": "o", "cocycle": "xi",
     "start": {"level": 6, "residue": "0", "fiber": "0"}, "steps": 729,
     "mode": "exact"},
    {"op": "untwist", "sign": "o", "cocycle": "xi"},
    {"op": "minimal_sets_isom", "sign": "o", "cocycle": "xi", "max_level": 8},
    {"op": "invariant_of", "system": "X", "sign": "o", "cocycle": "xi"}
  ]
})SCN";

const char kOdometerBasics[] = R"SCN({
  "schema": "cantor-k/1",
  "generators": [
    {"name": "r2", "kind": "sqrt", "radicand": "2"}
  ],
  "systems": [
    {"name": "X", "odometer": {"mults": [3, 9, 27], "extend": "x3"}},
    {"name": "Y", "odometer": {"mults": [2, 4, 8], "extend": "x2"}}
  ],
  "sign_cocycles": [
    {"name": "one", "system": "X", "level": 0, "values": [1]}
  ],
  "cocycles": [
    {"name": "xi", "system": "X", "level": 0, "values": ["1/3*r2"]},
    {"name": "xi_third", "system": "X", "level": 0, "values": ["1/3"]},
    {"name": "zeta", "system": "X", "level": 0, "values": ["1/9 + 1/3*r2"]},
    {"name": "xi_y", "system": "Y", "level": 0, "values": ["1/3*r2"]},
    {"name": "eta_wind", "system": "X", "level": 2,
     "values": ["0", "1/9", "2/9", "3/9", "4/9", "5/9", "6/9", "7/9", "8/9"]}
  ],
  "lifts": [
    {"name": "xi_lift", "cocycle": "xi", "values": ["1/3*r2"]}
  ],
  "commands": [
    {"op": "system_info", "system": "X"},
    {"op": "supernatural_ops", "s_system": "X", "t_system": "Y", "q": "5/27"},
    {"op": "k0_class", "system": "X", "level": 2,
     "values": [0, 0, 0, 0, 0, 0, 0, 0, 1]},
    {"op": "mod2_class", "system": "X", "sign": "one"},
    {"op": "quotient_torsion", "system": "X", "sign": "one"},
    {"op": "coboundary_test", "cocycle": "xi_third"},
    {"op": "minimality_test", "cocycle": "xi"},
    {"op": "minimality_test", "cocycle": "xi_third"},
    {"op": "rigidity_test", "cocycle": "xi"},
    {"op": "rigidity_test", "cocycle": "xi_third"},
    {"op": "cocycle_mean", "cocycle": "xi", "lift": "xi_lift"},
    {"op": "perturb", "cocycle": "xi", "eps": "1/4"},
    {"op": "perturb_signed", "cocycle": "xi", "sign": "one", "eps": "1/4"},
    {"op": "rieffel", "lift": "xi_lift"},
    {"op": "rieffel", "lift": "xi_lift", "eta": "eta_wind"},
    {"op": "bott", "context": "xi_lift", "eta": "eta_wind"},
    {"op": "bott_identity_check", "lift": "xi_lift", "eta": "eta_wind"},
    {"op": "kconj_decision",
     "a": {"odometer": {"system": "X", "cocycle": "xi"}},
     "b": {"odometer": {"system": "X", "cocycle": "zeta"}}},
    {"op": "kconj_decision",
     "a": {"odometer": {"system": "X", "cocycle": "xi"}},
     "b": {"odometer": {"system": "Y", "cocycle": "xi_y"}}},
    {"op": "simulate", "system": "X", "cocycle": "xi",
     "start": {"level": 4, "residue": "0", "fiber": "0"}, "steps": 2000,
     "mode": "dyadic"}
  ]
})SCN";

const char kRotationNumbers[] = R"SCN({
  "schema": "cantor-k/1",
  "generators": [
    {"name": "gold", "kind": "golden"}
  ],
  "systems": [
    {"name": "X", "odometer": {"mults": [3, 9], "extend": "x3"}}
  ],
  "pl_maps": [
    {"name": "ident", "breakpoints": ["0"], "values": ["0"]},
    {"name": "r13", "breakpoints": ["0"], "values": ["1/3"]},
    {"name": "r12", "breakpoints": ["0"], "values": ["1/2"]},
    {"name": "r14", "breakpoints": ["0"], "values": ["1/4"]},
    {"name": "rgold", "breakpoints": ["0"], "values": ["gold"]},
    {"name": "pl_flat", "breakpoints": ["0", "1/2"], "values": ["1/4", "1/2"]},
    {"name": "pl_wiggle", "breakpoints": ["0", "1/2"], "values": ["1/3", "7/12"]}
  ],
  "commands": [
    {"op": "rotation_number", "compose": ["r12", "r13"]},
    {"op": "rotation_number", "pl_map": "pl_flat", "budget": 128},
    {"op": "rotation_number", "pl_map": "pl_wiggle", "budget": 128},
    {"op": "rotation_target", "pl_map": "ident", "lo": "1/3", "hi": "1/2"},
    {"op": "rotation_target", "pl_map": "r14", "lo": "1/2", "hi": "3/5"},
    {"op": "rotation_target", "pl_map": "pl_wiggle", "lo": "0", "hi": "1/10"},
    {"op": "perturb_rotation",
     "pl_cocycle": {"system": "X", "level": 0, "maps": ["r14"]},
     "lo": "9/20", "hi": "11/20"},
    {"op": "rieffel_general",
     "pl_cocycle": {"system": "X", "level": 0, "maps": ["pl_wiggle"]},
     "s": "0"},
    {"op": "rieffel_general",
     "pl_cocycle": {"system": "X", "level": 0, "maps": ["rgold"]},
     "s": "0"}
  ]
})SCN";

}  // namespace

const std::vector<std::pair<std::string, std::string>>& bundled_scenarios() {
  static const std::vector<std::pair<std::string, std::string>> kAll = {
      {"example_9_2.scn", kExample92},
      {"example_9_3.scn", kExample93},
      {"odometer_basics.scn", kOdometerBasics},
      {"rotation_numbers.scn", kRotationNumbers},
  };
  return kAll;
}

}  // namespace cantork::cli
