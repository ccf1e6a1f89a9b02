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

#include <optional>

#include "cantork/odometer.hpp"

namespace cantork::cantor {

// Z_2 skew product (X x Z_2, (x,j) -> (alpha x, j + c(x))).
//
// Minimal (iff [c] != 0 in K^0/2K^0) case: the skew system is again an
// odometer, of type {2 m_j} for j >= base_level; skew level l corresponds to
// base level base_level + l - 1, and the skew residue r encodes r steps of
// the skew orbit started at (residue 0, sheet 0).
//
// Non-minimal case: a witness chi with c = chi + chi∘alpha^{-1} (mod 2) and
// the two invariant sheet components are reported.
struct SkewZ2 {
  SystemPtr base;
  SignCocycle twist;
  bool minimal = false;

  SystemPtr skew_odometer;  // set when minimal
  int base_level = 1;       // base level matching skew level 1

  std::optional<SignCocycle> witness_chi;  // set when not minimal
  std::string components;                  // description when not minimal

  int skew_level_of(int base_lvl) const { return base_lvl - base_level + 1; }
  int base_level_of(int skew_lvl) const { return skew_lvl + base_level - 1; }

  // Sheet of skew residue r at skew level l: parity of sum_{i<r} c(i).
  int sheet_of(const Int& skew_residue, int skew_level) const;
  // (base residue, sheet) of a skew residue.
  std::pair<Int, int> decompose(const Int& skew_residue, int skew_level) const;
  // Inverse: the unique skew residue with the given base residue and sheet.
  Int skew_residue(const Int& base_residue, int sheet, int skew_level) const;
};

SkewZ2 skew_z2(const SystemPtr& sys, const SignCocycle& c);

// First-return data on a level-n cylinder of an odometer. The return time
// is constantly m_n and level-(<= n) circle data telescopes to the constant
// cycle sum; see the cocycle module for the cocycle-level wrapper.
struct InducedSystem {
  SystemPtr induced;  // odometer of type {m_{n+j}/m_n}
  Int return_time;
  int from_level;
  Int base_residue;
};

InducedSystem induce_system(const SystemPtr& sys, int level,
                            const Int& base_residue);

}  // namespace cantork::cantor
