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

#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cantork/supernatural.hpp"
#include "cantork/symbolic.hpp"

namespace cantork::cantor {

using exact::Int;
using exact::Rational;

// Odometer (+1 adding machine) on the projective limit of Z_{m_n}. The
// multiplicity sequence has an explicit prefix and extends lazily by the
// declared growth factor; m(level) is computed on demand, so the descriptor
// stays immutable.
class OdometerSystem {
 public:
  OdometerSystem(std::vector<Int> mults, Int growth);

  // m_level; m(0) = 1 by convention (level 0 = the whole space).
  Int multiplicity(int level) const;
  int prefix_levels() const { return static_cast<int>(mults_.size()); }
  const Int& growth() const { return growth_; }
  const exact::SupernaturalNumber& supernatural() const { return sn_; }

  std::string str() const;

 private:
  std::vector<Int> mults_;
  Int growth_;
  exact::SupernaturalNumber sn_;
};

using SystemPtr = std::shared_ptr<const OdometerSystem>;

// Validates the divisibility chain m_{n-1} | m_n and strict increase.
// growth = 0 infers the last ratio of the prefix (a single-entry prefix uses
// the entry itself).
SystemPtr make_odometer(std::vector<Int> mults, Int growth = 0);

// Cylinder point: the level-n residue pi_n(x). The distinguished point x0
// has residue 0 at every level; deepening keeps the residue value (the
// canonical extension).
struct CantorPoint {
  SystemPtr sys;
  int level = 0;
  Int residue = 0;
};

CantorPoint deepen(const CantorPoint& p, int level);
// alpha^k at the stated level: residue -> (residue + k) mod m_level.
CantorPoint apply_transform(const CantorPoint& p, const Int& k, int level);

// Kakutani-Rohlin tower data. For an odometer at level n there is a single
// tower of height m_n with base cylinder {residue 0}; floor k (1-based) is
// the cylinder {residue k-1} and the roof is {residue m_n - 1}.
struct Tower {
  Int height;
  Int base_residue;
};

struct TowerPartition {
  SystemPtr sys;
  int level = 0;
  std::vector<Tower> towers;

  Int roof_residue() const { return towers.at(0).height - 1; }
};

TowerPartition towers(const SystemPtr& sys, int level);

// Z_2-valued locally constant cocycle given by its level-n value vector.
// Level 0 (vector of size 1) encodes a constant cocycle.
struct SignCocycle {
  SystemPtr sys;
  int level = 0;
  std::vector<std::uint8_t> values;  // size m_level, entries in {0,1}

  static SignCocycle constant(SystemPtr sys, std::uint8_t v);
  static SignCocycle make(SystemPtr sys, int level,
                          std::vector<std::uint8_t> values);

  // Value on the cylinder of `residue` read at `from_level` >= level.
  std::uint8_t at(const Int& residue) const;
  Int sum() const;  // number of 1 entries
};

// The unique invariant measure of an odometer; level-n cylinders have mass
// 1/m_n.
struct InvariantMeasure {
  SystemPtr sys;
  bool uniquely_ergodic = true;
};

Rational cylinder_mass(const InvariantMeasure& mu, int level);

// mu(f) = (1/m_n) * sum of the level-n values.
exact::SymbolicReal measure_of(const InvariantMeasure& mu, int level,
                               std::span<const exact::SymbolicReal> values);
Rational measure_of(const InvariantMeasure& mu, int level,
                    std::span<const Int> values);

}  // namespace cantork::cantor
