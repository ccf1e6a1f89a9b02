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
#include <string>
#include <vector>

#include "cantork/cocycle.hpp"
#include "cantork/plhomeo.hpp"

namespace cantork::circlemaps {

using cantor::SignCocycle;
using cantor::SystemPtr;
using cocycle::CircleCocycle;
using exact::Interval;

// Rotation number of an orientation-preserving PL map: an exact rational
// with a periodic-orbit certificate when one exists within the period
// budget, otherwise a width <= 2/budget enclosure from orbit sums.
// Rotations are exact even with symbolic angles.
struct RotationNumber {
  bool exact = false;
  std::optional<CircleValue> value;  // set when exact
  Interval enclosure;                // always set (degenerate when exact
                                     // and rational)
  struct Witness {
    Int period;          // q
    Int winding;         // p: F^q(t) = t + p
    SymbolicReal point;  // t
  };
  std::optional<Witness> witness;

  std::string str() const;
};

RotationNumber rotation_number(const PLHomeo& phi, unsigned budget = 128);

// t with r(R_t ∘ phi) in the open rational interval I, found by monotone
// bisection over enclosures; the returned certificate re-verifies
// r(R_t ∘ phi) ∈ I.
struct RotationTarget {
  Rational t;
  RotationNumber certificate;
};

RotationTarget rotation_target(const PLHomeo& phi, const Rational& lo,
                               const Rational& hi, unsigned budget = 128);

// Conjugating rotation cocycle: eta with r(R_{eta(alpha x)} ∘ phi_x ∘
// R_{eta(x)}^{-1}) in I for every x, with per-cylinder certificates.
struct PerturbRotation {
  CircleCocycle eta;
  std::vector<RotationNumber> certificates;  // per cylinder at eta's level
};

PerturbRotation perturb_rotation(const PLCocycle& phi, const Rational& lo,
                                 const Rational& hi, unsigned budget = 128);

// Exact or dyadic orbit of (alpha x phi) for phi = lambda^o R_xi.
struct OrbitSample {
  struct Step {
    Int residue;
    CircleValue fiber;   // exact mode
    double fiber_dyadic; // dyadic mode (also filled in exact mode)
  };
  std::vector<Step> steps;  // step 0 = start, then one entry per step
  int level = 0;
  bool exact = true;
  // Diagnostics over the fixed 64-cell dyadic partition of T:
  int cells_visited = 0;
  double discrepancy = 0.0;  // max_cell |empirical - 1/64|
};

OrbitSample simulate(const SystemPtr& sys,
                     const std::optional<SignCocycle>& o,
                     const CircleCocycle& xi, const cantor::CantorPoint& start,
                     const CircleValue& fiber_start, long steps,
                     bool exact_mode = true);

// Inverse orbit (used to check exact reversibility).
OrbitSample simulate_inverse(const SystemPtr& sys,
                             const std::optional<SignCocycle>& o,
                             const CircleCocycle& xi,
                             const cantor::CantorPoint& start,
                             const CircleValue& fiber_start, long steps);

// The explicit non-orientation-preserving cocycle over the 3^inf odometer:
// given fiber targets t_1..t_N, xi = sum of the level-n layers with
// s_n in (-1/2, 1/2], s_n = t_n - t_{n-1}; o ≡ 1. Both defining identities
// are re-verified exactly for all n, m <= N.
struct Example93 {
  CircleCocycle xi;
  SignCocycle o;
  std::vector<SymbolicReal> s;  // centered lifts s_1..s_N
  bool identities_verified = false;
  std::string truncation_note;
};

Example93 example93_cocycle(const SystemPtr& sys,
                            const std::vector<CircleValue>& targets);

}  // namespace cantork::circlemaps
