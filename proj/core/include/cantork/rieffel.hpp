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
#include "cantork/piecewise.hpp"
#include "cantork/plhomeo.hpp"

namespace cantork::crossed {

using cantor::SystemPtr;
using circlemaps::PLCocycle;
using cocycle::CircleCocycle;
using cocycle::RealLift;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

// Data of a generalized Rieffel projection e = g u* + f + u g: per-cylinder
// piecewise descriptions of f and g^2 (g is the square root of a quadratic
// bump, so g^2 is what the verification algebra uses), together with the
// fiber action of gamma = alpha x phi.
struct RieffelPair {
  SystemPtr sys;
  int level = 0;
  std::vector<CirclePiecewise> f;
  std::vector<CirclePiecewise> g2;

  // Fiber maps of gamma: exactly one of these is set.
  std::optional<CircleCocycle> rot;  // gamma = alpha x R_xi
  std::optional<PLCocycle> pl;       // gamma = alpha x phi (rational data)

  // Rotation case: the (1/10, 9/10) lift of xi + eta - eta∘alpha per
  // cylinder (the trace representative).
  std::vector<SymbolicReal> band_lift;

  std::string provenance;
};

// The rotation-case construction: breakpoints eta, eta + 1/10, eta',
// eta' + 1/10 with eta' = (xi + eta)∘alpha^{-1}. Preconditions: the band
// values (xi + eta - eta∘alpha) lie in (1/10, 9/10), exactly.
RieffelPair rieffel(const RealLift& xi,
                    const std::optional<CircleCocycle>& eta);

struct VerifyReport {
  bool ok = false;
  bool identity_i = false;    // f^2 + g^2 + g^2∘gamma^{-1} = f
  bool identity_ii = false;   // g (f + f∘gamma - 1) = 0
  bool identity_iii = false;  // g * g∘gamma = 0
  std::string detail;
};

// Exact projection check: e^2 = e expanded by u-degree gives the three
// identities above; each is decided by exact piecewise-polynomial algebra.
VerifyReport verify_projection(const RieffelPair& p);

struct TraceResult {
  SymbolicReal value;
  SymbolicReal via_integral;  // sum_x mu(x) * int f_x
  SymbolicReal via_lift;      // mu(band lift) (rotation case)
  bool agree = false;
};

TraceResult trace_of(const RieffelPair& p, const cantor::InvariantMeasure& mu);

struct BottIdentity {
  bool class_identity = false;  // [e(eta)] = [e(0)] - B_alpha(eta) in Z⊕K^0
  bool trace_identity = false;  // tau(e(eta)) = tau(e(0)) - state(B)
  kgroup::K0Class bott_class;
  SymbolicReal trace_zero;
  SymbolicReal trace_eta;
};

// Requires the stronger band (xi + eta - eta∘alpha)(x) in (1/3, 2/3).
BottIdentity bott_identity_check(const RealLift& xi, const CircleCocycle& eta);

// General construction for orientation-preserving PL cocycles without fixed
// points: breakpoints s, s+c, phi_{alpha^{-1}x}(s), phi_{alpha^{-1}x}(s+c)
// with c the exact minimal displacement. Pure rotation cocycles reduce to
// the rotation-case construction; non-rotation data must be rational.
struct GeneralRieffel {
  RieffelPair pair;
  SymbolicReal c;  // minimal displacement
};

GeneralRieffel rieffel_general(const PLCocycle& phi, const CircleValue& s);

}  // namespace cantork::crossed
