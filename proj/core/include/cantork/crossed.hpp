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

#include "cantork/cocycle.hpp"
#include "cantork/realgroup.hpp"

namespace cantork::crossed {

using cantor::SignCocycle;
using cantor::SystemPtr;
using cocycle::CircleCocycle;
using cocycle::Verdict;
using exact::SymbolicReal;

// K-theoretic invariant of C*(X x T, alpha x phi).
//
// Orientation preserving: K_0 ≅ K_1 ≅ Z ⊕ K^0(X, alpha), realized (for a
// faithful state, i.e. irrational mean) as the real-embedded group
// Z*mean + K^0-values, with the image of K^0(X, alpha) distinguished and
// cone {(n, [f]) : mu(n lift + f) > 0} ∪ {0}.
//
// Non-orientation preserving: K_0 ≅ K^0(X, alpha) and
// K_1 ≅ Z ⊕ K^0(X x Z_2)/K^0(X), whose torsion part is Z_2.
struct CrossedInvariant {
  bool orientation_preserving = true;
  std::string k0_description;
  std::string k1_description;
  kgroup::RealEmbeddedGroup k0_group;
  kgroup::RealEmbeddedGroup k0_subgroup;      // image of K^0(X, alpha)
  std::optional<SymbolicReal> rieffel_trace;  // state of [e(alpha,xi,0)]
  std::optional<kgroup::QuotientTorsion> k1_torsion;
  bool minimal = false;
  bool cone_formal = false;           // emitted without a minimality proof
  bool cone_assumed_from_base = false;  // non-orientable case: order structure
                                        // adopted from K^0(X, alpha)
  std::string trace_data;
};

CrossedInvariant invariant_of(const SystemPtr& sys, const CircleCocycle& xi);
CrossedInvariant invariant_of(const SystemPtr& sys, const SignCocycle& o,
                              const CircleCocycle& xi);

// Cone membership in the Z ⊕ K^0 model: mu(n*lift + f) > 0, or zero.
bool cone_positive(const CrossedInvariant& inv, const exact::Int& n,
                   const exact::Rational& k0_value);

// What the K-conjugacy decision consumes: the state-embedded K^0 and the
// cocycle mean of a rigid, uniquely ergodic system.
struct SystemDescriptor {
  kgroup::RealEmbeddedGroup k0;
  SymbolicReal mean;
  bool uniquely_ergodic = true;
  bool rigid = true;
  std::string provenance;
};

SystemDescriptor denjoy_descriptor(const SymbolicReal& theta,
                                   const SymbolicReal& mean);
SystemDescriptor odometer_descriptor(const SystemPtr& sys,
                                     const CircleCocycle& xi,
                                     int max_level = cocycle::kDefaultMaxLevel);

enum class FlipMode { Auto, PlainOnly, FlipOnly };

struct KConjDecision {
  Verdict verdict = Verdict::Unknown;
  bool flip_used = false;
  std::string reason;
};

// Approximate-K-conjugacy criterion: a unital order isomorphism of the
// crossed products' K_0 carrying one canonical K^0 image onto the other.
// Built on order_iso_decision over Z*mean + K^0, trying the mean and the
// flipped mean 1 - mean.
KConjDecision kconj_decision(const SystemDescriptor& a,
                             const SystemDescriptor& b,
                             FlipMode mode = FlipMode::Auto);

}  // namespace cantork::crossed
