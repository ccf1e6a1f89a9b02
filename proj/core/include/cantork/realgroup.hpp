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
#include <vector>

#include "cantork/odometer.hpp"
#include "cantork/supernatural.hpp"
#include "cantork/symbolic.hpp"

namespace cantork::kgroup {

// Dense subgroup of R of the form Z[1/N] + Z g_1 + ... + Z g_k over a shared
// generator table. Always contains the unit 1. Membership and set equality
// are decided exactly by integer linear algebra over the generator basis
// plus supernatural-denominator arithmetic.
struct RealEmbeddedGroup {
  exact::TablePtr table;  // may be null when all data is rational
  exact::SupernaturalNumber rational_part;
  std::vector<exact::SymbolicReal> z_generators;

  std::string str() const;
};

RealEmbeddedGroup odometer_k0_group(const cantor::SystemPtr& sys);
RealEmbeddedGroup with_generator(RealEmbeddedGroup g, exact::SymbolicReal gen);

bool member(const RealEmbeddedGroup& g, const exact::SymbolicReal& x);
bool subset(const RealEmbeddedGroup& a, const RealEmbeddedGroup& b);
bool same_set(const RealEmbeddedGroup& a, const RealEmbeddedGroup& b);

// Unital order isomorphisms of dense real-embedded groups: a monotone
// additive map on a dense subgroup of R extends to multiplication by a
// scalar, and unit preservation forces the scalar to be 1. Hence such an
// isomorphism carrying subG onto subH exists iff G and H coincide as
// subsets of R and so do subG and subH. (Backed by a brute-force sanity
// test on rank-1 rational groups in the test suite.)
struct OrderIso {
  bool exists = false;
  std::string reason;
};

OrderIso order_iso_decision(const RealEmbeddedGroup& g,
                            const RealEmbeddedGroup& h,
                            const RealEmbeddedGroup& sub_g,
                            const RealEmbeddedGroup& sub_h);

}  // namespace cantork::kgroup
