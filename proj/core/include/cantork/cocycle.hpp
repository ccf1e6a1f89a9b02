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
#include <span>
#include <string>
#include <vector>

#include "cantork/kgroup.hpp"
#include "cantork/skew.hpp"
#include "cantork/symbolic.hpp"

namespace cantork::cocycle {

using cantor::SignCocycle;
using cantor::SystemPtr;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

inline constexpr int kDefaultMaxLevel = 12;

// Locally constant xi: X -> T given by its level-n value vector.
//
// Coboundary convention throughout: xi = eta - eta∘alpha^{-1} (the K^0_T
// quotient). The perturbation bounds are phrased against eta∘alpha; the
// conversion happens explicitly wherever they meet.
struct CircleCocycle {
  SystemPtr sys;
  int level = 0;
  std::vector<CircleValue> values;  // size m_level

  static CircleCocycle constant(SystemPtr sys, CircleValue v);
  static CircleCocycle make(SystemPtr sys, int level,
                            std::vector<CircleValue> values);

  const CircleValue& at(const Int& residue) const;
  CircleCocycle at_level(int deeper) const;
  CircleCocycle scaled(const Int& n) const;
  CircleCocycle operator+(const CircleCocycle& o) const;
  CircleCocycle operator-() const;

  // Sum over one level-N tower pass: (m_N / m_level) * (sum of values).
  CircleValue cycle_sum(int at_level) const;
  // Mean of the canonical representatives (a lift choice).
  SymbolicReal canonical_mean() const;

  exact::TablePtr table() const;
};

// Real lift of a cocycle: per-cylinder real values with value mod 1 equal to
// the cocycle.
struct RealLift {
  SystemPtr sys;
  int level = 0;
  std::vector<SymbolicReal> values;

  static RealLift canonical(const CircleCocycle& xi);  // representatives
  static RealLift make(const CircleCocycle& xi, std::vector<SymbolicReal> v);

  const SymbolicReal& at(const Int& residue) const;
  RealLift at_level(int deeper) const;
  CircleCocycle reduced() const;
  SymbolicReal mean() const;
  bool in_band(const Rational& lo, const Rational& hi) const;
};

enum class Verdict { Yes, No, Unknown };
std::string verdict_str(Verdict v);

struct CocycleDecision {
  Verdict verdict = Verdict::Unknown;
  std::optional<Int> multiple;             // n with n*[xi] = 0 (minimality "no")
  std::optional<CircleCocycle> witness;    // eta
  std::string certificate;
  int search_level = 0;
  bool reverified = false;
};

// [xi] = 0 in K^0_T(X, alpha)? Exact for locally constant cocycles over
// odometers via cycle sums and supernatural arithmetic; "unknown" only when
// a genuine witness would live beyond max_level.
CocycleDecision coboundary_test(const CircleCocycle& xi,
                                int max_level = kDefaultMaxLevel);

// alpha x R_xi minimal? (iff n[xi] != 0 for all n >= 1). On the odometer
// fast path this is equivalent to the cycle sum being irrational; "no" comes
// with the witness pair (n, eta) and the minimal-set parameterization.
CocycleDecision minimality_test(const CircleCocycle& xi,
                                int max_level = kDefaultMaxLevel,
                                const CancelToken& cancel = {});

// Sufficient mean criterion: rigid when n*mu(lift) never lies in Z[1/N];
// "no" via non-minimality; otherwise unknown (the criterion is one-sided).
// For locally constant cocycles over odometers the mean and the cycle sum
// are rational together, so the gap is empty and verdicts are exact.
CocycleDecision rigidity_test(const CircleCocycle& xi,
                              int max_level = kDefaultMaxLevel);

struct MeanResult {
  SymbolicReal mean;
  std::string delta_coset;  // "mod D(K^0) = Z[1/N]" tag
};

MeanResult cocycle_mean(const CircleCocycle& xi, const RealLift& lift);

// Perturbation: eta with |(xi + eta - eta∘alpha)(x)| < eps for
// all x, built by tower telescoping; the bound is re-verified exactly.
CircleCocycle perturb(const CircleCocycle& xi, const Rational& eps);

// Sign-twisted variant: |xi(x) + eta(x) - (-1)^{c(x)} eta(alpha x)| < eps.
CircleCocycle perturb_signed(const CircleCocycle& xi, const SignCocycle& c,
                             const Rational& eps);

// Bott element B_alpha(eta) = [nearest-integer of (lift eta - lift eta∘alpha)]
// for eta in H(alpha, xi) = {(xi + eta - eta∘alpha)(x) in (1/10, 9/10)};
// the context lift must sit in (7/15, 8/15), which rules out ties.
kgroup::K0Class bott(const RealLift& xi_context, const CircleCocycle& eta,
                     const std::optional<RealLift>& eta_lift = std::nullopt);

struct ControlResult {
  CircleCocycle eta;
  RealLift eta_lift;
  kgroup::K0Class bott_class;
  bool bound_verified = false;
  bool bott_matches = false;
};

// Controlled perturbation: given lifts xi_1, xi_2 in (7/15, 8/15) with
// mu(xi_2) = mu(xi_1) + mu(f) and eps < 1/10, builds eta with
// |(xi_1^ - xi_2^)(x) - (eta - eta∘alpha)(x)| < eps and B_alpha(eta) = [f];
// both postconditions re-verified exactly.
ControlResult control(const RealLift& xi1, const RealLift& xi2, int f_level,
                      const std::vector<Int>& f, const Rational& eps);

// [xi] = ±[zeta∘F]? F is an odometer self-conjugacy given as a residue
// shift at some level (the identity when omitted).
struct DigitShift {
  int level = 0;
  Int shift = 0;
};

CocycleDecision flip_cohomology_test(const CircleCocycle& xi,
                                     const CircleCocycle& zeta,
                                     const std::optional<DigitShift>& conj,
                                     int max_level = kDefaultMaxLevel);

// A level-L permutation of residues is a conjugacy of the odometer iff it
// commutes with +1, i.e. is a residue shift; returns the shift.
DigitShift digit_conjugacy(const SystemPtr& sys, int level,
                           std::span<const Int> permutation);

// Untwisting: the rotation cocycle delta(xi)(x,k) = (-1)^k xi(x) over the
// Z_2 skew product (defined when [o] != 0).
struct UntwistResult {
  cantor::SkewZ2 skew;
  CircleCocycle cocycle;  // over skew.skew_odometer
};

UntwistResult untwist(const SignCocycle& o, const CircleCocycle& xi);

// Minimal-set analysis of alpha x phi for phi = lambda^o R_xi with [o] != 0:
// searches n, eta with n xi = eta - alpha_phi^*(eta) through the skew
// product; a found witness is re-verified exactly and parameterizes every
// minimal subset E_s.
struct MinimalSetsResult {
  bool minimal_within_bound = false;
  std::optional<Int> multiple;
  std::optional<CircleCocycle> eta;  // over the base system
  std::string family;                // E_s description
  std::string certificate;
  bool reverified = false;
};

MinimalSetsResult minimal_sets_isom(const SignCocycle& o,
                                    const CircleCocycle& xi,
                                    int max_level = kDefaultMaxLevel,
                                    const CancelToken& cancel = {});

// Cocycle-level wrapper of first-return induction on the cylinder
// (level, base_residue): constant induced value Theta = cycle_sum(level).
struct InducedCocycle {
  cantor::InducedSystem system;
  CircleValue value;
};

InducedCocycle induce(const CircleCocycle& xi, int level,
                      const Int& base_residue);

}  // namespace cantork::cocycle
