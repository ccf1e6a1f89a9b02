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

#include "cantork/crossed.hpp"

namespace cantork::crossed {

using exact::Int;
using exact::Rational;

CrossedInvariant invariant_of(const SystemPtr& sys, const CircleCocycle& xi) {
  CrossedInvariant inv;
  inv.orientation_preserving = true;
  cocycle::CocycleDecision min = cocycle::minimality_test(xi);
  inv.minimal = min.verdict == Verdict::Yes;
  inv.cone_formal = !inv.minimal;

  SymbolicReal mean = xi.canonical_mean();
  inv.k0_subgroup = kgroup::odometer_k0_group(sys);
  inv.k0_group = kgroup::with_generator(inv.k0_subgroup, mean);
  inv.rieffel_trace = mean;
  inv.k0_description =
      "Z ⊕ K^0(X, alpha) = " + inv.k0_group.str() +
      (inv.cone_formal ? " (cone formal: system not minimal)" : "");
  inv.k1_description = "Z ⊕ Z[1/" + sys->supernatural().str() + "]";
  inv.trace_data = "unique trace; tau[e] = " + mean.str();
  return inv;
}

CrossedInvariant invariant_of(const SystemPtr& sys, const SignCocycle& o,
                              const CircleCocycle& xi) {
  kgroup::Mod2Class klass = kgroup::mod2_class(sys, o);
  if (klass.is_zero) {
    // [o] = 0: cohomologous to a rotation cocycle via lambda^chi with
    // o = chi∘alpha + chi; conjugate and use the orientation-preserving path.
    const SignCocycle& chi_for_shifted = *klass.witness;
    // mod2 witness satisfies o = chi + chi∘alpha^{-1}; we need
    // o = chi'∘alpha + chi', i.e. chi'(k) = chi(k+1) shifted by one step.
    int L = chi_for_shifted.level;
    Int mL = sys->multiplicity(L);
    std::vector<std::uint8_t> chi(mL.get_ui());
    for (Int k = 0; k < mL; ++k) {
      Int prev = exact::mod_floor(k - 1, mL);
      chi[k.get_ui()] = chi_for_shifted.values[prev.get_ui()];
    }
    int level = std::max({xi.level, L, 1});
    Int m = sys->multiplicity(level);
    std::vector<exact::CircleValue> vals;
    vals.reserve(m.get_ui());
    for (Int k = 0; k < m; ++k) {
      exact::CircleValue v = xi.at(k);
      Int kl = exact::mod_floor(k, mL);
      vals.push_back(chi[kl.get_ui()] ? v.negated() : v);
    }
    CircleCocycle twisted{sys, level, std::move(vals)};
    CrossedInvariant inv = invariant_of(sys, twisted);
    inv.trace_data += " (untwisted by lambda^chi: [o] = 0)";
    return inv;
  }

  CrossedInvariant inv;
  inv.orientation_preserving = false;
  inv.k0_group = kgroup::odometer_k0_group(sys);
  inv.k0_subgroup = inv.k0_group;
  inv.k0_description = "K^0(X, alpha) = Z[1/" + sys->supernatural().str() + "]";
  inv.k1_torsion = kgroup::quotient_torsion(sys, o);
  inv.k1_description =
      "Z ⊕ (" + inv.k1_torsion->quotient_description + ")";
  cocycle::MinimalSetsResult ms = cocycle::minimal_sets_isom(o, xi);
  inv.minimal = ms.minimal_within_bound;
  inv.cone_formal = !inv.minimal;
  inv.cone_assumed_from_base = true;
  inv.trace_data =
      "order structure adopted from K^0(X, alpha) (no cone display exists "
      "for the non-orientation-preserving crossed product)";
  return inv;
}

bool cone_positive(const CrossedInvariant& inv, const Int& n,
                   const Rational& k0_value) {
  if (!inv.rieffel_trace)
    throw PreconditionError("cone_positive needs the Z ⊕ K^0 model");
  SymbolicReal v =
      inv.rieffel_trace->scaled(Rational(n)) + SymbolicReal(k0_value);
  if (v.is_zero()) return n == 0 && k0_value == 0;
  return v.sign() > 0;
}

SystemDescriptor denjoy_descriptor(const SymbolicReal& theta,
                                   const SymbolicReal& mean) {
  if (theta.is_rational())
    throw PreconditionError("denjoy_descriptor: theta must be irrational");
  SystemDescriptor d;
  d.k0.table = theta.table();
  d.k0.z_generators = {theta};
  d.mean = mean;
  d.provenance = "Denjoy system (literature descriptor): K^0 = Z + theta Z";
  return d;
}

SystemDescriptor odometer_descriptor(const SystemPtr& sys,
                                     const CircleCocycle& xi, int max_level) {
  SystemDescriptor d;
  d.k0 = kgroup::odometer_k0_group(sys);
  d.mean = xi.canonical_mean();
  d.k0.table = d.mean.table();
  cocycle::CocycleDecision rig = cocycle::rigidity_test(xi, max_level);
  d.rigid = rig.verdict == Verdict::Yes;
  d.provenance = "odometer " + sys->supernatural().str() + " with cocycle mean " +
                 d.mean.str();
  return d;
}

KConjDecision kconj_decision(const SystemDescriptor& a,
                             const SystemDescriptor& b, FlipMode mode) {
  KConjDecision out;
  if (!a.uniquely_ergodic || !b.uniquely_ergodic || !a.rigid || !b.rigid ||
      a.mean.is_rational() || b.mean.is_rational()) {
    out.verdict = Verdict::Unknown;
    out.reason = "state not faithful on K_0 (needs rigid, uniquely ergodic "
                 "systems with irrational mean)";
    return out;
  }
  kgroup::RealEmbeddedGroup ga = kgroup::with_generator(a.k0, a.mean);
  auto try_mean = [&](const SymbolicReal& mean_b) {
    kgroup::RealEmbeddedGroup gb = kgroup::with_generator(b.k0, mean_b);
    return kgroup::order_iso_decision(ga, gb, a.k0, b.k0);
  };

  if (mode != FlipMode::FlipOnly) {
    kgroup::OrderIso plain = try_mean(b.mean);
    if (plain.exists) {
      out.verdict = Verdict::Yes;
      out.flip_used = false;
      out.reason = plain.reason;
      return out;
    }
    if (mode == FlipMode::PlainOnly) {
      out.verdict = Verdict::No;
      out.reason = plain.reason;
      return out;
    }
  }
  kgroup::OrderIso flip =
      try_mean(SymbolicReal(Rational(1)) - b.mean);
  out.verdict = flip.exists ? Verdict::Yes : Verdict::No;
  out.flip_used = flip.exists;
  out.reason = flip.exists
                   ? "flip branch (alpha x R_{-xi}): " + flip.reason
                   : flip.reason;
  return out;
}

}  // namespace cantork::crossed
