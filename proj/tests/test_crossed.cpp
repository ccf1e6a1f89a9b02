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

#include <random>

#include "cantork/crossed.hpp"
#include "cantork/rieffel.hpp"

using namespace cantork;
using namespace cantork::crossed;
using cantor::SignCocycle;
using cantor::make_odometer;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

namespace {

struct Fixture {
  cantor::SystemPtr sys = make_odometer({3, 9, 27});
  exact::TablePtr table = std::make_shared<exact::GeneratorTable>();
  exact::GeneratorTable::Id r2, r3;
  CircleValue theta;  // sqrt(2)/3 in (7/15, 8/15)

  Fixture() {
    r2 = table->add_sqrt("r2", Rational(2));
    r3 = table->add_sqrt("r3", Rational(3));
    theta =
        CircleValue::reduce(SymbolicReal::generator(table, r2, Rational(1, 3)));
  }

  cocycle::RealLift theta_lift() const {
    return cocycle::RealLift::canonical(
        cocycle::CircleCocycle::constant(sys, theta));
  }
  cocycle::CircleCocycle winding(int n) const {
    Int m = sys->multiplicity(n);
    std::vector<CircleValue> v;
    for (Int k = 0; k < m; ++k)
      v.push_back(CircleValue(exact::make_rational(k, m)));
    return cocycle::CircleCocycle{sys, n, std::move(v)};
  }
};

}  // namespace

TEST_CASE("3x3 finite model: the u-degree identities make a projection") {
  // Diagonal f, g over Q with u the cyclic shift satisfying the three
  // identities; (g u* + f + u g)^2 must equal itself in exact 3x3 algebra.
  // One solution: f = (1/5, 4/5, 0), g = (2/5, 0, 0).
  const int n = 3;
  std::vector<Rational> f = {Rational(1, 5), Rational(4, 5), Rational(0)};
  std::vector<Rational> g = {Rational(2, 5), Rational(0), Rational(0)};
  // Identities (with (h∘gamma)_k = h_{k+1} and (h∘gamma^{-1})_k = h_{k-1}):
  for (int k = 0; k < n; ++k) {
    int next = (k + 1) % n, prev = (k + 2) % n;
    CHECK(f[k] * f[k] + g[k] * g[k] + g[prev] * g[prev] == f[k]);  // (i)
    CHECK(g[k] * (f[k] + f[next] - 1) == 0);                      // (ii)
    CHECK(g[k] * g[next] == 0);                                   // (iii)
  }
  // e = g U* + F + U g with U e_k = e_{k+1} (so U D U* = shifted diagonal).
  auto mul = [&](const std::vector<std::vector<Rational>>& a,
                 const std::vector<std::vector<Rational>>& b) {
    std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  std::vector<std::vector<Rational>> E(n, std::vector<Rational>(n, Rational(0)));
  // F diagonal
  for (int k = 0; k < n; ++k) E[k][k] = f[k];
  // + U G (G diagonal of g)
  for (int k = 0; k < n; ++k) E[(k + 1) % n][k] += g[k];
  // + G U^T
  for (int k = 0; k < n; ++k) E[k][(k + 1) % n] += g[k];
  std::vector<std::vector<Rational>> E2 = mul(E, E);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) CHECK(E2[i][j] == E[i][j]);
}

TEST_CASE("rieffel pair: construction, exact verification, trace") {
  Fixture fx;
  RieffelPair p0 = rieffel(fx.theta_lift(), std::nullopt);
  VerifyReport v0 = verify_projection(p0);
  CHECK(v0.ok);
  cantor::InvariantMeasure mu{fx.sys};
  TraceResult t0 = trace_of(p0, mu);
  CHECK(t0.agree);
  CHECK(t0.value == fx.theta.representative());

  // Winding eta at levels 1..4: trace theta - 3^{-n}.
  for (int n = 1; n <= 4; ++n) {
    RieffelPair pn = rieffel(fx.theta_lift(), fx.winding(n));
    CHECK(verify_projection(pn).ok);
    TraceResult tn = trace_of(pn, mu);
    Int m = fx.sys->multiplicity(n);
    CHECK(tn.value ==
          fx.theta.representative() - SymbolicReal(exact::make_rational(1, m)));
  }

  // Out-of-band input is rejected.
  cocycle::RealLift narrow = cocycle::RealLift::canonical(
      cocycle::CircleCocycle::constant(fx.sys, CircleValue(Rational(1, 20))));
  CHECK_THROWS_AS(rieffel(narrow, std::nullopt), PreconditionError);

  // Mixed levels: level-1 xi with a level-2 winding eta.
  cocycle::CircleCocycle xi1 = cocycle::CircleCocycle::make(
      fx.sys, 1,
      {fx.theta, fx.theta + CircleValue(Rational(1, 100)),
       fx.theta - CircleValue(Rational(1, 100))});
  RieffelPair mixed =
      rieffel(cocycle::RealLift::canonical(xi1), fx.winding(2));
  CHECK(mixed.level == 2);
  CHECK(verify_projection(mixed).ok);
  CHECK(trace_of(mixed, mu).agree);
}

TEST_CASE("randomized in-band pairs verify; corrupted pairs fail (i)") {
  Fixture fx;
  std::mt19937 rng(1234);
  std::uniform_int_distribution<int> jitter(-20, 20);
  std::uniform_int_distribution<int> lvl(1, 3);
  for (int trial = 0; trial < 8; ++trial) {
    int level = lvl(rng);
    Int m = fx.sys->multiplicity(level);
    // Rational-plus-one-generator values inside (7/15, 8/15).
    std::vector<SymbolicReal> lift_vals;
    std::vector<CircleValue> xi_vals;
    for (Int k = 0; k < m; ++k) {
      SymbolicReal v = SymbolicReal::generator(fx.table, fx.r2,
                                               Rational(1, 3)) +
                       SymbolicReal(exact::make_rational(jitter(rng), 10000));
      lift_vals.push_back(v);
      xi_vals.push_back(CircleValue::reduce(v));
    }
    cocycle::CircleCocycle xi{fx.sys, level, xi_vals};
    cocycle::RealLift lift = cocycle::RealLift::make(xi, lift_vals);
    REQUIRE(lift.in_band(Rational(7, 15), Rational(8, 15)));

    // eta: small rational winding staying in H(alpha, xi).
    std::vector<CircleValue> eta_vals;
    for (Int k = 0; k < m; ++k)
      eta_vals.push_back(CircleValue(exact::make_rational(k, m)));
    cocycle::CircleCocycle eta{fx.sys, level, std::move(eta_vals)};

    RieffelPair pair = rieffel(lift, trial % 2 ? std::optional(eta)
                                               : std::nullopt);
    VerifyReport rep = verify_projection(pair);
    CHECK(rep.ok);

    // Corruption: f -> f/2 breaks identity (i) but not (iii).
    RieffelPair bad = pair;
    for (auto& f : bad.f) f = f.scaled(Rational(1, 2));
    VerifyReport brep = verify_projection(bad);
    CHECK(!brep.ok);
    CHECK(!brep.identity_i);
    CHECK(brep.identity_iii);
  }
}

TEST_CASE("degenerate diagnostic: g = 0 forces f idempotent") {
  Fixture fx;
  RieffelPair p = rieffel(fx.theta_lift(), std::nullopt);
  RieffelPair degen = p;
  for (auto& g : degen.g2) g = crossed::CirclePiecewise();
  // f still has ramps strictly between 0 and 1: identity (i) fails.
  VerifyReport rep = verify_projection(degen);
  CHECK(!rep.ok);
  CHECK(!rep.identity_i);

  // Indicator-valued f with g = 0 is a legitimate projection.
  RieffelPair ind = degen;
  for (auto& f : ind.f)
    f = crossed::CirclePiecewise::constant(SymbolicReal(Rational(1)));
  CHECK(verify_projection(ind).ok);
}

TEST_CASE("bott identity: winding family and control output") {
  Fixture fx;
  cocycle::RealLift lift = fx.theta_lift();

  // Band (1/3, 2/3) holds for winding eta at levels >= 2 (theta - 1/9 etc).
  for (int n = 2; n <= 4; ++n) {
    BottIdentity b = bott_identity_check(lift, fx.winding(n));
    CHECK(b.class_identity);
    CHECK(b.trace_identity);
    Int m = fx.sys->multiplicity(n);
    CHECK(b.bott_class.value == exact::make_rational(1, m));
    CHECK(b.trace_eta ==
          b.trace_zero - SymbolicReal(exact::make_rational(1, m)));
    // Mis-signed Bott class breaks the identity (sign sentinel).
    SymbolicReal wrong =
        b.trace_zero + SymbolicReal(exact::make_rational(1, m));
    CHECK(!(b.trace_eta == wrong));
  }
  // Level-1 winding violates the (1/3, 2/3) hypothesis: theta - 1/3 < 1/3.
  CHECK_THROWS_AS(bott_identity_check(lift, fx.winding(1)),
                  PreconditionError);

  // Control-generated eta with prescribed [f] = 1/27.
  std::vector<Int> f(27, Int(0));
  f[4] = 1;
  std::vector<SymbolicReal> v2(27);
  std::vector<CircleValue> x2v(27);
  for (int i = 0; i < 27; ++i) {
    v2[static_cast<std::size_t>(i)] =
        fx.theta.representative() + SymbolicReal(Rational(1, 27));
    x2v[static_cast<std::size_t>(i)] =
        CircleValue::reduce(v2[static_cast<std::size_t>(i)]);
  }
  cocycle::CircleCocycle x2{fx.sys, 3, std::move(x2v)};
  cocycle::ControlResult c = cocycle::control(
      lift, cocycle::RealLift::make(x2, v2), 3, f, Rational(1, 20));
  CHECK(c.bott_class.value == Rational(1, 27));
  BottIdentity b = bott_identity_check(lift, c.eta);
  CHECK(b.class_identity);
  CHECK(b.trace_identity);
}

TEST_CASE("invariant_of: orientation preserving") {
  Fixture fx;
  cocycle::CircleCocycle xi = cocycle::CircleCocycle::constant(fx.sys, fx.theta);
  CrossedInvariant inv = invariant_of(fx.sys, xi);
  CHECK(inv.orientation_preserving);
  CHECK(inv.minimal);
  CHECK(!inv.cone_formal);
  CHECK(inv.k1_description.find("Z[1/3^inf]") != std::string::npos);
  CHECK(*inv.rieffel_trace == fx.theta.representative());
  // K_0 as a subset of R: Z theta + Z[1/3], subgroup Z[1/3].
  CHECK(kgroup::member(inv.k0_group, fx.theta.representative()));
  CHECK(kgroup::member(inv.k0_group, SymbolicReal(Rational(5, 27))));
  CHECK(!kgroup::member(inv.k0_subgroup, fx.theta.representative()));

  // Non-minimal cocycle: invariant emitted with a formal cone.
  cocycle::CircleCocycle third =
      cocycle::CircleCocycle::constant(fx.sys, CircleValue(Rational(1, 3)));
  CrossedInvariant formal = invariant_of(fx.sys, third);
  CHECK(formal.cone_formal);
}

TEST_CASE("invariant_of: non-orientation preserving") {
  Fixture fx;
  SignCocycle one = SignCocycle::constant(fx.sys, 1);
  cocycle::CircleCocycle xi = cocycle::CircleCocycle::constant(fx.sys, fx.theta);
  CrossedInvariant inv = invariant_of(fx.sys, one, xi);
  CHECK(!inv.orientation_preserving);
  CHECK(inv.k0_description.find("Z[1/3^inf]") != std::string::npos);
  CHECK(inv.k1_description.find("Z_2") != std::string::npos);
  REQUIRE(inv.k1_torsion);
  CHECK(inv.k1_torsion->torsion_order == 2);
  CHECK(inv.k1_torsion->doubling_in_subgroup);
  CHECK(inv.cone_assumed_from_base);

  // [o] = 0 over 2^inf: unwinds to the orientation-preserving case.
  auto two = make_odometer({2, 4, 8});
  CircleValue th2 =
      CircleValue::reduce(SymbolicReal::generator(fx.table, fx.r2, Rational(1, 3)));
  CrossedInvariant untw = invariant_of(
      two, SignCocycle::constant(two, 1),
      cocycle::CircleCocycle::constant(two, th2));
  CHECK(untw.orientation_preserving);
}

TEST_CASE("cone in the Z ⊕ K^0 model") {
  Fixture fx;
  cocycle::CircleCocycle xi = cocycle::CircleCocycle::constant(fx.sys, fx.theta);
  CrossedInvariant inv = invariant_of(fx.sys, xi);
  // mu(n lift + f) > 0 test: additive, and the unit is an order unit.
  CHECK(cone_positive(inv, 1, Rational(0)));            // [e]
  CHECK(cone_positive(inv, 0, Rational(1, 9)));
  CHECK(cone_positive(inv, -1, Rational(1)));           // 1 - theta > 0
  CHECK(!cone_positive(inv, -1, Rational(1, 3)));
  CHECK(cone_positive(inv, 0, Rational(0)));            // zero is in the cone
  // Additivity on a small grid.
  for (int n1 = -2; n1 <= 2; ++n1)
    for (int n2 = -2; n2 <= 2; ++n2) {
      Rational f1(1, 3), f2(-1, 9);
      if (cone_positive(inv, n1, f1) && cone_positive(inv, n2, f2)) {
        bool zero1 = n1 == 0 && f1 == 0, zero2 = n2 == 0 && f2 == 0;
        if (!zero1 && !zero2)
          CHECK(cone_positive(inv, Int(n1) + Int(n2), f1 + f2));
      }
    }
  // Some multiple of the unit dominates any (n, f) in a small box.
  for (int n = -2; n <= 2; ++n)
    for (int p = -6; p <= 6; ++p) {
      Rational f = exact::make_rational(p, 3);
      bool dominated = false;
      for (int k = 1; k <= 12 && !dominated; ++k)
        dominated = cone_positive(inv, Int(-n), Rational(k) - f);
      CHECK(dominated);
    }
}

TEST_CASE("kconj_decision: the Denjoy pair, and mean shifts") {
  Fixture fx;
  SymbolicReal th1 =
      SymbolicReal::generator(fx.table, fx.r2) - SymbolicReal(Rational(1));
  SymbolicReal th2 =
      SymbolicReal::generator(fx.table, fx.r3) - SymbolicReal(Rational(1));

  SystemDescriptor a = denjoy_descriptor(th1, th2);
  SystemDescriptor b = denjoy_descriptor(th2, th1);
  KConjDecision no = kconj_decision(a, b);
  CHECK(no.verdict == cocycle::Verdict::No);

  // Same Denjoy base, means differing by a K^0 element: yes.
  SystemDescriptor a2 = denjoy_descriptor(th1, th2 + th1 - SymbolicReal(1));
  KConjDecision yes = kconj_decision(a, a2);
  CHECK(yes.verdict == cocycle::Verdict::Yes);

  // Symmetric and reflexive.
  CHECK(kconj_decision(b, a).verdict == cocycle::Verdict::No);
  CHECK(kconj_decision(a, a).verdict == cocycle::Verdict::Yes);

  // Invariance under mean -> 1 - mean (the flip).
  SystemDescriptor aflip = denjoy_descriptor(th1, SymbolicReal(1) - th2);
  CHECK(kconj_decision(a, aflip).verdict == cocycle::Verdict::Yes);

  // theta rational is rejected.
  CHECK_THROWS_AS(denjoy_descriptor(SymbolicReal(Rational(1, 2)), th2),
                  PreconditionError);

  // Rational mean: state not faithful, verdict unknown.
  SystemDescriptor bad = a;
  bad.mean = SymbolicReal(Rational(1, 3));
  KConjDecision unk = kconj_decision(bad, a);
  CHECK(unk.verdict == cocycle::Verdict::Unknown);
  CHECK(unk.reason.find("faithful") != std::string::npos);
}

TEST_CASE("kconj_decision on odometer descriptors") {
  Fixture fx;
  cocycle::CircleCocycle xi = cocycle::CircleCocycle::constant(fx.sys, fx.theta);
  cocycle::CircleCocycle zeta = cocycle::CircleCocycle::constant(
      fx.sys, fx.theta + CircleValue(Rational(1, 9)));
  SystemDescriptor a = odometer_descriptor(fx.sys, xi);
  SystemDescriptor b = odometer_descriptor(fx.sys, zeta);
  CHECK(a.rigid);
  CHECK(kconj_decision(a, b).verdict == cocycle::Verdict::Yes);

  auto two = make_odometer({2, 4, 8});
  SystemDescriptor c = odometer_descriptor(
      two, cocycle::CircleCocycle::constant(two, fx.theta));
  KConjDecision no = kconj_decision(a, c);
  CHECK(no.verdict == cocycle::Verdict::No);

  // Forced flip-only mode still decides (the flipped mean generates the
  // same embedded group).
  CHECK(kconj_decision(a, b, FlipMode::FlipOnly).verdict ==
        cocycle::Verdict::Yes);
  CHECK(kconj_decision(a, c, FlipMode::PlainOnly).verdict ==
        cocycle::Verdict::No);
}
