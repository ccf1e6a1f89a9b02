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

#include "cantork/cocycle.hpp"
#include "cantork/skew.hpp"

using namespace cantork;
using namespace cantork::cantor;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

TEST_CASE("make_odometer computes supernatural types") {
  auto three = make_odometer({3, 9, 27});
  CHECK(three->supernatural().str() == "3^inf");
  CHECK(three->multiplicity(0) == 1);
  CHECK(three->multiplicity(2) == 9);
  CHECK(three->multiplicity(5) == 243);  // lazy extension x3

  auto two = make_odometer({2, 4, 8});
  CHECK(two->supernatural().str() == "2^inf");

  auto mixed = make_odometer({3, 6, 18, 54});
  CHECK(mixed->supernatural().str() == "2 * 3^inf");
  CHECK(mixed->multiplicity(2) == 6);

  CHECK_THROWS_AS(make_odometer({3, 7}), PreconditionError);
  CHECK_THROWS_AS(make_odometer({3, 3}), PreconditionError);
}

TEST_CASE("apply_transform is the +1 adding machine") {
  auto sys = make_odometer({3, 9, 27});
  CantorPoint x0{sys, 0, 0};
  CantorPoint p = apply_transform(x0, 1, 2);
  CHECK(p.residue == 1);
  CHECK(apply_transform(x0, 9, 2).residue == 0);   // full period
  CHECK(apply_transform(x0, -1, 2).residue == 8);

  // k then -k is the identity; k = m_n is the identity.
  for (int k = -5; k <= 5; ++k) {
    CantorPoint q = apply_transform(apply_transform(x0, k, 3), -k, 3);
    CHECK(q.residue == 0);
  }
  CHECK(apply_transform(x0, 27, 3).residue == 0);
}

TEST_CASE("towers: single tower of height m_n") {
  auto sys = make_odometer({3, 9, 27});
  TowerPartition t1 = towers(sys, 1);
  CHECK(t1.towers.size() == 1);
  CHECK(t1.towers[0].height == 3);
  CHECK(t1.roof_residue() == 2);
  CHECK(towers(sys, 2).towers[0].height == 9);

  auto mixed = make_odometer({3, 6, 18});
  CHECK(towers(mixed, 2).towers[0].height == 6);
}

TEST_CASE("tower floors tile the space under the invariant measure") {
  auto sys = make_odometer({3, 9, 27});
  InvariantMeasure mu{sys};
  for (int n = 1; n <= 4; ++n) {
    TowerPartition tp = towers(sys, n);
    Rational total = Rational(tp.towers[0].height) * cylinder_mass(mu, n);
    CHECK(total == 1);
  }
}

TEST_CASE("measure_of level data") {
  auto sys = make_odometer({3, 9, 27});
  InvariantMeasure mu{sys};
  std::vector<SymbolicReal> ones(3, SymbolicReal(Rational(1)));
  CHECK(measure_of(mu, 1, ones) == SymbolicReal(Rational(1)));

  std::vector<Int> ind(9, Int(0));
  ind[4] = 1;
  CHECK(measure_of(mu, 2, ind) == Rational(1, 9));

  auto t = std::make_shared<exact::GeneratorTable>();
  auto gold = t->add_golden_ratio("gold");
  std::vector<SymbolicReal> vals = {SymbolicReal(Rational(1, 2)),
                                    SymbolicReal(Rational(1, 2)),
                                    SymbolicReal::generator(t, gold)};
  SymbolicReal expect = SymbolicReal(Rational(1, 3)) +
                        SymbolicReal::generator(t, gold, Rational(1, 3));
  CHECK(measure_of(mu, 1, vals) == expect);
}

TEST_CASE("skew_z2: minimal iff the mod-2 class is nonzero") {
  auto three = make_odometer({3, 9, 27});
  SkewZ2 sk = skew_z2(three, SignCocycle::constant(three, 1));
  CHECK(sk.minimal);
  CHECK(sk.skew_odometer->supernatural().str() == "2 * 3^inf");
  CHECK(sk.skew_odometer->multiplicity(1) == 6);
  CHECK(sk.skew_odometer->multiplicity(2) == 18);

  SkewZ2 sk0 = skew_z2(three, SignCocycle::constant(three, 0));
  CHECK(!sk0.minimal);
  CHECK(sk0.witness_chi);
  // chi = 0 witnesses the zero cocycle.
  for (auto v : sk0.witness_chi->values) CHECK(v == 0);

  // 2^inf with c == 1: 2 is invertible deep enough, so [c] = 0 and a
  // nontrivial witness chi with c = chi + chi∘alpha^{-1} exists.
  auto two = make_odometer({2, 4, 8});
  SkewZ2 sk2 = skew_z2(two, SignCocycle::constant(two, 1));
  CHECK(!sk2.minimal);
  REQUIRE(sk2.witness_chi);
  const SignCocycle& chi = *sk2.witness_chi;
  Int m = two->multiplicity(chi.level);
  for (Int k = 0; k < m; ++k) {
    Int prev = exact::mod_floor(k - 1, m);
    CHECK(((chi.at(k) + chi.at(prev)) & 1) == 1);
  }
}

TEST_CASE("skew residue decomposition round-trips") {
  auto three = make_odometer({3, 9, 27});
  SkewZ2 sk = skew_z2(three, SignCocycle::constant(three, 1));
  for (int lvl = 1; lvl <= 2; ++lvl) {
    Int two_m = 2 * three->multiplicity(sk.base_level_of(lvl));
    for (Int r = 0; r < two_m; ++r) {
      auto [q, sheet] = sk.decompose(r, lvl);
      CHECK(sk.skew_residue(q, sheet, lvl) == r);
    }
  }
  // o == 1 flips the sheet every step: sheet(r) = r mod 2.
  for (Int r = 0; r < 6; ++r)
    CHECK(sk.sheet_of(r, 1) ==
          static_cast<int>(exact::mod_floor(r, 2).get_ui()));

  // Non-constant level-1 twist (1, 0, 0): one flip per base period.
  SignCocycle c = SignCocycle::make(three, 1, std::vector<std::uint8_t>{1, 0, 0});
  SkewZ2 skc = skew_z2(three, c);
  REQUIRE(skc.minimal);
  int flips = 0;
  for (Int r = 0; r < 6; ++r) {
    auto [q, sheet] = skc.decompose(r, 1);
    CHECK(skc.skew_residue(q, sheet, 1) == r);
    Int next = exact::mod_floor(r + 1, 6);
    if (skc.sheet_of(next, 1) != skc.sheet_of(r, 1)) ++flips;
  }
  CHECK(flips == 2);  // one flip per 3-step pass, two passes per period
}

TEST_CASE("induce on a cylinder telescopes the cocycle") {
  auto sys = make_odometer({3, 9, 27});
  auto t = std::make_shared<exact::GeneratorTable>();
  auto gold = t->add_golden_ratio("gold");
  CircleValue theta = CircleValue::reduce(SymbolicReal::generator(t, gold));

  using cocycle::CircleCocycle;
  // Level-1 values (a, b, c): induced value a + b + c on the induced system.
  CircleCocycle abc = CircleCocycle::make(
      sys, 1,
      {CircleValue(Rational(1, 5)), CircleValue(Rational(2, 5)), theta});
  cocycle::InducedCocycle ind = cocycle::induce(abc, 1, 0);
  CHECK(ind.system.return_time == 3);
  CHECK(ind.value == CircleValue(Rational(3, 5)) + theta);
  CHECK(ind.system.induced->supernatural().str() == "3^inf");

  // Constant theta: induced value 3*theta.
  CircleCocycle ctheta = CircleCocycle::constant(sys, theta);
  CHECK(cocycle::induce(ctheta, 1, 0).value == theta.scaled(Int(3)));

  // Level-1 data induced at level 2: each value visited 3 times.
  cocycle::InducedCocycle deep = cocycle::induce(abc, 2, 0);
  CHECK(deep.system.return_time == 9);
  CHECK(deep.value == (CircleValue(Rational(3, 5)) + theta).scaled(Int(3)));

  // Composition law: inducing deeper multiplies the cycle sum.
  CHECK(deep.value == ind.value.scaled(Int(3)));

  // Base residue does not matter for the constant induced value.
  CHECK(cocycle::induce(abc, 2, 5).value == deep.value);
}

TEST_CASE("deepen preserves residues") {
  auto sys = make_odometer({3, 9, 27});
  CantorPoint p{sys, 1, 2};
  CantorPoint q = deepen(p, 3);
  CHECK(q.residue == 2);
  CHECK(exact::mod_floor(q.residue, sys->multiplicity(1)) == p.residue);
  CHECK_THROWS_AS(deepen(q, 1), PreconditionError);
}
