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

#include <benchmark/benchmark.h>

#include "cantork/circlemaps.hpp"
#include "cantork/rieffel.hpp"

namespace {

using namespace cantork;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

exact::TablePtr shared_table() {
  static exact::TablePtr t = [] {
    auto tt = std::make_shared<exact::GeneratorTable>();
    tt->add_golden_ratio("gold");
    tt->add_sqrt("r2", Rational(2));
    return tt;
  }();
  return t;
}

void BM_SymSignDepth(benchmark::State& state) {
  auto t = shared_table();
  // Distance ~ 2^-k from the golden fractional part forces k refinements.
  exact::Interval e = t->enclosure(0, static_cast<std::size_t>(state.range(0)));
  SymbolicReal probe = SymbolicReal::generator(t, 0) - SymbolicReal(e.lo);
  for (auto _ : state) {
    benchmark::DoNotOptimize(probe.sign(96));
  }
}
BENCHMARK(BM_SymSignDepth)->Arg(8)->Arg(24)->Arg(48);

void BM_SmithNormalForm(benchmark::State& state) {
  int m = static_cast<int>(state.range(0));
  kgroup::IntMatrix a = kgroup::id_minus_shift(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgroup::smith_normal_form(a).rank);
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(9)->Arg(27)->Arg(54);

void BM_K0FastPath(benchmark::State& state) {
  auto sys = cantor::make_odometer({3, 9, 27});
  std::vector<Int> f(27, Int(1));
  f[13] = -2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kgroup::k0_class(sys, 3, f).value);
  }
}
BENCHMARK(BM_K0FastPath);

void BM_RieffelVerify(benchmark::State& state) {
  auto sys = cantor::make_odometer({3, 9, 27});
  auto t = shared_table();
  CircleValue theta =
      CircleValue::reduce(SymbolicReal::generator(t, 1, Rational(1, 3)));
  cocycle::RealLift lift = cocycle::RealLift::canonical(
      cocycle::CircleCocycle::constant(sys, theta));
  int level = static_cast<int>(state.range(0));
  Int m = sys->multiplicity(level);
  std::vector<CircleValue> wind;
  for (Int k = 0; k < m; ++k)
    wind.push_back(CircleValue(exact::make_rational(k, m)));
  cocycle::CircleCocycle eta{sys, level, std::move(wind)};
  crossed::RieffelPair pair = crossed::rieffel(lift, eta);
  for (auto _ : state) {
    benchmark::DoNotOptimize(crossed::verify_projection(pair).ok);
  }
}
BENCHMARK(BM_RieffelVerify)->Arg(1)->Arg(2);

void BM_ExactOrbit(benchmark::State& state) {
  auto sys = cantor::make_odometer({3, 9, 27});
  auto t = shared_table();
  CircleValue theta = CircleValue::reduce(SymbolicReal::generator(t, 0));
  cocycle::CircleCocycle xi = cocycle::CircleCocycle::constant(sys, theta);
  cantor::SignCocycle one = cantor::SignCocycle::constant(sys, 1);
  long steps = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        circlemaps::simulate(sys, one, xi, {sys, 4, 0}, CircleValue(), steps)
            .steps.size());
  }
}
BENCHMARK(BM_ExactOrbit)->Arg(81)->Arg(243);

void BM_RotationEnclosure(benchmark::State& state) {
  circlemaps::PLHomeo w = circlemaps::PLHomeo::increasing(
      {CircleValue(), CircleValue(Rational(1, 2))},
      {SymbolicReal(Rational(1, 3)), SymbolicReal(Rational(7, 12))});
  unsigned budget = static_cast<unsigned>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(circlemaps::rotation_number(w, budget).exact);
  }
}
BENCHMARK(BM_RotationEnclosure)->Arg(64)->Arg(128);

}  // namespace

BENCHMARK_MAIN();
