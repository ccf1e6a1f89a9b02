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

#include "cantork/realgroup.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "cantork/smith.hpp"

namespace cantork::kgroup {

using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

std::string RealEmbeddedGroup::str() const {
  std::ostringstream out;
  out << "Z[1/" << rational_part.str() << "]";
  for (const auto& g : z_generators) out << " + Z*(" << g.str() << ")";
  return out.str();
}

RealEmbeddedGroup odometer_k0_group(const cantor::SystemPtr& sys) {
  RealEmbeddedGroup g;
  g.rational_part = sys->supernatural();
  return g;
}

RealEmbeddedGroup with_generator(RealEmbeddedGroup g, SymbolicReal gen) {
  g.table = exact::merge_tables(g.table, gen.table());
  g.z_generators.push_back(std::move(gen));
  return g;
}

namespace {

// gcd of a finite list of rationals: the generator of the subgroup of Q they
// generate (0 if all are 0).
Rational rational_gcd(const std::vector<Rational>& xs) {
  Int den = 1;
  for (const auto& x : xs) den = lcm(den, x.get_den());
  Int g = 0;
  for (const auto& x : xs) g = gcd(g, Int(x.get_num() * (den / x.get_den())));
  return exact::make_rational(g, den);
}

// Does there exist m in Z with c0 - m*gamma in Z[1/N]?
bool rational_coset_hits(const exact::SupernaturalNumber& n, const Rational& c0,
                         const Rational& gamma) {
  if (gamma == 0) return n.admits(c0);
  Int d = lcm(c0.get_den(), gamma.get_den());
  Int a = c0.get_num() * (d / c0.get_den());
  Int b = gamma.get_num() * (d / gamma.get_den());
  Int d_bad = n.residual(d);
  if (d_bad == 1) return true;
  Int g = gcd(abs(b), d_bad);
  return mpz_divisible_p(a.get_mpz_t(), g.get_mpz_t());
}

}  // namespace

bool member(const RealEmbeddedGroup& g, const SymbolicReal& x) {
  exact::merge_tables(g.table, x.table());

  // Irrational coordinate slots appearing anywhere.
  std::set<exact::GeneratorTable::Id> slots;
  for (const auto& gen : g.z_generators)
    for (const auto& [id, c] : gen.coefficients()) slots.insert(id);
  for (const auto& [id, c] : x.coefficients()) slots.insert(id);

  const int rows = static_cast<int>(slots.size());
  const int cols = static_cast<int>(g.z_generators.size());

  // Row-scaled integer system M a = y matching irrational coordinates.
  IntMatrix m(rows, cols);
  std::vector<Int> y(rows, Int(0));
  {
    int r = 0;
    for (auto id : slots) {
      Int den = 1;
      auto coeff_of = [&](const SymbolicReal& s) {
        auto it = s.coefficients().find(id);
        return it == s.coefficients().end() ? Rational(0) : it->second;
      };
      for (const auto& gen : g.z_generators) den = lcm(den, coeff_of(gen).get_den());
      den = lcm(den, coeff_of(x).get_den());
      for (int j = 0; j < cols; ++j) {
        Rational c = coeff_of(g.z_generators[j]);
        m.at(r, j) = c.get_num() * (den / c.get_den());
      }
      Rational cx = coeff_of(x);
      y[r] = cx.get_num() * (den / cx.get_den());
      ++r;
    }
  }

  IntegerSolve sol = solve_integer(m, y);
  if (!sol.solvable) return false;

  Rational c0 = x.rational_part();
  for (int j = 0; j < cols; ++j)
    c0 -= Rational(sol.particular[j]) * g.z_generators[j].rational_part();

  std::vector<Rational> offsets;
  for (const auto& k : sol.kernel) {
    Rational o(0);
    for (int j = 0; j < cols; ++j)
      o += Rational(k[j]) * g.z_generators[j].rational_part();
    offsets.push_back(o);
  }
  return rational_coset_hits(g.rational_part, c0, rational_gcd(offsets));
}

bool subset(const RealEmbeddedGroup& a, const RealEmbeddedGroup& b) {
  for (const auto& gen : a.z_generators)
    if (!member(b, gen)) return false;
  // Z[1/N_a] ⊆ b: infinite primes must stay infinite in N_b (the finitely
  // generated offset subgroup cannot supply unbounded p-powers); finite
  // prime powers reduce to finitely many membership checks.
  for (const auto& [p, e] : a.rational_part.exponents()) {
    if (e == exact::SupernaturalNumber::kInf) {
      if (b.rational_part.exponent(p) != exact::SupernaturalNumber::kInf)
        return false;
    } else {
      Int pe;
      mpz_pow_ui(pe.get_mpz_t(), p.get_mpz_t(), e);
      if (!member(b, SymbolicReal(exact::make_rational(1, pe)))) return false;
    }
  }
  return true;
}

bool same_set(const RealEmbeddedGroup& a, const RealEmbeddedGroup& b) {
  return subset(a, b) && subset(b, a);
}

OrderIso order_iso_decision(const RealEmbeddedGroup& g,
                            const RealEmbeddedGroup& h,
                            const RealEmbeddedGroup& sub_g,
                            const RealEmbeddedGroup& sub_h) {
  exact::merge_tables(exact::merge_tables(g.table, h.table),
                      exact::merge_tables(sub_g.table, sub_h.table));
  if (!subset(sub_g, g) || !subset(sub_h, h))
    throw PreconditionError(
        "order_iso_decision: distinguished subgroups must lie in the groups");
  OrderIso out;
  if (!same_set(g, h)) {
    out.exists = false;
    out.reason = "the unital order isomorphism would be the identity on R, "
                 "but the groups differ as subsets of R";
    return out;
  }
  if (!same_set(sub_g, sub_h)) {
    out.exists = false;
    out.reason = "groups coincide but the distinguished subgroups differ as "
                 "subsets of R";
    return out;
  }
  out.exists = true;
  out.reason = "groups and distinguished subgroups coincide as subsets of R; "
               "the identity is the (unique) unital order isomorphism";
  return out;
}

}  // namespace cantork::kgroup
