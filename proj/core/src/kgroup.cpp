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

#include "cantork/kgroup.hpp"

namespace cantork::kgroup {

std::string K0Class::str() const {
  return exact::rational_str(value) + " in Z[1/" + sys->supernatural().str() +
         "]";
}

K0Class k0_class(const SystemPtr& sys, int level, std::vector<Int> f) {
  Int m = sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(f.size())) != m)
    throw PreconditionError("k0_class: vector size must equal m_level");
  Int sum = 0;
  for (const Int& x : f) sum += x;
  K0Class out;
  out.sys = sys;
  out.value = exact::make_rational(sum, m);
  out.level = level;
  out.rep = std::move(f);
  return out;
}

K0Class k0_class_of_value(const SystemPtr& sys, Rational value) {
  if (!sys->supernatural().admits(value))
    throw PreconditionError("value " + exact::rational_str(value) +
                            " not admitted by " + sys->supernatural().str());
  K0Class out;
  out.sys = sys;
  out.value = std::move(value);
  out.level = -1;
  return out;
}

K0Compare k0_compare(const K0Class& a, const K0Class& b) {
  if (a.sys.get() != b.sys.get())
    throw PreconditionError("k0_compare: mismatched backing groups");
  K0Compare out;
  out.equal = a.value == b.value;
  out.a_positive = a.value > 0 || a.value == 0;  // cone ∪ {0}
  out.a_le_b = a.value <= b.value;               // simple group: strict order
  return out;
}

exact::SymbolicReal state_eval(const K0Class& a,
                               const cantor::InvariantMeasure& mu) {
  if (mu.sys.get() != a.sys.get())
    throw PreconditionError("state_eval: measure of a different system");
  return exact::SymbolicReal(a.value);
}

SmithK0Oracle::SmithK0Oracle(int m) {
  SmithForm s = smith_normal_form(id_minus_shift(m));
  if (s.rank != m - 1)
    throw Error("Smith oracle: unexpected rank for I - S");
  // Coker(I - S) ≅ Z read off on the last Smith coordinate: f |-> (U f)_m.
  row_.assign(static_cast<std::size_t>(m), Int(0));
  for (int j = 0; j < m; ++j) row_[j] = s.u.at(m - 1, j);
  // Fix the sign so that the order unit 1_X maps to +m (matching the
  // identification of the limit group with Z[1/N] by value).
  Int unit = 0;
  for (const Int& x : row_) unit += x;
  if (unit == 0) throw Error("Smith oracle: unit maps to zero");
  if (unit < 0)
    for (Int& x : row_) x = -x;
}

Int SmithK0Oracle::coker_coordinate(const std::vector<Int>& f) const {
  if (f.size() != row_.size())
    throw PreconditionError("Smith oracle: wrong vector size");
  Int acc = 0;
  for (std::size_t i = 0; i < f.size(); ++i) acc += row_[i] * f[i];
  return acc;
}

Mod2Class mod2_class(const SystemPtr& sys, const SignCocycle& c) {
  Mod2Class out;
  Int m = sys->multiplicity(c.level);
  out.class_value = exact::make_rational(c.sum(), m);
  cantor::SkewZ2 sk = cantor::skew_z2(sys, c);
  out.is_zero = !sk.minimal;
  out.description = "K^0/2K^0 = Z[1/N]/2Z[1/N], N = " +
                    sys->supernatural().str() + "; class of " +
                    exact::rational_str(out.class_value);
  if (out.is_zero) out.witness = sk.witness_chi;
  return out;
}

QuotientTorsion quotient_torsion(const SystemPtr& sys, const SignCocycle& c) {
  cantor::SkewZ2 sk = cantor::skew_z2(sys, c);
  if (!sk.minimal)
    throw PreconditionError(
        "quotient_torsion: [c] = 0, the skew product is not minimal");
  QuotientTorsion out;
  out.skew = sk;
  Int m_c = sys->multiplicity(c.level);
  out.f0_value = exact::make_rational(c.sum(), 2 * m_c);
  out.torsion_order = 2;
  out.quotient_description = "Z[1/" + sk.skew_odometer->supernatural().str() +
                             "] / Z[1/" + sys->supernatural().str() +
                             "] = Z_2";
  out.doubling_in_subgroup =
      sys->supernatural().admits(out.f0_value * 2);
  // Representative of f_0 on skew level-1 cylinders:
  // f_0(r) = 1 iff c at the predecessor base cylinder is 1 and sheet(r) = 0.
  Int two_m = 2 * sys->multiplicity(sk.base_level);
  out.f0_vector.assign(two_m.get_ui(), Int(0));
  for (Int r = 0; r < two_m; ++r) {
    auto [q, sheet] = sk.decompose(r, 1);
    Int prev = exact::mod_floor(q - 1, sys->multiplicity(sk.base_level));
    if (sheet == 0 && c.at(prev) == 1) out.f0_vector[r.get_ui()] = 1;
  }
  return out;
}

namespace {

// true if v is entrywise >= 0 and nonzero, i.e. certainly a nonzero
// positive class in a simple diagram.
bool positive_nonzero(const std::vector<Int>& v) {
  bool nonzero = false;
  for (const Int& x : v) {
    if (x < 0) return false;
    if (x > 0) nonzero = true;
  }
  return nonzero;
}

}  // namespace

Tri bratteli_equal(const BratteliGroup& g, BratteliElement a,
                   BratteliElement b) {
  if (a.level > b.level) std::swap(a, b);
  auto push = [&](BratteliElement& e) {
    const IntMatrix& m = g.incidence.at(static_cast<std::size_t>(e.level));
    e.vec = m.apply(e.vec);
    e.level += 1;
  };
  while (a.level < b.level) push(a);
  for (int l = a.level; l <= g.level_bound &&
                        l < static_cast<int>(g.incidence.size()) + 1;
       ++l) {
    std::vector<Int> diff(a.vec.size());
    for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = a.vec[i] - b.vec[i];
    bool zero = true;
    for (const Int& x : diff)
      if (x != 0) zero = false;
    if (zero) return Tri::Equal;
    std::vector<Int> neg(diff.size());
    for (std::size_t i = 0; i < diff.size(); ++i) neg[i] = -diff[i];
    if (positive_nonzero(diff) || positive_nonzero(neg)) return Tri::Distinct;
    if (l >= static_cast<int>(g.incidence.size())) break;
    push(a);
    push(b);
  }
  return Tri::Unknown;
}

}  // namespace cantork::kgroup
