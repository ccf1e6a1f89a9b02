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

#include "cantork/skew.hpp"

namespace cantork::cantor {

namespace {

std::uint32_t two_adic_valuation(const Int& n) {
  return static_cast<std::uint32_t>(
      mpz_scan1(n.get_mpz_t(), 0));  // n > 0: index of lowest set bit
}

}  // namespace

int SkewZ2::sheet_of(const Int& skew_residue, int skew_level) const {
  int bl = base_level_of(skew_level);
  Int two_m = 2 * base->multiplicity(bl);
  Int r = exact::mod_floor(skew_residue, two_m);
  // Sum c over one pass of r steps; c is level-`twist.level` periodic.
  Int mc = base->multiplicity(twist.level);
  Int full = r / mc;
  Int rest = r % mc;
  Int acc = full * twist.sum();
  for (Int i = 0; i < rest; ++i) acc += twist.values[i.get_ui()];
  return static_cast<int>(exact::mod_floor(acc, 2).get_ui());
}

std::pair<Int, int> SkewZ2::decompose(const Int& skew_residue,
                                      int skew_level) const {
  int bl = base_level_of(skew_level);
  Int m = base->multiplicity(bl);
  Int r = exact::mod_floor(skew_residue, 2 * m);
  return {exact::mod_floor(r, m), sheet_of(r, skew_level)};
}

Int SkewZ2::skew_residue(const Int& base_residue, int sheet,
                         int skew_level) const {
  int bl = base_level_of(skew_level);
  Int m = base->multiplicity(bl);
  Int r = exact::mod_floor(base_residue, m);
  if (sheet_of(r, skew_level) == (sheet & 1)) return r;
  // After m more steps the base residue repeats with the sheet flipped
  // (minimal case: the half-period twist sum is odd).
  return r + m;
}

SkewZ2 skew_z2(const SystemPtr& sys, const SignCocycle& c) {
  SkewZ2 out;
  out.base = sys;
  out.twist = c;
  out.base_level = std::max(1, c.level);

  const exact::SupernaturalNumber& sn = sys->supernatural();
  Int m_c = sys->multiplicity(c.level);
  // [c] = 0 in K^0/2K^0 iff (sum c)/(2 m_c) lies in Z[1/N].
  bool klass_zero =
      sn.admits(exact::make_rational(c.sum(), 2 * m_c));
  out.minimal = !klass_zero;

  if (out.minimal) {
    // Type {2 m_j}, j >= base_level.
    std::vector<Int> mults;
    int levels = std::max(sys->prefix_levels(), out.base_level);
    for (int j = out.base_level; j <= levels; ++j)
      mults.push_back(2 * sys->multiplicity(j));
    out.skew_odometer = make_odometer(std::move(mults), sys->growth());
    return out;
  }

  // Witness chi with c = chi + chi∘alpha^{-1} (mod 2): telescoping at the
  // first level L where the tower sum of c is even.
  int L = c.level;
  if (exact::mod_floor(c.sum(), 2) != 0) {
    // Need m_L/m_c even; the 2-adic valuation grows inside the prefix or at
    // the first growth step when 2 | growth.
    std::uint32_t v_c = two_adic_valuation(m_c);
    int cap = sys->prefix_levels() + 2;
    int found = -1;
    for (int j = std::max(1, c.level + 1); j <= cap; ++j) {
      if (two_adic_valuation(sys->multiplicity(j)) > v_c) {
        found = j;
        break;
      }
    }
    if (found < 0)
      throw Error("skew_z2: inconsistent mod-2 class state");
    L = found;
  }
  L = std::max(L, 1);
  Int mL = sys->multiplicity(L);
  std::vector<std::uint8_t> chi(mL.get_ui());
  std::uint8_t acc = 0;
  chi[0] = 0;
  for (Int k = 1; k < mL; ++k) {
    acc = static_cast<std::uint8_t>((acc + c.at(k)) & 1);  // chi(k)=chi(k-1)+c(k)
    chi[k.get_ui()] = acc;
  }
  // Re-substitute: c(k) == chi(k) + chi(k-1) (mod 2) for all k, cyclically.
  for (Int k = 0; k < mL; ++k) {
    Int prev = exact::mod_floor(k - 1, mL);
    if (((chi[k.get_ui()] + chi[prev.get_ui()]) & 1) != c.at(k))
      throw Error("skew_z2: witness re-verification failed");
  }
  out.witness_chi = SignCocycle::make(sys, L, std::move(chi));
  out.components =
      "two invariant clopen components: the graphs {(x, chi(x))} and "
      "{(x, chi(x)+1)} at level " +
      std::to_string(L);
  return out;
}

InducedSystem induce_system(const SystemPtr& sys, int level,
                            const Int& base_residue) {
  if (level < 1) throw PreconditionError("induce needs a level >= 1 cylinder");
  Int m_n = sys->multiplicity(level);
  if (base_residue < 0 || base_residue >= m_n)
    throw PreconditionError("cylinder residue out of range");
  std::vector<Int> mults;
  int levels = std::max(sys->prefix_levels(), level + 1);
  for (int j = level + 1; j <= levels; ++j)
    mults.push_back(sys->multiplicity(j) / m_n);
  InducedSystem out;
  out.induced = make_odometer(std::move(mults), sys->growth());
  out.return_time = m_n;
  out.from_level = level;
  out.base_residue = base_residue;
  return out;
}

}  // namespace cantork::cantor
