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
#include <vector>

#include "cantork/skew.hpp"
#include "cantork/smith.hpp"

namespace cantork::kgroup {

using cantor::SignCocycle;
using cantor::SystemPtr;
using exact::Int;
using exact::Rational;

// Element of K^0(X, alpha) = C(X,Z)/{f - f∘alpha^{-1}} for an odometer.
// Fast path: the class of a level-n vector f is the rational (sum f)/m_n in
// Z[1/N]; the (level, vector) representative is kept for reports and for
// cross-checking against the Smith-normal-form route.
struct K0Class {
  SystemPtr sys;
  Rational value;
  int level = 0;
  std::vector<Int> rep;

  std::string str() const;
};

K0Class k0_class(const SystemPtr& sys, int level, std::vector<Int> f);
K0Class k0_class_of_value(const SystemPtr& sys, Rational value);

struct K0Compare {
  bool equal = false;
  bool a_positive = false;  // value > 0, or a == 0 (the cone includes 0)
  bool a_le_b = false;
};

K0Compare k0_compare(const K0Class& a, const K0Class& b);

exact::SymbolicReal state_eval(const K0Class& a,
                               const cantor::InvariantMeasure& mu);

// Independent route for tests: the class of f in Z^m/Im(I - S) computed via
// the Smith normal form, identified with Z through the (sign-fixed) last
// Smith coordinate. Returns the image of the level-n vector under that
// identification; the fast path must satisfy value == result / m_n.
struct SmithK0Oracle {
  explicit SmithK0Oracle(int m);
  Int coker_coordinate(const std::vector<Int>& f) const;

 private:
  std::vector<Int> row_;  // the rank-one projection row, sign-fixed
};

// [o(phi)] in K^0/2K^0 ≅ Z[1/N]/2Z[1/N]. Zero iff (sum c)/(2 m_level) is
// admitted by N; a witness chi with c = chi + chi∘alpha^{-1} (mod 2) is
// produced in that case.
struct Mod2Class {
  bool is_zero = false;
  Rational class_value;  // (sum c)/m_level
  std::optional<SignCocycle> witness;
  std::string description;
};

Mod2Class mod2_class(const SystemPtr& sys, const SignCocycle& c);

// K^0(X x Z_2, alpha x c) / K^0(X, alpha) for [c] != 0: concretely
// Z[1/2N]/Z[1/N] ≅ Z_2, with torsion element the class of
// f_0(x,k) = [c(alpha^{-1} x) = 1 and k = 0].
struct QuotientTorsion {
  cantor::SkewZ2 skew;
  std::string quotient_description;
  Int torsion_order;
  Rational f0_value;        // class of f_0 in K^0(skew) = Z[1/2N]
  std::vector<Int> f0_vector;  // representative on skew level-1 cylinders
  bool doubling_in_subgroup = false;  // 2*[f_0] ∈ K^0(X, alpha)
};

QuotientTorsion quotient_torsion(const SystemPtr& sys, const SignCocycle& c);

// Direct-limit group of a Bratteli diagram, used only for bounded
// equality/positivity queries; answers are three-valued.
enum class Tri { Equal, Distinct, Unknown };

struct BratteliGroup {
  std::vector<IntMatrix> incidence;  // map level k -> level k+1
  int level_bound = 16;
};

struct BratteliElement {
  int level = 0;
  std::vector<Int> vec;
};

Tri bratteli_equal(const BratteliGroup& g, BratteliElement a,
                   BratteliElement b);

}  // namespace cantork::kgroup
