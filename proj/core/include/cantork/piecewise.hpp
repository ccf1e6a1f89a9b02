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

#include <vector>

#include "cantork/plhomeo.hpp"
#include "cantork/symbolic.hpp"

namespace cantork::crossed {

using circlemaps::PLHomeo;
using exact::CircleValue;
using exact::Rational;
using exact::SymbolicReal;

// Polynomial with exact symbolic coefficients in one local variable.
struct Poly {
  std::vector<SymbolicReal> c;  // c[0] + c[1] s + c[2] s^2 + ...

  static Poly constant(SymbolicReal v);
  static Poly linear(SymbolicReal a0, SymbolicReal a1);

  bool is_zero() const;
  bool is_constant() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  // p(a + b s) expanded.
  Poly compose_affine(const SymbolicReal& a, const Rational& b) const;
  // definite integral over [0, len] for rational len (any degree) or
  // constant polynomials (symbolic len).
  SymbolicReal integral(const SymbolicReal& len) const;
  SymbolicReal eval(const SymbolicReal& s) const;
};

// Function on the circle, piecewise polynomial in the local coordinate
// s = t - breakpoint. Breakpoints are exact circle values; the piece list is
// cyclically sorted; piece i lives on the arc from bks[i] to bks[i+1]
// (wrapping at the end).
class CirclePiecewise {
 public:
  CirclePiecewise();  // identically zero
  static CirclePiecewise constant(SymbolicReal v);
  static CirclePiecewise from_pieces(std::vector<CircleValue> breakpoints,
                                     std::vector<Poly> pieces);

  const std::vector<CircleValue>& breakpoints() const { return bks_; }
  const std::vector<Poly>& pieces() const { return pieces_; }

  // f(t + c): breakpoints rotate by -c, local polynomials unchanged.
  CirclePiecewise composed_shift(const CircleValue& c) const;
  // f(phi(t)) for an orientation-preserving PL map with rational slopes.
  CirclePiecewise composed_pl(const PLHomeo& phi) const;

  CirclePiecewise operator+(const CirclePiecewise& o) const;
  CirclePiecewise operator-(const CirclePiecewise& o) const;
  CirclePiecewise operator*(const CirclePiecewise& o) const;
  CirclePiecewise scaled(const Rational& c) const;  // no breakpoint changes

  bool is_zero() const;
  SymbolicReal integral() const;  // over the whole circle
  SymbolicReal eval(const CircleValue& t) const;

  // True iff some common-refinement arc carries a nonzero piece of both
  // functions (used for product-vanishing checks g * h = 0 without forming
  // products).
  static bool overlapping_support(const CirclePiecewise& a,
                                  const CirclePiecewise& b);
  // True iff b vanishes identically on every arc where a is not identically
  // zero.
  static bool vanishes_on_support(const CirclePiecewise& a,
                                  const CirclePiecewise& b);

 private:
  // Arc length from bks_[i] to the next breakpoint.
  SymbolicReal arc_len(std::size_t i) const;
  static CirclePiecewise merge(const CirclePiecewise& a,
                               const CirclePiecewise& b,
                               int mode);  // 0:+ 1:- 2:*

  std::vector<CircleValue> bks_;
  std::vector<Poly> pieces_;
};

}  // namespace cantork::crossed
