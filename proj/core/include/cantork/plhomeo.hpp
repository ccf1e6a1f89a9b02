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

#include "cantork/odometer.hpp"
#include "cantork/symbolic.hpp"

namespace cantork::circlemaps {

using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

// Piecewise-linear circle homeomorphism, stored as the increasing lift of
// its orientation-preserving part plus a degree flag; degree -1 composes
// with lambda(t) = -t on the right: phi = F∘lambda^s.
//
// Slopes must be rational (the scalar module has no division of
// irrationals); breakpoints and values may be symbolic. Rotations are the
// one-piece slope-1 case.
class PLHomeo {
 public:
  struct Piece {
    CircleValue start;      // domain breakpoint
    SymbolicReal lift_at;   // increasing lift value at start
    Rational slope;         // > 0
  };

  static PLHomeo rotation(const CircleValue& t);
  static PLHomeo reflection();  // lambda(t) = -t
  // Orientation preserving from breakpoints/values of the lift; slopes are
  // deduced and must come out rational and positive.
  static PLHomeo increasing(std::vector<CircleValue> breakpoints,
                            std::vector<SymbolicReal> lift_values);

  int degree() const { return degree_; }
  bool is_rotation() const;
  CircleValue rotation_amount() const;  // valid for slope-1 single piece

  CircleValue apply(const CircleValue& t) const;
  // Lift evaluation: F(x) for a real argument given as SymbolicReal.
  SymbolicReal lift(const SymbolicReal& x) const;

  PLHomeo inverse() const;
  static PLHomeo compose(const PLHomeo& outer, const PLHomeo& inner);
  PLHomeo with_degree_flip() const;  // this ∘ lambda

  const std::vector<Piece>& pieces() const { return pieces_; }

  // min over t of |phi(t) - t| in T together with the same for the inverse;
  // zero iff the (degree +1) map has a fixed point.
  SymbolicReal min_displacement() const;
  bool has_fixed_point() const;

  std::string str() const;

 private:
  PLHomeo() = default;
  std::vector<Piece> pieces_;  // cyclically ordered by start in [0,1)
  int degree_ = 1;             // +1 or -1

  void validate() const;
  // Index of the piece containing t, plus the local offset t - start.
  std::pair<std::size_t, SymbolicReal> locate(const CircleValue& t) const;
};

// x -> phi_x, locally constant at `level`.
struct PLCocycle {
  cantor::SystemPtr sys;
  int level = 0;
  std::vector<PLHomeo> maps;

  static PLCocycle constant(cantor::SystemPtr sys, PLHomeo phi);
  static PLCocycle make(cantor::SystemPtr sys, int level,
                        std::vector<PLHomeo> maps);

  const PLHomeo& at(const Int& residue) const;
  bool all_degree_one() const;
  cantor::SignCocycle orientation_cocycle() const;  // o(phi)
};

}  // namespace cantork::circlemaps
