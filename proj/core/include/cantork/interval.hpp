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

#include <string>

#include "cantork/rational.hpp"

namespace cantork::exact {

// Closed rational interval [lo, hi].
struct Interval {
  Rational lo;
  Rational hi;

  Interval() = default;
  Interval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw PreconditionError("interval with lo > hi");
  }

  Rational width() const { return hi - lo; }
  Rational mid() const { return (lo + hi) / 2; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const {
    return lo <= other.lo && other.hi <= hi;
  }
  bool excludes_zero() const { return lo > 0 || hi < 0; }

  Interval operator+(const Interval& o) const {
    return Interval(lo + o.lo, hi + o.hi);
  }
  Interval shifted(const Rational& c) const { return Interval(lo + c, hi + c); }
  // Scaling by a rational flips endpoints for negative factors.
  Interval scaled(const Rational& c) const {
    if (c >= 0) return Interval(lo * c, hi * c);
    return Interval(hi * c, lo * c);
  }

  std::string str() const {
    return "[" + rational_str(lo) + ", " + rational_str(hi) + "]";
  }
};

}  // namespace cantork::exact
