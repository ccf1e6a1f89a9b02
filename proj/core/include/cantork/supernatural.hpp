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

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cantork/rational.hpp"

namespace cantork::exact {

// Formal product of primes with exponents in N ∪ {∞}; the canonical
// invariant of odometer K^0 groups (Z[1/N] = rationals whose reduced
// denominator divides N).
class SupernaturalNumber {
 public:
  static constexpr std::uint32_t kInf = UINT32_MAX;

  SupernaturalNumber() = default;  // the supernatural number 1

  static SupernaturalNumber from_integer(const Int& n);
  // sup of the factorizations of m_1 | m_2 | ... together with growth^inf
  // for the declared lazy extension m_{n+1} = growth * m_n.
  static SupernaturalNumber odometer_type(std::span<const Int> mults,
                                          const Int& growth);

  // Exponent of `prime` (kInf for infinity, 0 if absent).
  std::uint32_t exponent(const Int& prime) const;

  bool divides(const SupernaturalNumber& other) const;
  bool operator==(const SupernaturalNumber& o) const { return exps_ == o.exps_; }
  bool operator!=(const SupernaturalNumber& o) const { return !(*this == o); }

  // True iff the reduced denominator of q divides this number, i.e.
  // q ∈ Z[1/N]. Needs no factorization of q's denominator.
  bool admits(const Rational& q) const;

  // What remains of d > 0 after stripping every divisor this number admits
  // (p^min(v_p(d), exponent) for each prime p of the description).
  Int residual(Int d) const;

  // N * k for a positive integer k (used for the 2N of skew products).
  SupernaturalNumber times(const Int& k) const;

  bool is_one() const { return exps_.empty(); }
  const std::map<Int, std::uint32_t>& exponents() const { return exps_; }

  // e.g. "2 * 3^inf", "1", "2^inf".
  std::string str() const;

 private:
  std::map<Int, std::uint32_t> exps_;
};

// Prime factorization by trial division (then a primality check for the
// remainder). Throws for composites beyond the trial-division range.
std::map<Int, std::uint32_t> factorize(Int n);

}  // namespace cantork::exact
