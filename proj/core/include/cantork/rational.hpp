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

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "cantork/errors.hpp"

namespace cantork::exact {

using Int = mpz_class;
using Rational = mpq_class;

inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int mod_floor(const Int& a, const Int& b) {
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Int rational_floor(const Rational& q) {
  return floor_div(q.get_num(), q.get_den());
}

// mpq_class from num/den, canonicalized.
inline Rational make_rational(const Int& num, const Int& den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// "p" or "p/q"; no whitespace.
std::string rational_str(const Rational& q);

// Parses "p", "p/q", with optional leading '-'. Throws on malformed input.
Rational parse_rational(std::string_view text);

inline std::string int_str(const Int& n) { return n.get_str(); }

}  // namespace cantork::exact
