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

#include "cantork/supernatural.hpp"

#include <algorithm>
#include <sstream>

namespace cantork::exact {

std::map<Int, std::uint32_t> factorize(Int n) {
  if (n <= 0) throw PreconditionError("factorize needs a positive integer");
  std::map<Int, std::uint32_t> out;
  auto strip = [&](const Int& p) {
    std::uint32_t e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      n /= p;
      ++e;
    }
    if (e) out[p] = e;
  };
  strip(2);
  for (Int p = 3; p * p <= n && p < 1000000; p += 2) strip(p);
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 40)) {
      out[n] += 1;
    } else {
      throw Error("factorize: composite remainder " + n.get_str() +
                  " beyond trial-division range");
    }
  }
  return out;
}

SupernaturalNumber SupernaturalNumber::from_integer(const Int& n) {
  SupernaturalNumber s;
  s.exps_ = factorize(n);
  return s;
}

SupernaturalNumber SupernaturalNumber::odometer_type(std::span<const Int> mults,
                                                     const Int& growth) {
  SupernaturalNumber s;
  for (const Int& m : mults)
    for (const auto& [p, e] : factorize(m)) {
      auto it = s.exps_.find(p);
      if (it == s.exps_.end())
        s.exps_[p] = e;
      else if (it->second != kInf)
        it->second = std::max(it->second, e);
    }
  if (growth > 1)
    for (const auto& [p, e] : factorize(growth)) s.exps_[p] = kInf;
  return s;
}

std::uint32_t SupernaturalNumber::exponent(const Int& prime) const {
  auto it = exps_.find(prime);
  return it == exps_.end() ? 0 : it->second;
}

bool SupernaturalNumber::divides(const SupernaturalNumber& other) const {
  for (const auto& [p, e] : exps_) {
    std::uint32_t eo = other.exponent(p);
    if (e == kInf && eo != kInf) return false;
    if (e != kInf && eo != kInf && e > eo) return false;
  }
  return true;
}

Int SupernaturalNumber::residual(Int d) const {
  if (d <= 0) throw PreconditionError("residual needs a positive integer");
  for (const auto& [p, e] : exps_) {
    if (d == 1) break;
    std::uint32_t stripped = 0;
    while ((e == kInf || stripped < e) &&
           mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t())) {
      d /= p;
      ++stripped;
    }
  }
  return d;
}

bool SupernaturalNumber::admits(const Rational& q) const {
  return residual(q.get_den()) == 1;
}

SupernaturalNumber SupernaturalNumber::times(const Int& k) const {
  SupernaturalNumber s(*this);
  for (const auto& [p, e] : factorize(k)) {
    auto it = s.exps_.find(p);
    if (it == s.exps_.end())
      s.exps_[p] = e;
    else if (it->second != kInf)
      it->second += e;
  }
  return s;
}

std::string SupernaturalNumber::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream out;
  bool first = true;
  for (const auto& [p, e] : exps_) {
    if (!first) out << " * ";
    first = false;
    out << p.get_str();
    if (e == kInf)
      out << "^inf";
    else if (e != 1)
      out << "^" << e;
  }
  return out.str();
}

}  // namespace cantork::exact
