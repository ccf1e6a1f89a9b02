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
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantork/interval.hpp"
#include "cantork/rational.hpp"

namespace cantork::exact {

inline constexpr unsigned kDefaultSignBudget = 64;

// Table of irrational generators, each backed by an oracle producing nested
// rational intervals whose widths at least halve per refinement step.
//
// The generators are *declared* Q-linearly independent together with 1; the
// library trusts the declaration and every "exact" answer is conditional on
// it. The table is append-only; refinement caches are synchronized, so a
// shared table is safe for concurrent readers.
class GeneratorTable {
 public:
  using Id = std::uint32_t;

  GeneratorTable() = default;
  GeneratorTable(const GeneratorTable&) = delete;
  GeneratorTable& operator=(const GeneratorTable&) = delete;

  // sqrt(radicand) for a positive rational that is not a rational square;
  // refined by interval bisection.
  Id add_sqrt(std::string name, Rational radicand);
  // (sqrt(5)-1)/2, refined along continued-fraction convergents F_k/F_{k+1}.
  Id add_golden_ratio(std::string name);
  // User-supplied nested interval stream. Stages must nest and halve;
  // refinement past the last stage throws BudgetExhausted.
  Id add_stream(std::string name, std::vector<Interval> stages);

  std::size_t size() const;
  std::string name(Id id) const;
  std::optional<Id> find(std::string_view name) const;

  // Enclosure after `depth` refinement steps (depth 0 = initial interval).
  Interval enclosure(Id id, std::size_t depth) const;

  std::string describe(Id id) const;

 private:
  enum class Kind { Sqrt, Golden, Stream };
  struct Entry {
    std::string name;
    Kind kind;
    Rational radicand;             // Sqrt
    Int fib_p0, fib_q0, fib_p1, fib_q1;  // Golden: consecutive convergents
    std::vector<Interval> cache;   // refinements computed so far
    std::size_t stream_limit = 0;  // Stream: fixed stage count
  };

  void refine_one(Entry& e) const;
  std::optional<Id> find_locked(std::string_view name) const;

  mutable std::mutex mu_;
  std::vector<Entry> entries_;
};

using TablePtr = std::shared_ptr<GeneratorTable>;

// Element of Q + theta_1 Q + ... + theta_k Q over the generators of one
// table. Immutable value type; arithmetic is exact and coefficientwise.
class SymbolicReal {
 public:
  SymbolicReal() : c0_(0) {}
  SymbolicReal(Rational c) : c0_(std::move(c)) {}       // NOLINT(runtime/explicit)
  SymbolicReal(int c) : c0_(c) {}                        // NOLINT(runtime/explicit)
  SymbolicReal(TablePtr table, Rational c0,
               std::map<GeneratorTable::Id, Rational> coeffs);

  static SymbolicReal generator(TablePtr table, GeneratorTable::Id id,
                                Rational coeff = 1);

  const Rational& rational_part() const { return c0_; }
  const std::map<GeneratorTable::Id, Rational>& coefficients() const {
    return coeffs_;
  }
  const TablePtr& table() const { return table_; }
  bool is_rational() const { return coeffs_.empty(); }
  // Valid only when is_rational().
  const Rational& as_rational() const;

  bool is_zero() const { return coeffs_.empty() && c0_ == 0; }

  SymbolicReal operator-() const;
  SymbolicReal operator+(const SymbolicReal& o) const;
  SymbolicReal operator-(const SymbolicReal& o) const;
  SymbolicReal scaled(const Rational& c) const;

  // Equality of values == equality of coefficient vectors (declared
  // independence). Requires compatible tables.
  bool operator==(const SymbolicReal& o) const;
  bool operator!=(const SymbolicReal& o) const { return !(*this == o); }

  Interval enclosure(std::size_t depth) const;

  // {-1, 0, +1}. Exact: 0 iff the coefficient vector is zero; otherwise
  // refines enclosures until 0 is excluded. Throws BudgetExhausted with the
  // last enclosure if the budget runs out (caller may retry larger).
  int sign(unsigned budget = kDefaultSignBudget) const;

  // Exact floor; for irrational values refines until the enclosure pins a
  // single integer.
  Int floor(unsigned budget = kDefaultSignBudget) const;

  std::string str() const;

 private:
  void normalize();

  TablePtr table_;  // null when purely rational
  Rational c0_;
  std::map<GeneratorTable::Id, Rational> coeffs_;
};

// Merges the tables of two operands; throws PreconditionError on mismatch.
TablePtr merge_tables(const TablePtr& a, const TablePtr& b);

// Unique integer z with |a - z| < 1/2; throws PreconditionError("tie at
// 1/2") when a is exactly a half-integer.
Int nearest_integer(const SymbolicReal& a,
                    unsigned budget = kDefaultSignBudget);

// Point of T = R/Z with canonical representative in [0, 1).
class CircleValue {
 public:
  CircleValue() : rep_(Rational(0)) {}
  CircleValue(Rational r) : CircleValue(reduce(SymbolicReal(std::move(r)))) {}  // NOLINT

  // Canonicalizes: subtracts the floor, then verifies 0 <= rep < 1 by sign
  // tests.
  static CircleValue reduce(const SymbolicReal& x,
                            unsigned budget = kDefaultSignBudget);

  const SymbolicReal& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }
  bool is_rational() const { return rep_.is_rational(); }

  CircleValue operator+(const CircleValue& o) const;
  CircleValue operator-(const CircleValue& o) const;
  CircleValue negated() const;
  CircleValue scaled(const Int& n) const;
  CircleValue scaled(const Rational& q) const;  // value * q, reduced

  bool operator==(const CircleValue& o) const { return rep_ == o.rep_; }
  bool operator!=(const CircleValue& o) const { return !(*this == o); }

  // |t| = distance to 0 in T = min(rep, 1 - rep).
  SymbolicReal distance_to_zero(unsigned budget = kDefaultSignBudget) const;

  // Lift in (-1/2, 1/2]: rep when rep <= 1/2, else rep - 1.
  SymbolicReal centered_lift(unsigned budget = kDefaultSignBudget) const;

  std::string str() const { return rep_.str(); }

 private:
  explicit CircleValue(SymbolicReal canonical) : rep_(std::move(canonical)) {}
  SymbolicReal rep_;  // invariant: 0 <= rep < 1
};

// True iff lo < v < hi, decided exactly.
bool in_open_band(const SymbolicReal& v, const Rational& lo,
                  const Rational& hi, unsigned budget = kDefaultSignBudget);

// Textual encoding "p/q [+ p/q*name]...": parser and printer used by the
// scenario format. Names resolve against `table`; a bare name means
// coefficient 1.
SymbolicReal parse_symbolic(std::string_view text, const TablePtr& table);

}  // namespace cantork::exact
