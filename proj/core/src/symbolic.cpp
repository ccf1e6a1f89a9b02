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

#include "cantork/symbolic.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cantork::exact {

std::string rational_str(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  s.erase(std::remove_if(s.begin(), s.end(),
                         [](unsigned char c) { return std::isspace(c); }),
          s.end());
  if (s.empty()) throw PreconditionError("empty rational literal");
  try {
    Rational q(s);
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw PreconditionError("malformed rational literal: '" + std::string(text) +
                            "'");
  }
}

// --- GeneratorTable ---------------------------------------------------------

namespace {

bool is_rational_square(const Rational& r, Rational* root) {
  if (r < 0) return false;
  const Int& num = r.get_num();
  const Int& den = r.get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) &&
      mpz_perfect_square_p(den.get_mpz_t())) {
    Int sn, sd;
    mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
    if (root) *root = make_rational(sn, sd);
    return true;
  }
  return false;
}

}  // namespace

GeneratorTable::Id GeneratorTable::add_sqrt(std::string name,
                                            Rational radicand) {
  if (radicand <= 0)
    throw PreconditionError("sqrt generator needs a positive radicand");
  if (is_rational_square(radicand, nullptr))
    throw PreconditionError("sqrt(" + rational_str(radicand) +
                            ") is rational; not a valid generator");
  std::lock_guard<std::mutex> lock(mu_);
  if (find_locked(name)) throw PreconditionError("duplicate generator name");
  Entry e;
  e.name = std::move(name);
  e.kind = Kind::Sqrt;
  e.radicand = std::move(radicand);
  // Initial bracket [s, s+1] around sqrt from the integer square root of
  // floor(radicand); widened to [0, r+1] when radicand < 1 keeps lo^2 <= r.
  Int fl = rational_floor(e.radicand);
  Int s;
  mpz_sqrt(s.get_mpz_t(), fl.get_mpz_t());
  Rational lo(s), hi(s + 1);
  if (lo * lo > e.radicand) lo = 0;
  e.cache.emplace_back(lo, hi);
  entries_.push_back(std::move(e));
  return static_cast<Id>(entries_.size() - 1);
}

GeneratorTable::Id GeneratorTable::add_golden_ratio(std::string name) {
  std::lock_guard<std::mutex> lock(mu_);
  if (find_locked(name)) throw PreconditionError("duplicate generator name");
  Entry e;
  e.name = std::move(name);
  e.kind = Kind::Golden;
  // Convergents of [0;1,1,1,...]: 1/1, 1/2, 2/3, 3/5, ...
  e.fib_p0 = 1;
  e.fib_q0 = 1;
  e.fib_p1 = 1;
  e.fib_q1 = 2;
  e.cache.emplace_back(make_rational(e.fib_p1, e.fib_q1),
                       make_rational(e.fib_p0, e.fib_q0));
  entries_.push_back(std::move(e));
  return static_cast<Id>(entries_.size() - 1);
}

GeneratorTable::Id GeneratorTable::add_stream(std::string name,
                                              std::vector<Interval> stages) {
  if (stages.empty())
    throw PreconditionError("stream generator needs at least one interval");
  for (std::size_t i = 1; i < stages.size(); ++i) {
    if (!stages[i - 1].contains(stages[i]))
      throw PreconditionError("stream stages must be nested");
    if (stages[i].width() * 2 > stages[i - 1].width())
      throw PreconditionError("stream stage widths must at least halve");
  }
  std::lock_guard<std::mutex> lock(mu_);
  if (find_locked(name)) throw PreconditionError("duplicate generator name");
  Entry e;
  e.name = std::move(name);
  e.kind = Kind::Stream;
  e.stream_limit = stages.size();
  e.cache = std::move(stages);
  entries_.push_back(std::move(e));
  return static_cast<Id>(entries_.size() - 1);
}

std::size_t GeneratorTable::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.size();
}

std::string GeneratorTable::name(Id id) const {
  std::lock_guard<std::mutex> lock(mu_);
  return entries_.at(id).name;
}

std::optional<GeneratorTable::Id> GeneratorTable::find(
    std::string_view name) const {
  std::lock_guard<std::mutex> lock(mu_);
  return find_locked(name);
}

std::optional<GeneratorTable::Id> GeneratorTable::find_locked(
    std::string_view name) const {
  for (std::size_t i = 0; i < entries_.size(); ++i)
    if (entries_[i].name == name) return static_cast<Id>(i);
  return std::nullopt;
}

void GeneratorTable::refine_one(Entry& e) const {
  switch (e.kind) {
    case Kind::Sqrt: {
      const Interval& last = e.cache.back();
      Rational mid = last.mid();
      if (mid * mid < e.radicand) {
        e.cache.emplace_back(mid, last.hi);
      } else {
        // Never equal: the radicand is not a rational square.
        e.cache.emplace_back(last.lo, mid);
      }
      break;
    }
    case Kind::Golden: {
      Int p2 = e.fib_p0 + e.fib_p1;
      Int q2 = e.fib_q0 + e.fib_q1;
      e.fib_p0 = e.fib_p1;
      e.fib_q0 = e.fib_q1;
      e.fib_p1 = p2;
      e.fib_q1 = q2;
      Rational a = make_rational(e.fib_p0, e.fib_q0);
      Rational b = make_rational(e.fib_p1, e.fib_q1);
      e.cache.emplace_back(std::min(a, b), std::max(a, b));
      break;
    }
    case Kind::Stream:
      throw BudgetExhausted("stream generator '" + e.name + "' exhausted",
                            "deepest interval " + e.cache.back().str());
  }
}

Interval GeneratorTable::enclosure(Id id, std::size_t depth) const {
  std::lock_guard<std::mutex> lock(mu_);
  Entry& e = const_cast<Entry&>(entries_.at(id));
  while (e.cache.size() <= depth) refine_one(e);
  return e.cache[depth];
}

std::string GeneratorTable::describe(Id id) const {
  std::lock_guard<std::mutex> lock(mu_);
  const Entry& e = entries_.at(id);
  switch (e.kind) {
    case Kind::Sqrt:
      return e.name + " = sqrt(" + rational_str(e.radicand) + ")";
    case Kind::Golden:
      return e.name + " = (sqrt(5)-1)/2";
    case Kind::Stream:
      return e.name + " = stream(" + std::to_string(e.stream_limit) +
             " stages)";
  }
  return e.name;
}

// --- SymbolicReal ------------------------------------------------------------

TablePtr merge_tables(const TablePtr& a, const TablePtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a.get() != b.get())
    throw PreconditionError("mismatched generator tables");
  return a;
}

SymbolicReal::SymbolicReal(TablePtr table, Rational c0,
                           std::map<GeneratorTable::Id, Rational> coeffs)
    : table_(std::move(table)), c0_(std::move(c0)), coeffs_(std::move(coeffs)) {
  normalize();
  if (!coeffs_.empty() && !table_)
    throw PreconditionError("generator coefficients without a table");
}

SymbolicReal SymbolicReal::generator(TablePtr table, GeneratorTable::Id id,
                                     Rational coeff) {
  std::map<GeneratorTable::Id, Rational> c;
  c.emplace(id, std::move(coeff));
  return SymbolicReal(std::move(table), Rational(0), std::move(c));
}

void SymbolicReal::normalize() {
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    if (it->second == 0)
      it = coeffs_.erase(it);
    else
      ++it;
  }
}

const Rational& SymbolicReal::as_rational() const {
  if (!is_rational())
    throw PreconditionError("value has irrational coordinates");
  return c0_;
}

SymbolicReal SymbolicReal::operator-() const {
  SymbolicReal r(*this);
  r.c0_ = -r.c0_;
  for (auto& [id, c] : r.coeffs_) c = -c;
  return r;
}

SymbolicReal SymbolicReal::operator+(const SymbolicReal& o) const {
  SymbolicReal r;
  r.table_ = merge_tables(table_, o.table_);
  r.c0_ = c0_ + o.c0_;
  r.coeffs_ = coeffs_;
  for (const auto& [id, c] : o.coeffs_) {
    auto [it, inserted] = r.coeffs_.emplace(id, c);
    if (!inserted) it->second += c;
  }
  r.normalize();
  return r;
}

SymbolicReal SymbolicReal::operator-(const SymbolicReal& o) const {
  return *this + (-o);
}

SymbolicReal SymbolicReal::scaled(const Rational& c) const {
  SymbolicReal r(*this);
  r.c0_ *= c;
  for (auto& [id, k] : r.coeffs_) k *= c;
  r.normalize();
  return r;
}

bool SymbolicReal::operator==(const SymbolicReal& o) const {
  if (!coeffs_.empty() && !o.coeffs_.empty()) merge_tables(table_, o.table_);
  return c0_ == o.c0_ && coeffs_ == o.coeffs_;
}

Interval SymbolicReal::enclosure(std::size_t depth) const {
  Interval acc(c0_, c0_);
  for (const auto& [id, c] : coeffs_) {
    acc = acc + table_->enclosure(id, depth).scaled(c);
  }
  return acc;
}

int SymbolicReal::sign(unsigned budget) const {
  if (coeffs_.empty()) return sgn(c0_);
  if (budget < 1) throw PreconditionError("sign budget must be >= 1");
  Interval last;
  for (unsigned d = 0; d <= budget; ++d) {
    last = enclosure(d);
    if (last.lo > 0) return 1;
    if (last.hi < 0) return -1;
  }
  throw BudgetExhausted("sign undecided for " + str(),
                        "last enclosure " + last.str());
}

Int SymbolicReal::floor(unsigned budget) const {
  if (coeffs_.empty()) return rational_floor(c0_);
  Interval last;
  for (unsigned d = 0; d <= budget; ++d) {
    last = enclosure(d);
    Int fl = rational_floor(last.lo);
    Int fh = rational_floor(last.hi);
    if (fl == fh) return fl;
  }
  throw BudgetExhausted("floor undecided for " + str(),
                        "last enclosure " + last.str());
}

std::string SymbolicReal::str() const {
  std::ostringstream out;
  bool wrote = false;
  if (c0_ != 0 || coeffs_.empty()) {
    out << rational_str(c0_);
    wrote = true;
  }
  for (const auto& [id, c] : coeffs_) {
    if (wrote) {
      out << (c >= 0 ? " + " : " - ");
      Rational a = abs(c);
      if (a == 1)
        out << table_->name(id);
      else
        out << rational_str(a) << "*" << table_->name(id);
    } else {
      if (c == 1)
        out << table_->name(id);
      else if (c == -1)
        out << "-" << table_->name(id);
      else
        out << rational_str(c) << "*" << table_->name(id);
      wrote = true;
    }
  }
  return out.str();
}

Int nearest_integer(const SymbolicReal& a, unsigned budget) {
  Int z;
  if (a.is_rational()) {
    z = rational_floor(a.as_rational() + Rational(1, 2));
  } else {
    z = (a + SymbolicReal(Rational(1, 2))).floor(budget);
  }
  // Verify |a - z| < 1/2 exactly; step z when the coarse guess is off.
  for (int attempts = 0; attempts < 3; ++attempts) {
    SymbolicReal up = a - SymbolicReal(Rational(z)) + Rational(1, 2);
    SymbolicReal dn = a - SymbolicReal(Rational(z)) - Rational(1, 2);
    if (up.is_zero() || dn.is_zero())
      throw PreconditionError("tie at 1/2");
    int su = up.sign(budget);
    int sd = dn.sign(budget);
    if (su > 0 && sd < 0) return z;
    if (sd > 0)
      z += 1;
    else
      z -= 1;
  }
  throw Error("nearest_integer failed to stabilize");
}

// --- CircleValue -------------------------------------------------------------

CircleValue CircleValue::reduce(const SymbolicReal& x, unsigned budget) {
  Int k = x.floor(budget);
  SymbolicReal rep = x - SymbolicReal(Rational(k));
  // Canonical representative verified by sign tests.
  if (rep.sign(budget) < 0 || (rep - SymbolicReal(Rational(1))).sign(budget) >= 0)
    throw Error("circle reduction failed for " + x.str());
  return CircleValue(std::move(rep));
}

CircleValue CircleValue::operator+(const CircleValue& o) const {
  return reduce(rep_ + o.rep_);
}

CircleValue CircleValue::operator-(const CircleValue& o) const {
  return reduce(rep_ - o.rep_);
}

CircleValue CircleValue::negated() const { return reduce(-rep_); }

CircleValue CircleValue::scaled(const Int& n) const {
  return reduce(rep_.scaled(Rational(n)));
}

CircleValue CircleValue::scaled(const Rational& q) const {
  return reduce(rep_.scaled(q));
}

SymbolicReal CircleValue::distance_to_zero(unsigned budget) const {
  if (rep_.is_zero()) return SymbolicReal();
  SymbolicReal other = SymbolicReal(Rational(1)) - rep_;
  // rep in (0,1): pick min(rep, 1-rep).
  return (rep_ - other).sign(budget) <= 0 ? rep_ : other;
}

SymbolicReal CircleValue::centered_lift(unsigned budget) const {
  if (rep_.is_zero()) return rep_;
  SymbolicReal gap = rep_ - SymbolicReal(Rational(1, 2));
  if (gap.is_zero()) return rep_;  // exactly 1/2 stays 1/2
  return gap.sign(budget) < 0 ? rep_ : rep_ - SymbolicReal(Rational(1));
}

bool in_open_band(const SymbolicReal& v, const Rational& lo, const Rational& hi,
                  unsigned budget) {
  SymbolicReal a = v - SymbolicReal(lo);
  SymbolicReal b = SymbolicReal(hi) - v;
  if (a.is_zero() || b.is_zero()) return false;
  return a.sign(budget) > 0 && b.sign(budget) > 0;
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Term {
  Rational coeff;
  std::string name;  // empty: pure rational term
};

std::vector<Term> tokenize_terms(std::string_view text) {
  std::string s(text);
  std::vector<Term> terms;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip_ws();
  if (i >= s.size()) throw PreconditionError("empty symbolic literal");
  bool first = true;
  while (i < s.size()) {
    int sign = 1;
    skip_ws();
    if (!first) {
      if (s[i] == '+')
        ++i;
      else if (s[i] == '-') {
        sign = -1;
        ++i;
      } else
        throw PreconditionError("expected '+' or '-' in symbolic literal: '" +
                                s + "'");
      skip_ws();
    } else if (s[i] == '-') {
      sign = -1;
      ++i;
      skip_ws();
    }
    first = false;
    // number part, then optional [*] name
    std::size_t start = i;
    while (i < s.size() &&
           (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/'))
      ++i;
    std::string num = s.substr(start, i - start);
    skip_ws();
    std::string name;
    if (i < s.size() && (s[i] == '*' || std::isalpha(static_cast<unsigned char>(s[i])) ||
                         s[i] == '_')) {
      if (s[i] == '*') {
        ++i;
        skip_ws();
      }
      std::size_t ns = i;
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                              s[i] == '_'))
        ++i;
      name = s.substr(ns, i - ns);
      if (name.empty())
        throw PreconditionError("expected generator name in '" + s + "'");
    }
    Rational coeff = num.empty() ? Rational(1) : parse_rational(num);
    if (num.empty() && name.empty())
      throw PreconditionError("malformed symbolic literal: '" + s + "'");
    terms.push_back({sign < 0 ? Rational(-coeff) : coeff, name});
    skip_ws();
  }
  return terms;
}

}  // namespace

SymbolicReal parse_symbolic(std::string_view text, const TablePtr& table) {
  Rational c0(0);
  std::map<GeneratorTable::Id, Rational> coeffs;
  for (const Term& t : tokenize_terms(text)) {
    if (t.name.empty()) {
      c0 += t.coeff;
    } else {
      if (!table)
        throw PreconditionError("generator '" + t.name +
                                "' used without a generator table");
      auto id = table->find(t.name);
      if (!id)
        throw PreconditionError("unknown generator '" + t.name + "'");
      coeffs[*id] += t.coeff;
    }
  }
  TablePtr tbl = coeffs.empty() ? nullptr : table;
  return SymbolicReal(std::move(tbl), std::move(c0), std::move(coeffs));
}

}  // namespace cantork::exact
