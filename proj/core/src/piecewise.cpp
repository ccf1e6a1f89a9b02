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

#include "cantork/piecewise.hpp"

#include <algorithm>

namespace cantork::crossed {

// --- Poly --------------------------------------------------------------------

Poly Poly::constant(SymbolicReal v) {
  Poly p;
  if (!v.is_zero()) p.c.push_back(std::move(v));
  return p;
}

Poly Poly::linear(SymbolicReal a0, SymbolicReal a1) {
  Poly p;
  p.c = {std::move(a0), std::move(a1)};
  while (!p.c.empty() && p.c.back().is_zero()) p.c.pop_back();
  return p;
}

bool Poly::is_zero() const {
  for (const auto& x : c)
    if (!x.is_zero()) return false;
  return true;
}

bool Poly::is_constant() const {
  for (std::size_t i = 1; i < c.size(); ++i)
    if (!c[i].is_zero()) return false;
  return true;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r;
  r.c.resize(std::max(c.size(), o.c.size()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (i < c.size()) r.c[i] = r.c[i] + c[i];
    if (i < o.c.size()) r.c[i] = r.c[i] + o.c[i];
  }
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly neg = o;
  for (auto& x : neg.c) x = -x;
  return *this + neg;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r;
  if (c.empty() || o.c.empty()) return r;
  r.c.assign(c.size() + o.c.size() - 1, SymbolicReal());
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c.size(); ++j) {
      if (o.c[j].is_zero()) continue;
      // Coefficient products must stay in the Q-module: at least one factor
      // rational.
      if (!c[i].is_rational() && !o.c[j].is_rational())
        throw Error("piecewise product leaves the scalar module");
      SymbolicReal prod = c[i].is_rational()
                              ? o.c[j].scaled(c[i].as_rational())
                              : c[i].scaled(o.c[j].as_rational());
      r.c[i + j] = r.c[i + j] + prod;
    }
  }
  while (!r.c.empty() && r.c.back().is_zero()) r.c.pop_back();
  return r;
}

Poly Poly::compose_affine(const SymbolicReal& a, const Rational& b) const {
  // Horner: p(a + b s).
  Poly acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    // acc = acc * (a + b s) + c[i]
    Poly lin = Poly::linear(a, SymbolicReal(b));
    acc = acc * lin + Poly::constant(c[i]);
  }
  return acc;
}

SymbolicReal Poly::integral(const SymbolicReal& len) const {
  if (is_zero() || len.is_zero()) return SymbolicReal();
  if (is_constant()) {
    if (c[0].is_rational()) return len.scaled(c[0].as_rational());
    if (len.is_rational()) return c[0].scaled(len.as_rational());
    throw Error("symbolic-length integral of a symbolic constant");
  }
  if (!len.is_rational())
    throw Error("integral of a nonconstant piece over a symbolic arc");
  Rational l = len.as_rational();
  SymbolicReal acc;
  Rational lp = l;
  for (std::size_t i = 0; i < c.size(); ++i) {
    acc = acc + c[i].scaled(lp / Rational(static_cast<int>(i) + 1));
    lp *= l;
  }
  return acc;
}

SymbolicReal Poly::eval(const SymbolicReal& s) const {
  SymbolicReal acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (!acc.is_zero()) {
      if (!s.is_rational() && !acc.is_rational())
        throw Error("poly eval leaves the scalar module");
      acc = s.is_rational() ? acc.scaled(s.as_rational())
                            : s.scaled(acc.as_rational());
    }
    acc = acc + c[i];
  }
  return acc;
}

// --- CirclePiecewise -----------------------------------------------------------

namespace {

bool circle_less(const CircleValue& a, const CircleValue& b) {
  SymbolicReal d = a.representative() - b.representative();
  return !d.is_zero() && d.sign() < 0;
}

}  // namespace

CirclePiecewise::CirclePiecewise() {
  bks_ = {CircleValue()};
  pieces_ = {Poly()};
}

CirclePiecewise CirclePiecewise::constant(SymbolicReal v) {
  CirclePiecewise f;
  f.pieces_ = {Poly::constant(std::move(v))};
  return f;
}

CirclePiecewise CirclePiecewise::from_pieces(
    std::vector<CircleValue> breakpoints, std::vector<Poly> pieces) {
  if (breakpoints.empty() || breakpoints.size() != pieces.size())
    throw PreconditionError("piecewise data size mismatch");
  // Rotate so breakpoints are sorted ascending (they must already be
  // cyclically sorted and distinct).
  std::size_t lo = 0;
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (circle_less(breakpoints[i], breakpoints[lo])) lo = i;
  std::rotate(breakpoints.begin(), breakpoints.begin() + lo, breakpoints.end());
  std::rotate(pieces.begin(), pieces.begin() + lo, pieces.end());
  for (std::size_t i = 1; i < breakpoints.size(); ++i)
    if (!circle_less(breakpoints[i - 1], breakpoints[i]))
      throw PreconditionError("piecewise breakpoints must be distinct and "
                              "cyclically sorted");
  CirclePiecewise f;
  f.bks_ = std::move(breakpoints);
  f.pieces_ = std::move(pieces);
  return f;
}

SymbolicReal CirclePiecewise::arc_len(std::size_t i) const {
  const SymbolicReal& a = bks_[i].representative();
  if (i + 1 < bks_.size()) return bks_[i + 1].representative() - a;
  return bks_[0].representative() + SymbolicReal(Rational(1)) - a;
}

CirclePiecewise CirclePiecewise::composed_shift(const CircleValue& c) const {
  // g(t) = f(t + c): breakpoint b of f appears at b - c; local polys keep.
  std::vector<CircleValue> bks;
  bks.reserve(bks_.size());
  for (const auto& b : bks_) bks.push_back(b - c);
  std::vector<Poly> ps = pieces_;
  // Re-sort cyclically (rotation preserves cyclic order; from_pieces rotates).
  return from_pieces(std::move(bks), std::move(ps));
}

CirclePiecewise CirclePiecewise::composed_pl(const PLHomeo& phi) const {
  if (phi.degree() < 0)
    throw PreconditionError("composed_pl needs an orientation-preserving map");
  PLHomeo inv = phi.inverse();
  // Breakpoints of f∘phi: phi^{-1}(breakpoints of f) and phi's own.
  std::vector<CircleValue> bks;
  for (const auto& b : bks_) bks.push_back(inv.apply(b));
  for (const auto& p : phi.pieces()) bks.push_back(p.start);
  std::sort(bks.begin(), bks.end(), circle_less);
  bks.erase(std::unique(bks.begin(), bks.end(),
                        [](const CircleValue& a, const CircleValue& b) {
                          return a == b;
                        }),
            bks.end());
  std::vector<Poly> ps;
  ps.reserve(bks.size());
  for (const auto& b : bks) {
    // On [b, next): f(phi(t)) with t = rep(b) + s. phi affine there:
    // phi(t) = phi(b) + slope*s (as reals along the arc).
    // Find the f-piece containing phi(b).
    CircleValue pb = phi.apply(b);
    // slope at b:
    Rational slope;
    {
      // piece of phi containing b
      const auto& pieces = phi.pieces();
      std::size_t idx = pieces.size() - 1;
      bool found = false;
      for (std::size_t i = 0; i < pieces.size(); ++i) {
        SymbolicReal gap = b.representative() - pieces[i].start.representative();
        if (gap.is_zero() || gap.sign() > 0) {
          idx = i;
          found = true;
        } else {
          break;
        }
      }
      (void)found;
      slope = pieces[idx].slope;
    }
    // f-piece at pb with local offset:
    std::size_t fj = bks_.size() - 1;
    bool found = false;
    for (std::size_t j = 0; j < bks_.size(); ++j) {
      SymbolicReal gap = pb.representative() - bks_[j].representative();
      if (gap.is_zero() || gap.sign() > 0) {
        fj = j;
        found = true;
      } else {
        break;
      }
    }
    SymbolicReal off = pb.representative() - bks_[fj].representative();
    if (!found) off = off + SymbolicReal(Rational(1));
    ps.push_back(pieces_[fj].compose_affine(off, slope));
  }
  return from_pieces(std::move(bks), std::move(ps));
}

CirclePiecewise CirclePiecewise::merge(const CirclePiecewise& a,
                                       const CirclePiecewise& b, int mode) {
  std::vector<CircleValue> bks;
  for (const auto& x : a.bks_) bks.push_back(x);
  for (const auto& x : b.bks_) bks.push_back(x);
  std::sort(bks.begin(), bks.end(), circle_less);
  bks.erase(std::unique(bks.begin(), bks.end(),
                        [](const CircleValue& x, const CircleValue& y) {
                          return x == y;
                        }),
            bks.end());
  auto local = [](const CirclePiecewise& f, const CircleValue& t) {
    std::size_t idx = f.bks_.size() - 1;
    bool found = false;
    for (std::size_t i = 0; i < f.bks_.size(); ++i) {
      SymbolicReal gap = t.representative() - f.bks_[i].representative();
      if (gap.is_zero() || gap.sign() > 0) {
        idx = i;
        found = true;
      } else {
        break;
      }
    }
    SymbolicReal off = t.representative() - f.bks_[idx].representative();
    if (!found) off = off + SymbolicReal(Rational(1));
    return f.pieces_[idx].compose_affine(off, Rational(1));
  };
  std::vector<Poly> ps;
  ps.reserve(bks.size());
  for (const auto& t : bks) {
    Poly pa = local(a, t);
    Poly pb = local(b, t);
    switch (mode) {
      case 0:
        ps.push_back(pa + pb);
        break;
      case 1:
        ps.push_back(pa - pb);
        break;
      default:
        ps.push_back(pa * pb);
        break;
    }
  }
  return from_pieces(std::move(bks), std::move(ps));
}

CirclePiecewise CirclePiecewise::operator+(const CirclePiecewise& o) const {
  return merge(*this, o, 0);
}
CirclePiecewise CirclePiecewise::operator-(const CirclePiecewise& o) const {
  return merge(*this, o, 1);
}
CirclePiecewise CirclePiecewise::operator*(const CirclePiecewise& o) const {
  return merge(*this, o, 2);
}

CirclePiecewise CirclePiecewise::scaled(const Rational& c) const {
  CirclePiecewise out = *this;
  for (auto& p : out.pieces_)
    for (auto& coeff : p.c) coeff = coeff.scaled(c);
  return out;
}

bool CirclePiecewise::is_zero() const {
  for (const auto& p : pieces_)
    if (!p.is_zero()) return false;
  return true;
}

SymbolicReal CirclePiecewise::integral() const {
  SymbolicReal acc;
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    acc = acc + pieces_[i].integral(arc_len(i));
  return acc;
}

namespace {

// Arcwise nonzero flags of a on the merged breakpoint set.
std::vector<bool> nonzero_flags(const CirclePiecewise& f,
                                const std::vector<CircleValue>& bks) {
  std::vector<bool> out;
  out.reserve(bks.size());
  const auto& own = f.breakpoints();
  for (const auto& t : bks) {
    std::size_t idx = own.size() - 1;
    bool found = false;
    for (std::size_t i = 0; i < own.size(); ++i) {
      SymbolicReal gap = t.representative() - own[i].representative();
      if (gap.is_zero() || gap.sign() > 0) {
        idx = i;
        found = true;
      } else {
        break;
      }
    }
    (void)found;
    out.push_back(!f.pieces()[idx].is_zero());
  }
  return out;
}

std::vector<CircleValue> merged_breakpoints(const CirclePiecewise& a,
                                            const CirclePiecewise& b) {
  std::vector<CircleValue> bks;
  for (const auto& x : a.breakpoints()) bks.push_back(x);
  for (const auto& x : b.breakpoints()) bks.push_back(x);
  std::sort(bks.begin(), bks.end(), circle_less);
  bks.erase(std::unique(bks.begin(), bks.end(),
                        [](const CircleValue& x, const CircleValue& y) {
                          return x == y;
                        }),
            bks.end());
  return bks;
}

}  // namespace

bool CirclePiecewise::overlapping_support(const CirclePiecewise& a,
                                          const CirclePiecewise& b) {
  std::vector<CircleValue> bks = merged_breakpoints(a, b);
  std::vector<bool> fa = nonzero_flags(a, bks);
  std::vector<bool> fb = nonzero_flags(b, bks);
  for (std::size_t i = 0; i < bks.size(); ++i)
    if (fa[i] && fb[i]) return true;
  return false;
}

bool CirclePiecewise::vanishes_on_support(const CirclePiecewise& a,
                                          const CirclePiecewise& b) {
  return !overlapping_support(a, b);
}

SymbolicReal CirclePiecewise::eval(const CircleValue& t) const {
  std::size_t idx = bks_.size() - 1;
  bool found = false;
  for (std::size_t i = 0; i < bks_.size(); ++i) {
    SymbolicReal gap = t.representative() - bks_[i].representative();
    if (gap.is_zero() || gap.sign() > 0) {
      idx = i;
      found = true;
    } else {
      break;
    }
  }
  SymbolicReal off = t.representative() - bks_[idx].representative();
  if (!found) off = off + SymbolicReal(Rational(1));
  return pieces_[idx].eval(off);
}

}  // namespace cantork::crossed
