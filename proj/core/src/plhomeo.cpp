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

#include "cantork/plhomeo.hpp"

#include <algorithm>
#include <sstream>

namespace cantork::circlemaps {

namespace {

// q with a == q * b, when it exists and is rational.
std::optional<Rational> rational_ratio(const SymbolicReal& a,
                                       const SymbolicReal& b) {
  Rational q;
  if (b.rational_part() != 0) {
    if (!a.is_rational() && b.is_rational()) {
      // a has irrational parts that q*b cannot produce
    }
    q = a.rational_part() / b.rational_part();
  } else if (!b.coefficients().empty()) {
    auto itb = b.coefficients().begin();
    auto ita = a.coefficients().find(itb->first);
    if (ita == a.coefficients().end()) return std::nullopt;
    q = ita->second / itb->second;
  } else {
    return std::nullopt;  // b == 0
  }
  if ((a - b.scaled(q)).is_zero()) return q;
  return std::nullopt;
}

SymbolicReal rep(const CircleValue& v) { return v.representative(); }

}  // namespace

void PLHomeo::validate() const {
  if (pieces_.empty()) throw PreconditionError("PL map needs pieces");
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    if (pieces_[i].slope <= 0)
      throw PreconditionError("PL map slopes must be positive");
    if (i > 0) {
      SymbolicReal gap = rep(pieces_[i].start) - rep(pieces_[i - 1].start);
      if (gap.is_zero() || gap.sign() < 0)
        throw PreconditionError("PL breakpoints must be strictly sorted");
    }
  }
  // Continuity of the lift across pieces and the wrap F(b0 + 1) = F(b0) + 1.
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    bool wrap = i + 1 == pieces_.size();
    SymbolicReal next_start =
        wrap ? rep(pieces_[0].start) + SymbolicReal(Rational(1))
             : rep(pieces_[i + 1].start);
    SymbolicReal next_val =
        wrap ? pieces_[0].lift_at + SymbolicReal(Rational(1))
             : pieces_[i + 1].lift_at;
    SymbolicReal len = next_start - rep(pieces_[i].start);
    SymbolicReal end_val = pieces_[i].lift_at + len.scaled(pieces_[i].slope);
    if (!(end_val == next_val))
      throw PreconditionError("PL lift is not continuous/degree-one");
  }
}

PLHomeo PLHomeo::rotation(const CircleValue& t) {
  PLHomeo p;
  p.pieces_.push_back(Piece{CircleValue(), rep(t), Rational(1)});
  p.degree_ = 1;
  p.validate();
  return p;
}

PLHomeo PLHomeo::reflection() {
  PLHomeo p;
  p.pieces_.push_back(Piece{CircleValue(), SymbolicReal(), Rational(1)});
  p.degree_ = -1;
  return p;
}

PLHomeo PLHomeo::increasing(std::vector<CircleValue> breakpoints,
                            std::vector<SymbolicReal> lift_values) {
  if (breakpoints.size() != lift_values.size() || breakpoints.empty())
    throw PreconditionError("PL map needs matching breakpoints and values");
  PLHomeo p;
  p.degree_ = 1;
  const std::size_t n = breakpoints.size();
  for (std::size_t i = 0; i < n; ++i) {
    bool wrap = i + 1 == n;
    SymbolicReal db =
        (wrap ? rep(breakpoints[0]) + SymbolicReal(Rational(1))
              : rep(breakpoints[i + 1])) -
        rep(breakpoints[i]);
    SymbolicReal dv =
        (wrap ? lift_values[0] + SymbolicReal(Rational(1)) : lift_values[i + 1]) -
        lift_values[i];
    auto q = rational_ratio(dv, db);
    if (!q)
      throw PreconditionError(
          "PL slope is not rational; symbolic slopes are unsupported");
    p.pieces_.push_back(Piece{breakpoints[i], lift_values[i], *q});
  }
  // Coalesce redundant breakpoints (equal slopes across a continuous lift),
  // including across the wrap; compositions produce plenty of them.
  std::vector<Piece> merged;
  for (auto& piece : p.pieces_) {
    if (!merged.empty() && merged.back().slope == piece.slope) continue;
    merged.push_back(std::move(piece));
  }
  while (merged.size() > 1 && merged.front().slope == merged.back().slope)
    merged.erase(merged.begin());
  p.pieces_ = std::move(merged);
  p.validate();
  return p;
}

bool PLHomeo::is_rotation() const {
  return degree_ == 1 && pieces_.size() == 1 && pieces_[0].slope == 1;
}

CircleValue PLHomeo::rotation_amount() const {
  if (!is_rotation()) throw PreconditionError("not a rotation");
  return CircleValue::reduce(pieces_[0].lift_at - rep(pieces_[0].start));
}

std::pair<std::size_t, SymbolicReal> PLHomeo::locate(
    const CircleValue& t) const {
  // Last piece whose start is <= t; wraps to the final piece otherwise.
  std::size_t idx = pieces_.size() - 1;
  bool found = false;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    SymbolicReal gap = rep(t) - rep(pieces_[i].start);
    if (gap.is_zero() || gap.sign() > 0) {
      idx = i;
      found = true;
    } else {
      break;
    }
  }
  SymbolicReal offset = rep(t) - rep(pieces_[idx].start);
  if (!found) offset = offset + SymbolicReal(Rational(1));
  return {idx, offset};
}

CircleValue PLHomeo::apply(const CircleValue& t) const {
  CircleValue x = degree_ < 0 ? t.negated() : t;
  auto [i, s] = locate(x);
  return CircleValue::reduce(pieces_[i].lift_at + s.scaled(pieces_[i].slope));
}

SymbolicReal PLHomeo::lift(const SymbolicReal& x) const {
  if (degree_ < 0)
    throw PreconditionError("lift evaluation needs an increasing map");
  Int k = x.floor();
  CircleValue frac = CircleValue::reduce(x - SymbolicReal(Rational(k)));
  auto [i, s] = locate(frac);
  SymbolicReal val = pieces_[i].lift_at + s.scaled(pieces_[i].slope);
  // locate() sends points below the first breakpoint into the wrap piece at
  // t + 1; the canonical lift value is one lower there.
  SymbolicReal gap = frac.representative() - rep(pieces_[0].start);
  if (!gap.is_zero() && gap.sign() < 0) val = val - SymbolicReal(Rational(1));
  return val + SymbolicReal(Rational(k));
}

namespace {

// lambda ∘ H ∘ lambda for an increasing H: x -> -H(-x), again increasing.
PLHomeo conjugate_by_lambda(const PLHomeo& h) {
  std::vector<CircleValue> bks;
  std::vector<SymbolicReal> vals;
  const auto& ps = h.pieces();
  const std::size_t n = ps.size();
  // Piece of H on [b_i, b_{i+1}) maps to a piece of -H(-x) on
  // (-b_{i+1}, -b_i]; using the open/closed flip at breakpoints is harmless
  // for a continuous map. New breakpoints: -b_{i+1}, value -H(b_{i+1}).
  for (std::size_t i = 0; i < n; ++i) {
    bool wrap = i + 1 == n;
    SymbolicReal b_next = wrap
        ? ps[0].start.representative() + SymbolicReal(Rational(1))
        : ps[i + 1].start.representative();
    SymbolicReal v_next = wrap ? ps[0].lift_at + SymbolicReal(Rational(1))
                               : ps[i + 1].lift_at;
    bks.push_back(CircleValue::reduce(-b_next));
    vals.push_back(-v_next);
  }
  // Fix lift normalization: values must equal the lift at the reduced
  // breakpoint representative; adjust by the floor shift.
  for (std::size_t i = 0; i < n; ++i) {
    SymbolicReal raw = -((i + 1 < n) ? ps[i + 1].start.representative()
                                     : ps[0].start.representative() +
                                           SymbolicReal(Rational(1)));
    Int shift = (bks[i].representative() - raw).floor();
    // representative = raw + shift; lift value moves by the same shift
    vals[i] = vals[i] + SymbolicReal(Rational(shift));
  }
  // Sort by breakpoint representative.
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    SymbolicReal d = bks[a].representative() - bks[b].representative();
    return !d.is_zero() && d.sign() < 0;
  });
  std::vector<CircleValue> sb;
  std::vector<SymbolicReal> sv;
  for (std::size_t i : order) {
    sb.push_back(bks[i]);
    sv.push_back(vals[i]);
  }
  return PLHomeo::increasing(std::move(sb), std::move(sv));
}

PLHomeo compose_increasing(const PLHomeo& outer, const PLHomeo& inner) {
  // Breakpoints: inner's, plus inner^{-1}(outer's).
  PLHomeo inner_inv = inner.inverse();
  std::vector<CircleValue> bks;
  for (const auto& p : inner.pieces()) bks.push_back(p.start);
  for (const auto& p : outer.pieces()) bks.push_back(inner_inv.apply(p.start));
  std::sort(bks.begin(), bks.end(), [](const CircleValue& a,
                                       const CircleValue& b) {
    SymbolicReal d = a.representative() - b.representative();
    return !d.is_zero() && d.sign() < 0;
  });
  bks.erase(std::unique(bks.begin(), bks.end(),
                        [](const CircleValue& a, const CircleValue& b) {
                          return a == b;
                        }),
            bks.end());
  std::vector<SymbolicReal> vals;
  vals.reserve(bks.size());
  for (const auto& b : bks)
    vals.push_back(outer.lift(inner.lift(b.representative())));
  return PLHomeo::increasing(std::move(bks), std::move(vals));
}

}  // namespace

PLHomeo PLHomeo::inverse() const {
  // Increasing part: swap graph axes piece by piece.
  std::vector<CircleValue> bks;
  std::vector<SymbolicReal> vals;
  const std::size_t n = pieces_.size();
  for (std::size_t i = 0; i < n; ++i) {
    CircleValue b = CircleValue::reduce(pieces_[i].lift_at);
    Int k = (pieces_[i].lift_at - b.representative()).floor();  // floor shift
    bks.push_back(b);
    vals.push_back(rep(pieces_[i].start) - SymbolicReal(Rational(k)));
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    SymbolicReal d = bks[a].representative() - bks[b].representative();
    return !d.is_zero() && d.sign() < 0;
  });
  std::vector<CircleValue> sb;
  std::vector<SymbolicReal> sv;
  for (std::size_t i : order) {
    sb.push_back(bks[i]);
    sv.push_back(vals[i]);
  }
  PLHomeo ginv = increasing(std::move(sb), std::move(sv));
  if (degree_ == 1) return ginv;
  // (F∘lambda)^{-1} = lambda∘F^{-1} = (lambda F^{-1} lambda)∘lambda.
  PLHomeo out = conjugate_by_lambda(ginv);
  out.degree_ = -1;
  return out;
}

PLHomeo PLHomeo::compose(const PLHomeo& outer, const PLHomeo& inner) {
  // outer = F1 λ^{s1}, inner = F2 λ^{s2}:
  // outer∘inner = F1 (λ^{s1} F2 λ^{s1}) λ^{s1+s2}.
  PLHomeo f1 = outer;
  f1.degree_ = 1;
  PLHomeo f2 = inner;
  f2.degree_ = 1;
  PLHomeo mid = outer.degree_ < 0 ? conjugate_by_lambda(f2) : f2;
  PLHomeo comp = compose_increasing(f1, mid);
  comp.degree_ = outer.degree_ * inner.degree_;
  return comp;
}

PLHomeo PLHomeo::with_degree_flip() const {
  PLHomeo p = *this;
  p.degree_ = -degree_;
  return p;
}

SymbolicReal PLHomeo::min_displacement() const {
  if (degree_ < 0)
    throw PreconditionError("displacement needs an orientation-preserving map");
  // d(t) = F(t) - t is piecewise affine; extremes occur at breakpoints.
  std::vector<SymbolicReal> d;
  for (const auto& p : pieces_) d.push_back(p.lift_at - rep(p.start));
  SymbolicReal lo = d[0], hi = d[0];
  for (const auto& x : d) {
    if (!(x - lo).is_zero() && (x - lo).sign() < 0) lo = x;
    if (!(x - hi).is_zero() && (x - hi).sign() > 0) hi = x;
  }
  Int k = hi.floor();
  SymbolicReal lo_gap = lo - SymbolicReal(Rational(k));
  if (lo_gap.is_zero() || lo_gap.sign() <= 0)
    return SymbolicReal();  // an integer lies in [lo, hi]: fixed point
  SymbolicReal up_gap = SymbolicReal(Rational(k + 1)) - hi;
  // |phi(t) - t| minimum over T; the inverse contributes the same value set.
  return (lo_gap - up_gap).sign() <= 0 || (lo_gap - up_gap).is_zero()
             ? lo_gap
             : up_gap;
}

bool PLHomeo::has_fixed_point() const { return min_displacement().is_zero(); }

std::string PLHomeo::str() const {
  std::ostringstream out;
  out << "PL[deg " << degree_ << "]";
  for (const auto& p : pieces_)
    out << " (" << p.start.str() << " -> " << p.lift_at.str() << ", slope "
        << exact::rational_str(p.slope) << ")";
  return out.str();
}

PLCocycle PLCocycle::constant(cantor::SystemPtr sys, PLHomeo phi) {
  return PLCocycle{std::move(sys), 0, {std::move(phi)}};
}

PLCocycle PLCocycle::make(cantor::SystemPtr sys, int level,
                          std::vector<PLHomeo> maps) {
  Int m = sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(maps.size())) != m)
    throw PreconditionError("PL cocycle needs m_level maps");
  return PLCocycle{std::move(sys), level, std::move(maps)};
}

const PLHomeo& PLCocycle::at(const Int& residue) const {
  Int m = sys->multiplicity(level);
  return maps[exact::mod_floor(residue, m).get_ui()];
}

bool PLCocycle::all_degree_one() const {
  for (const auto& m : maps)
    if (m.degree() < 0) return false;
  return true;
}

cantor::SignCocycle PLCocycle::orientation_cocycle() const {
  std::vector<std::uint8_t> v;
  v.reserve(maps.size());
  for (const auto& m : maps) v.push_back(m.degree() < 0 ? 1 : 0);
  return cantor::SignCocycle::make(sys, level, std::move(v));
}

}  // namespace cantork::circlemaps
