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

#include "cantork/rieffel.hpp"

#include <sstream>

namespace cantork::crossed {

namespace {

std::size_t idx(const Int& r) { return r.get_ui(); }

// Builds a circle piecewise from breakpoint/poly pairs, dropping zero-length
// arcs created by coinciding breakpoints.
CirclePiecewise build_dedup(std::vector<CircleValue> bks,
                            std::vector<Poly> polys) {
  std::vector<CircleValue> b2;
  std::vector<Poly> p2;
  for (std::size_t i = 0; i < bks.size(); ++i) {
    if (!b2.empty() && bks[i] == b2.back()) {
      p2.back() = polys[i];  // zero-length arc: later piece wins
      continue;
    }
    b2.push_back(bks[i]);
    p2.push_back(polys[i]);
  }
  return CirclePiecewise::from_pieces(std::move(b2), std::move(p2));
}

Poly ramp_up(const Rational& width) {  // s / width on [0, width)
  return Poly::linear(SymbolicReal(), SymbolicReal(Rational(1) / width));
}

Poly ramp_down(const Rational& width) {  // 1 - s / width
  return Poly::linear(SymbolicReal(Rational(1)),
                      SymbolicReal(Rational(-1) / width));
}

Poly bump2(const Rational& width) {  // (s/w)(1 - s/w)
  Poly p;
  Rational w1 = Rational(1) / width;
  p.c = {SymbolicReal(), SymbolicReal(w1), SymbolicReal(-w1 * w1)};
  return p;
}

// gamma-composition helpers on per-cylinder function families.
struct Gamma {
  const RieffelPair* pair;

  CirclePiecewise forward(const std::vector<CirclePiecewise>& h,
                          const Int& k) const {
    // (h∘gamma)(x,t) = h(alpha x, phi_x(t))
    Int m = pair->sys->multiplicity(pair->level);
    Int next = exact::mod_floor(k + 1, m);
    if (pair->rot)
      return h[idx(next)].composed_shift(pair->rot->at(k));
    return h[idx(next)].composed_pl(pair->pl->at(k));
  }
  CirclePiecewise backward(const std::vector<CirclePiecewise>& h,
                           const Int& k) const {
    // (h∘gamma^{-1})(x,t) = h(alpha^{-1} x, phi_{alpha^{-1}x}^{-1}(t))
    Int m = pair->sys->multiplicity(pair->level);
    Int prev = exact::mod_floor(k - 1, m);
    if (pair->rot)
      return h[idx(prev)].composed_shift(pair->rot->at(prev).negated());
    return h[idx(prev)].composed_pl(pair->pl->at(prev).inverse());
  }
};

}  // namespace

RieffelPair rieffel(const RealLift& xi, const std::optional<CircleCocycle>& eta) {
  const SystemPtr& sys = xi.sys;
  int level = xi.level;
  if (eta) {
    if (eta->sys.get() != sys.get())
      throw PreconditionError("rieffel: eta over a different system");
    level = std::max(level, eta->level);
  }
  Int m = sys->multiplicity(level);
  RealLift xl = xi.at_level(level);

  RieffelPair out;
  out.sys = sys;
  out.level = level;
  out.rot = xl.reduced();
  out.provenance = eta ? "e(alpha, xi, eta)" : "e(alpha, xi, 0)";

  const Rational tenth(1, 10);
  for (Int k = 0; k < m; ++k) {
    Int prev = exact::mod_floor(k - 1, m);
    CircleValue eta_k = eta ? eta->at(k) : CircleValue();
    CircleValue eta_prev = eta ? eta->at(prev) : CircleValue();
    // eta'(x) = (xi + eta)(alpha^{-1} x)
    CircleValue eta_p = CircleValue::reduce(xl.at(prev)) + eta_prev;

    // Band value at alpha^{-1}x orders the breakpoints:
    // eta < eta + 1/10 <= eta' < eta' + 1/10 < eta + 1.
    CircleValue band = eta_p - eta_k;
    if (!exact::in_open_band(band.representative(), tenth, Rational(9, 10)))
      throw PreconditionError(
          "rieffel: (xi + eta - eta∘alpha) outside (1/10, 9/10)");

    CircleValue tenth_c{Rational(1, 10)};
    std::vector<CircleValue> fb = {eta_k, eta_k + tenth_c, eta_p,
                                   eta_p + tenth_c};
    std::vector<Poly> fp = {ramp_up(tenth), Poly::constant(Rational(1)),
                            ramp_down(tenth), Poly()};
    out.f.push_back(build_dedup(std::move(fb), std::move(fp)));

    std::vector<CircleValue> gb = {eta_k, eta_k + tenth_c};
    std::vector<Poly> gp = {bump2(tenth), Poly()};
    out.g2.push_back(build_dedup(std::move(gb), std::move(gp)));
  }
  // Trace representative: the (1/10, 9/10) lift of xi + eta - eta∘alpha.
  for (Int k = 0; k < m; ++k) {
    Int next = exact::mod_floor(k + 1, m);
    CircleValue eta_k = eta ? eta->at(k) : CircleValue();
    CircleValue eta_n = eta ? eta->at(next) : CircleValue();
    CircleValue band = CircleValue::reduce(xl.at(k)) + eta_k - eta_n;
    out.band_lift.push_back(band.representative());
  }
  return out;
}

VerifyReport verify_projection(const RieffelPair& p) {
  Gamma g{&p};
  Int m = p.sys->multiplicity(p.level);
  VerifyReport rep;
  rep.identity_i = rep.identity_ii = rep.identity_iii = true;
  std::ostringstream detail;

  for (Int k = 0; k < m; ++k) {
    const CirclePiecewise& f = p.f[idx(k)];
    const CirclePiecewise& g2 = p.g2[idx(k)];

    // (i) f^2 + g^2 + g^2∘gamma^{-1} - f = 0
    CirclePiecewise lhs = f * f + g2 + g.backward(p.g2, k) - f;
    if (!lhs.is_zero()) {
      rep.identity_i = false;
      detail << "(i) fails on cylinder " << k.get_str() << "; ";
    }
    // (ii) g (f + f∘gamma - 1) = 0: the factor must vanish on supp g.
    CirclePiecewise factor =
        f + g.forward(p.f, k) - CirclePiecewise::constant(Rational(1));
    if (!CirclePiecewise::vanishes_on_support(g2, factor)) {
      rep.identity_ii = false;
      detail << "(ii) fails on cylinder " << k.get_str() << "; ";
    }
    // (iii) g * g∘gamma = 0: supports disjoint.
    if (CirclePiecewise::overlapping_support(g2, g.forward(p.g2, k))) {
      rep.identity_iii = false;
      detail << "(iii) fails on cylinder " << k.get_str() << "; ";
    }
  }
  rep.ok = rep.identity_i && rep.identity_ii && rep.identity_iii;
  rep.detail = detail.str();
  if (rep.ok) rep.detail = "all three u-degree identities hold exactly";
  return rep;
}

TraceResult trace_of(const RieffelPair& p, const cantor::InvariantMeasure& mu) {
  if (mu.sys.get() != p.sys.get())
    throw PreconditionError("trace_of: measure of a different system");
  Int m = p.sys->multiplicity(p.level);
  Rational mass = exact::make_rational(1, m);

  TraceResult out;
  SymbolicReal integral;
  for (Int k = 0; k < m; ++k)
    integral = integral + p.f[idx(k)].integral();
  out.via_integral = integral.scaled(mass);

  if (!p.band_lift.empty()) {
    SymbolicReal lift;
    for (const auto& v : p.band_lift) lift = lift + v;
    out.via_lift = lift.scaled(mass);
    out.agree = (out.via_integral - out.via_lift).is_zero();
    if (!out.agree)
      throw Error("trace_of: integral and lift routes disagree");
  } else {
    out.via_lift = out.via_integral;
    out.agree = true;
  }
  out.value = out.via_integral;
  return out;
}

BottIdentity bott_identity_check(const RealLift& xi, const CircleCocycle& eta) {
  const SystemPtr& sys = xi.sys;
  int level = std::max(xi.level, eta.level);
  Int m = sys->multiplicity(level);
  RealLift xl = xi.at_level(level);
  // Stronger band hypothesis: xi + eta - eta∘alpha in (1/3, 2/3).
  for (Int k = 0; k < m; ++k) {
    Int next = exact::mod_floor(k + 1, m);
    CircleValue band = CircleValue::reduce(xl.at(k)) + eta.at(k) - eta.at(next);
    if (!exact::in_open_band(band.representative(), Rational(1, 3),
                             Rational(2, 3)))
      throw PreconditionError(
          "bott_identity_check: band (1/3, 2/3) hypothesis fails");
  }

  cantor::InvariantMeasure mu{sys};
  RieffelPair e0 = rieffel(xi, std::nullopt);
  RieffelPair ee = rieffel(xi, eta);

  BottIdentity out;
  out.bott_class = cocycle::bott(xi, eta);
  out.trace_zero = trace_of(e0, mu).value;
  out.trace_eta = trace_of(ee, mu).value;

  // Class route: [e(0)] - [e(eta)] lands in K^0 and must equal B.
  SymbolicReal diff = out.trace_zero - out.trace_eta;
  if (diff.is_rational() &&
      sys->supernatural().admits(diff.as_rational())) {
    kgroup::K0Class as_class =
        kgroup::k0_class_of_value(sys, diff.as_rational());
    out.class_identity = kgroup::k0_compare(as_class, out.bott_class).equal;
  }
  // Trace route: tau(e(eta)) = tau(e(0)) - state(B), exactly.
  SymbolicReal rhs =
      out.trace_zero - kgroup::state_eval(out.bott_class, mu);
  out.trace_identity = (out.trace_eta - rhs).is_zero();
  return out;
}

GeneralRieffel rieffel_general(const PLCocycle& phi, const CircleValue& s) {
  if (!phi.all_degree_one())
    throw PreconditionError("rieffel_general needs orientation-preserving "
                            "fiber maps");
  const SystemPtr& sys = phi.sys;
  Int m = sys->multiplicity(phi.level);

  // Pure rotation cocycles reduce exactly to the rotation-case projection.
  bool all_rot = true;
  for (const auto& h : phi.maps)
    if (!h.is_rotation()) all_rot = false;
  if (all_rot) {
    std::vector<CircleValue> vals;
    SymbolicReal c;
    bool first = true;
    for (const auto& h : phi.maps) {
      CircleValue r = h.rotation_amount();
      if (r.is_zero())
        throw PreconditionError("rieffel_general: a fiber map has a fixed "
                                "point (rotation number 0)");
      vals.push_back(r);
      SymbolicReal d = r.distance_to_zero();
      if (first || (d - c).sign() < 0) c = d;
      first = false;
    }
    CircleCocycle xi{sys, phi.level, std::move(vals)};
    RealLift lift = RealLift::canonical(xi);
    if (!lift.in_band(Rational(1, 10), Rational(9, 10)))
      throw PreconditionError(
          "rieffel_general: rotation amounts outside (1/10, 9/10); perturb "
          "into the band first");
    GeneralRieffel out{rieffel(lift, std::nullopt), c};
    out.pair.provenance = "e(alpha, phi, s) [rotation reduction]";
    return out;
  }

  // General case: rational PL data only (the scalar module has no division
  // of irrationals, so symbolic slopes/breakpoints are rejected).
  if (!s.is_rational())
    throw PreconditionError("rieffel_general: s must be rational for "
                            "non-rotation cocycles");
  for (const auto& h : phi.maps)
    for (const auto& piece : h.pieces())
      if (!piece.start.is_rational() || !piece.lift_at.is_rational())
        throw PreconditionError(
            "rieffel_general: non-rotation PL data must be rational");

  SymbolicReal c_sym;
  bool first = true;
  for (const auto& h : phi.maps) {
    SymbolicReal d = h.min_displacement();
    if (d.is_zero())
      throw PreconditionError("rieffel_general: a fiber map has a fixed point");
    if (first || (d - c_sym).sign() < 0) c_sym = d;
    first = false;
  }
  Rational c = c_sym.as_rational();
  Rational sr = s.representative().as_rational();

  RieffelPair pair;
  pair.sys = sys;
  pair.level = phi.level;
  pair.pl = phi;
  pair.provenance = "e(alpha, phi, s)";

  for (Int k = 0; k < m; ++k) {
    Int prev = exact::mod_floor(k - 1, m);
    const circlemaps::PLHomeo& ph = phi.at(prev);

    // u: rise on [s, s+c], 1 on [s+c, phi_prev(s)), 0 after.
    CircleValue a = ph.apply(s);
    std::vector<CircleValue> ub = {s, CircleValue(sr + c), a};
    std::vector<Poly> up = {ramp_up(c), Poly::constant(Rational(1)), Poly()};
    CirclePiecewise u = build_dedup(std::move(ub), std::move(up));

    // v = w∘phi_prev^{-1} with w the mirrored ramp on [s, s+c]: the falling
    // edge 1 - (phi^{-1}(t) - s)/c on [phi(s), phi(s+c)].
    std::vector<CircleValue> wb = {s, CircleValue(sr + c)};
    std::vector<Poly> wp = {ramp_down(c), Poly()};
    CirclePiecewise w = build_dedup(std::move(wb), std::move(wp));
    CirclePiecewise v = w.composed_pl(ph.inverse());

    pair.f.push_back(u + v);

    std::vector<CircleValue> gb = {s, CircleValue(sr + c)};
    std::vector<Poly> gp = {bump2(c), Poly()};
    pair.g2.push_back(build_dedup(std::move(gb), std::move(gp)));
  }
  return GeneralRieffel{std::move(pair), SymbolicReal(c)};
}

}  // namespace cantork::crossed
