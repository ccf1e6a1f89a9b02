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

#include "cantork/circlemaps.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace cantork::circlemaps {

using exact::Int;
using exact::Rational;

std::string RotationNumber::str() const {
  if (exact) return "r = " + value->str() + " (exact)";
  return "r in " + enclosure.str();
}

namespace {

// Fixed points of F^q(t) = t + p on each piece of the composed map; returns
// a re-verified witness when one exists.
std::optional<RotationNumber::Witness> solve_periodic(const PLHomeo& iter,
                                                      unsigned q) {
  const auto& pieces = iter.pieces();
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    const SymbolicReal start = pieces[i].start.representative();
    SymbolicReal next =
        (i + 1 < pieces.size())
            ? pieces[i + 1].start.representative()
            : pieces[0].start.representative() + SymbolicReal(Rational(1));
    SymbolicReal len = next - start;
    // On [start, start+len): F^q(start + s) = v + m s.
    const SymbolicReal& v = pieces[i].lift_at;
    const Rational& slope = pieces[i].slope;
    // v + m s = start + s + p  =>  s (m - 1) = start + p - v.
    SymbolicReal disp_lo = v - start;  // displacement at s = 0
    SymbolicReal disp_hi = v + len.scaled(slope) - next;  // at s = len
    Int p_lo = disp_lo.floor();
    Int p_hi = disp_hi.floor() + 1;
    if (p_hi < p_lo) std::swap(p_lo, p_hi);
    for (Int p = p_lo; p <= p_hi; ++p) {
      if (slope == 1) {
        if ((v - start - SymbolicReal(Rational(p))).is_zero())
          return RotationNumber::Witness{Int(q), p, start};
        continue;
      }
      SymbolicReal s = (start + SymbolicReal(Rational(p)) - v)
                           .scaled(Rational(1) / (slope - 1));
      SymbolicReal hi_gap = len - s;
      bool in_lo = s.is_zero() || s.sign() > 0;
      bool in_hi = !hi_gap.is_zero() && hi_gap.sign() > 0;
      if (in_lo && in_hi) {
        SymbolicReal t = start + s;
        if ((iter.lift(t) - t - SymbolicReal(Rational(p))).is_zero())
          return RotationNumber::Witness{Int(q), p, t};
      }
    }
  }
  return std::nullopt;
}

// Rational with the smallest denominator in the closed interval [a, b]
// (standard continued-fraction descent).
Rational simplest_in(const Rational& a, const Rational& b) {
  if (a > b) throw Error("simplest_in: empty interval");
  Int fa = exact::rational_floor(a);
  if (Rational(fa) == a) return a;
  if (Rational(fa + 1) <= b) return Rational(fa + 1);
  // Both in (fa, fa+1): recurse on the reciprocal of the fractional parts.
  Rational inner =
      simplest_in(Rational(1) / (b - Rational(fa)), Rational(1) / (a - Rational(fa)));
  return Rational(fa) + Rational(1) / inner;
}

Interval orbit_enclosure(const PLHomeo& phi, unsigned budget);

// Exact detection: verify the simplest rational candidate inside the orbit
// enclosure, composing the map q times once; on a miss, sharpen the
// enclosure with a longer orbit and retry, then fall back to an exhaustive
// small-period sweep. Irrationality is never asserted.
std::optional<RotationNumber::Witness> periodic_witness(const PLHomeo& phi,
                                                        unsigned budget,
                                                        Interval enclosure) {
  for (int attempt = 0; attempt < 3; ++attempt) {
    Rational cand = simplest_in(enclosure.lo, enclosure.hi);
    if (cand.get_den() <= static_cast<unsigned long>(budget)) {
      unsigned q = static_cast<unsigned>(cand.get_den().get_ui());
      PLHomeo iter = phi;
      for (unsigned i = 1; i < q; ++i) iter = PLHomeo::compose(phi, iter);
      if (auto w = solve_periodic(iter, q)) return w;
    }
    if (attempt + 1 < 3)
      enclosure = orbit_enclosure(phi, budget << (attempt + 1));
  }
  PLHomeo iter = phi;
  for (unsigned q = 1; q <= std::min(budget, 24u); ++q) {
    if (q > 1) iter = PLHomeo::compose(phi, iter);
    if (auto w = solve_periodic(iter, q)) return w;
  }
  return std::nullopt;
}

Interval orbit_enclosure(const PLHomeo& phi, unsigned budget) {
  // (F^n(0) - 1)/n < r < (F^n(0) + 1)/n; endpoints rationalized via the
  // displacement's own enclosure when symbolic.
  SymbolicReal x;
  for (unsigned i = 0; i < budget; ++i) x = phi.lift(x);
  Rational lo, hi;
  if (x.is_rational()) {
    lo = x.as_rational();
    hi = lo;
  } else {
    exact::Interval e = x.enclosure(exact::kDefaultSignBudget);
    lo = e.lo;
    hi = e.hi;
  }
  Rational n(static_cast<long>(budget));
  return Interval((lo - 1) / n, (hi + 1) / n);
}

}  // namespace

RotationNumber rotation_number(const PLHomeo& phi, unsigned budget) {
  if (phi.degree() < 0)
    throw PreconditionError("rotation number needs degree +1");
  RotationNumber out;
  if (phi.is_rotation()) {
    out.exact = true;
    out.value = phi.rotation_amount();
    if (out.value->is_rational()) {
      Rational r = out.value->representative().as_rational();
      out.enclosure = Interval(r, r);
      out.witness = RotationNumber::Witness{
          Int(r.get_den()), Int(r.get_num()), SymbolicReal()};
    } else {
      exact::Interval e =
          out.value->representative().enclosure(exact::kDefaultSignBudget);
      out.enclosure = e;
    }
    return out;
  }
  Interval enclosure = orbit_enclosure(phi, budget);
  if (auto w = periodic_witness(phi, budget, enclosure)) {
    out.exact = true;
    Rational r = exact::make_rational(w->winding, w->period);
    out.value = CircleValue(r);
    r = out.value->representative().as_rational();
    out.enclosure = Interval(r, r);
    out.witness = std::move(w);
    return out;
  }
  out.exact = false;
  out.enclosure = enclosure;
  return out;
}

namespace {

// Lifted interval known to contain the (real) rotation number of the lift:
// degenerate for exact results.
Interval lifted_enclosure(const RotationNumber& r) {
  if (r.exact) {
    if (r.witness) {
      Rational v = exact::make_rational(r.witness->winding, r.witness->period);
      return Interval(v, v);
    }
    if (r.value->is_rational()) {
      Rational v = r.value->representative().as_rational();
      return Interval(v, v);
    }
  }
  return r.enclosure;
}

}  // namespace

// True iff r(phi) mod 1 lies certifiably in the open window (lo, hi): some
// integer translate (lo + k, hi + k) contains the lifted enclosure.
static bool rotation_in_window(const RotationNumber& r, const Rational& lo,
                               const Rational& hi) {
  if (r.exact && !r.value->is_rational())
    return exact::in_open_band(r.value->representative(), lo, hi);
  Interval e = lifted_enclosure(r);
  Int base = exact::rational_floor(e.lo - lo);
  for (int step = 0; step <= 1; ++step) {
    Rational k(base + step);
    if (lo + k < e.lo && e.hi < hi + k) return true;
    if (e.width() == 0 && lo + k < e.lo && e.lo < hi + k) return true;
  }
  return false;
}

RotationTarget rotation_target(const PLHomeo& phi, const Rational& lo,
                               const Rational& hi, unsigned budget) {
  if (!(Rational(0) <= lo && lo < hi && hi <= 1))
    throw PreconditionError("rotation_target needs 0 <= lo < hi <= 1");
  if (phi.degree() < 0)
    throw PreconditionError("rotation_target needs degree +1");

  auto eval = [&](const Rational& t, unsigned n) {
    return rotation_number(
        PLHomeo::compose(PLHomeo::rotation(CircleValue(t)), phi), n);
  };

  // Rotations with rational angle: solve directly.
  if (phi.is_rotation() && phi.rotation_amount().is_rational()) {
    Rational c = phi.rotation_amount().representative().as_rational();
    Rational t = (lo + hi) / 2 - c;
    t -= exact::rational_floor(t);
    RotationNumber cert = eval(t, budget);
    if (!rotation_in_window(cert, lo, hi))
      throw Error("rotation_target: direct rotation solve failed");
    return RotationTarget{t, cert};
  }

  // Monotone bisection on the *lifted* rotation number of R_t ∘ phi, which
  // increases by exactly 1 over t in [0, 1]. Pick the lift tau of the
  // window midpoint inside [r(0), r(0) + 1].
  RotationNumber at0 = eval(Rational(0), budget);
  Interval e0 = lifted_enclosure(at0);
  Rational mid = (lo + hi) / 2;
  Rational tau = mid + Rational(exact::rational_floor(e0.hi - mid) + 1);

  Rational a(0), b(1);
  unsigned local = budget;
  for (int iter = 0; iter < 80; ++iter) {
    Rational t = (a + b) / 2;
    RotationNumber r = eval(t, local);
    if (rotation_in_window(r, lo, hi)) return RotationTarget{t, r};
    Interval e = lifted_enclosure(r);
    if (e.hi <= tau) {
      a = t;
    } else if (e.lo >= tau) {
      b = t;
    } else {
      if (local >= budget * 16) break;  // sharpen locally, then fall back
      local *= 2;
    }
  }
  // Fallback: scan a t-grid (the certified window has positive length, so a
  // fine enough grid with small enclosures must hit it).
  for (unsigned grid : {32u, 64u, 128u, 256u}) {
    for (unsigned j = 0; j < grid; ++j) {
      Rational t(static_cast<long>(j), static_cast<long>(grid));
      RotationNumber r = eval(t, std::max(budget, 4 * grid));
      if (rotation_in_window(r, lo, hi)) return RotationTarget{t, r};
    }
  }
  throw BudgetExhausted("rotation_target search exhausted", "");
}

PerturbRotation perturb_rotation(const PLCocycle& phi, const Rational& lo,
                                 const Rational& hi, unsigned budget) {
  if (!phi.all_degree_one())
    throw PreconditionError("perturb_rotation needs degree +1 fiber maps");
  const SystemPtr& sys = phi.sys;
  Int m = sys->multiplicity(phi.level);

  // Shrink the target: hit the middle half of I per cylinder, then perturb
  // the chosen targets into a coboundary-plus-small cocycle with margin.
  Rational margin = (hi - lo) / 4;
  Rational slo = lo + margin, shi = hi - margin;
  std::vector<CircleValue> targets;
  for (Int k = 0; k < m; ++k) {
    RotationTarget t = rotation_target(phi.at(k), slo, shi, budget);
    targets.push_back(CircleValue(t.t));
  }
  CircleCocycle xi{sys, phi.level, std::move(targets)};
  CircleCocycle eta = cocycle::perturb(xi, margin / 2);

  // Per-cylinder certificate: r(R_{eta(alpha x) - eta(x)} ∘ phi_x) in I.
  PerturbRotation out{eta, {}};
  Int me = sys->multiplicity(eta.level);
  for (Int k = 0; k < me; ++k) {
    Int next = exact::mod_floor(k + 1, me);
    CircleValue delta = eta.at(next) - eta.at(k);
    PLHomeo conj = PLHomeo::compose(PLHomeo::rotation(delta), phi.at(k));
    RotationNumber r = rotation_number(conj, budget);
    if (!rotation_in_window(r, lo, hi))
      throw Error("perturb_rotation: certificate failed on cylinder " +
                  k.get_str());
    out.certificates.push_back(std::move(r));
  }
  return out;
}

// --- simulation ----------------------------------------------------------------

namespace {

double to_double(const CircleValue& v) {
  exact::Interval e = v.representative().enclosure(40);
  return e.mid().get_d();
}

void finish_diagnostics(OrbitSample& s) {
  std::array<long, 64> counts{};
  long total = 0;
  for (const auto& st : s.steps) {
    double f = st.fiber_dyadic - std::floor(st.fiber_dyadic);
    int cell = std::min(63, static_cast<int>(f * 64.0));
    counts[static_cast<std::size_t>(cell)]++;
    ++total;
  }
  s.cells_visited = 0;
  s.discrepancy = 0.0;
  for (long c : counts) {
    if (c) ++s.cells_visited;
    double d = std::abs(static_cast<double>(c) / total - 1.0 / 64.0);
    s.discrepancy = std::max(s.discrepancy, d);
  }
}

}  // namespace

OrbitSample simulate(const SystemPtr& sys, const std::optional<SignCocycle>& o,
                     const CircleCocycle& xi, const cantor::CantorPoint& start,
                     const CircleValue& fiber_start, long steps,
                     bool exact_mode) {
  int level = std::max({start.level, xi.level, o ? o->level : 0, 1});
  Int m = sys->multiplicity(level);
  OrbitSample out;
  out.level = level;
  out.exact = exact_mode;
  out.steps.reserve(static_cast<std::size_t>(steps) + 1);

  Int r = exact::mod_floor(start.residue, m);
  CircleValue t = fiber_start;
  double td = to_double(fiber_start);
  out.steps.push_back({r, t, td});
  for (long i = 0; i < steps; ++i) {
    bool flip = o && o->at(r);
    if (exact_mode) {
      t = flip ? (t + xi.at(r)).negated() : t + xi.at(r);
    }
    double x = td + to_double(xi.at(r));
    td = flip ? -x : x;
    td -= std::floor(td);
    r = exact::mod_floor(r + 1, m);
    out.steps.push_back({r, exact_mode ? t : CircleValue(), td});
    if (exact_mode) out.steps.back().fiber_dyadic = to_double(t);
  }
  finish_diagnostics(out);
  return out;
}

OrbitSample simulate_inverse(const SystemPtr& sys,
                             const std::optional<SignCocycle>& o,
                             const CircleCocycle& xi,
                             const cantor::CantorPoint& start,
                             const CircleValue& fiber_start, long steps) {
  int level = std::max({start.level, xi.level, o ? o->level : 0, 1});
  Int m = sys->multiplicity(level);
  OrbitSample out;
  out.level = level;
  out.exact = true;

  Int r = exact::mod_floor(start.residue, m);
  CircleValue t = fiber_start;
  out.steps.push_back({r, t, to_double(t)});
  for (long i = 0; i < steps; ++i) {
    // (alpha x phi)^{-1}(x, t) = (alpha^{-1}x, phi_{alpha^{-1}x}^{-1}(t)).
    r = exact::mod_floor(r - 1, m);
    bool flip = o && o->at(r);
    // phi = lambda^o R_xi: phi^{-1} = R_{-xi} lambda^o.
    t = flip ? t.negated() - xi.at(r) : t - xi.at(r);
    out.steps.push_back({r, t, to_double(t)});
  }
  finish_diagnostics(out);
  return out;
}

// --- Example construction -------------------------------------------------------

Example93 example93_cocycle(const SystemPtr& sys,
                            const std::vector<CircleValue>& targets) {
  if (sys->multiplicity(1) != 3 || sys->growth() != 3)
    throw PreconditionError("example93_cocycle expects the 3^inf odometer");
  const int n_levels = static_cast<int>(targets.size());
  Example93 out;
  out.o = SignCocycle::constant(sys, 1);

  // s_n in (-1/2, 1/2] with s_n ≡ t_n - t_{n-1}.
  CircleValue prev;
  for (int n = 1; n <= n_levels; ++n) {
    CircleValue diff = targets[static_cast<std::size_t>(n - 1)] - prev;
    out.s.push_back(diff.centered_lift());
    prev = targets[static_cast<std::size_t>(n - 1)];
  }

  // Layer n: 0 on residues < 3^{n-1}, else ((-1)^k s_n / (2*3^{n-1})) mod 1
  // with k the level-n residue.
  auto layer_value = [&](int n, const Int& k) -> exact::SymbolicReal {
    Int half;
    mpz_ui_pow_ui(half.get_mpz_t(), 3,
                  static_cast<unsigned long>(n - 1));
    if (k < half) return exact::SymbolicReal();
    Rational scale = exact::make_rational(1, 2 * half);
    exact::SymbolicReal v = out.s[static_cast<std::size_t>(n - 1)].scaled(scale);
    return mpz_odd_p(k.get_mpz_t()) ? -v : v;
  };

  Int mN = sys->multiplicity(std::max(n_levels, 1));
  std::vector<CircleValue> vals;
  vals.reserve(mN.get_ui());
  for (Int k = 0; k < mN; ++k) {
    exact::SymbolicReal sum;
    for (int n = 1; n <= n_levels; ++n) {
      Int mn = sys->multiplicity(n);
      sum = sum + layer_value(n, exact::mod_floor(k, mn));
    }
    vals.push_back(CircleValue::reduce(sum));
  }
  out.xi = CircleCocycle{sys, std::max(n_levels, 1), std::move(vals)};

  // Re-verify the two defining identities exactly for all n, m <= N:
  //   |xi_n(x)| < 3^{-n}, and
  //   sum_{k<3^n} (-1)^k xi_m(alpha^k x0) = 0 (n < m) or s_m (n >= m).
  bool ok = true;
  for (int n = 1; n <= n_levels && ok; ++n) {
    Int mn = sys->multiplicity(n);
    Rational bound;
    {
      Int p;
      mpz_ui_pow_ui(p.get_mpz_t(), 3, static_cast<unsigned long>(n));
      bound = exact::make_rational(1, p);
    }
    for (Int k = 0; k < mn && ok; ++k) {
      CircleValue v = CircleValue::reduce(layer_value(n, k));
      exact::SymbolicReal gap =
          exact::SymbolicReal(bound) - v.distance_to_zero();
      ok = gap.is_zero() ? false : gap.sign() > 0;
    }
  }
  for (int n = 1; n <= n_levels && ok; ++n) {
    Int mn = sys->multiplicity(n);
    for (int mm = 1; mm <= n_levels && ok; ++mm) {
      CircleValue acc;
      Int m_m = sys->multiplicity(mm);
      for (Int k = 0; k < mn; ++k) {
        CircleValue term = CircleValue::reduce(
            layer_value(mm, exact::mod_floor(k, m_m)));
        acc = mpz_odd_p(k.get_mpz_t()) ? acc - term : acc + term;
      }
      CircleValue expect =
          n < mm ? CircleValue()
                 : CircleValue::reduce(out.s[static_cast<std::size_t>(mm - 1)]);
      ok = acc == expect;
    }
  }
  out.identities_verified = ok;
  if (!ok) throw Error("example93_cocycle: identity re-verification failed");

  // Sum over the dropped tail of the construction.
  out.truncation_note =
      "truncated at level " + std::to_string(n_levels) +
      "; omitted layers are bounded by sum_{n>" + std::to_string(n_levels) +
      "} 3^{-n} = 1/(2*3^" + std::to_string(n_levels) + ")";
  return out;
}

}  // namespace cantork::circlemaps
