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

#include "cantork/cocycle.hpp"

#include <sstream>

namespace cantork::cocycle {

namespace {

std::size_t to_index(const Int& r) { return r.get_ui(); }

}  // namespace

// --- CircleCocycle -----------------------------------------------------------

CircleCocycle CircleCocycle::constant(SystemPtr sys, CircleValue v) {
  return CircleCocycle{std::move(sys), 0, {std::move(v)}};
}

CircleCocycle CircleCocycle::make(SystemPtr sys, int level,
                                  std::vector<CircleValue> values) {
  Int m = sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(values.size())) != m)
    throw PreconditionError("cocycle vector size must equal m_level");
  return CircleCocycle{std::move(sys), level, std::move(values)};
}

const CircleValue& CircleCocycle::at(const Int& residue) const {
  Int m = sys->multiplicity(level);
  return values[to_index(exact::mod_floor(residue, m))];
}

CircleCocycle CircleCocycle::at_level(int deeper) const {
  if (deeper < level) throw PreconditionError("cannot shallow a cocycle");
  if (deeper == level) return *this;
  Int m = sys->multiplicity(deeper);
  std::vector<CircleValue> v;
  v.reserve(m.get_ui());
  for (Int k = 0; k < m; ++k) v.push_back(at(k));
  return CircleCocycle{sys, deeper, std::move(v)};
}

CircleCocycle CircleCocycle::scaled(const Int& n) const {
  std::vector<CircleValue> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(x.scaled(n));
  return CircleCocycle{sys, level, std::move(v)};
}

CircleCocycle CircleCocycle::operator+(const CircleCocycle& o) const {
  if (sys.get() != o.sys.get())
    throw PreconditionError("cocycles over different systems");
  int l = std::max(level, o.level);
  CircleCocycle a = at_level(l), b = o.at_level(l);
  std::vector<CircleValue> v;
  v.reserve(a.values.size());
  for (std::size_t i = 0; i < a.values.size(); ++i)
    v.push_back(a.values[i] + b.values[i]);
  return CircleCocycle{sys, l, std::move(v)};
}

CircleCocycle CircleCocycle::operator-() const {
  std::vector<CircleValue> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(x.negated());
  return CircleCocycle{sys, level, std::move(v)};
}

CircleValue CircleCocycle::cycle_sum(int at_level) const {
  if (at_level < level)
    throw PreconditionError("cycle sum level below cocycle level");
  Int reps = sys->multiplicity(at_level) / sys->multiplicity(level);
  CircleValue total;
  for (const auto& x : values) total = total + x;
  return total.scaled(reps);
}

SymbolicReal CircleCocycle::canonical_mean() const {
  SymbolicReal sum;
  for (const auto& x : values) sum = sum + x.representative();
  return sum.scaled(exact::make_rational(1, sys->multiplicity(level)));
}

exact::TablePtr CircleCocycle::table() const {
  exact::TablePtr t;
  for (const auto& v : values) t = exact::merge_tables(t, v.representative().table());
  return t;
}

// --- RealLift ----------------------------------------------------------------

RealLift RealLift::canonical(const CircleCocycle& xi) {
  RealLift l;
  l.sys = xi.sys;
  l.level = xi.level;
  l.values.reserve(xi.values.size());
  for (const auto& v : xi.values) l.values.push_back(v.representative());
  return l;
}

RealLift RealLift::make(const CircleCocycle& xi, std::vector<SymbolicReal> v) {
  if (v.size() != xi.values.size())
    throw PreconditionError("lift vector size mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (CircleValue::reduce(v[i]) != xi.values[i])
      throw PreconditionError("inconsistent lift: entry " + std::to_string(i) +
                              " does not reduce to the cocycle value");
  RealLift l;
  l.sys = xi.sys;
  l.level = xi.level;
  l.values = std::move(v);
  return l;
}

const SymbolicReal& RealLift::at(const Int& residue) const {
  Int m = sys->multiplicity(level);
  return values[to_index(exact::mod_floor(residue, m))];
}

RealLift RealLift::at_level(int deeper) const {
  if (deeper < level) throw PreconditionError("cannot shallow a lift");
  if (deeper == level) return *this;
  Int m = sys->multiplicity(deeper);
  RealLift l;
  l.sys = sys;
  l.level = deeper;
  l.values.reserve(m.get_ui());
  for (Int k = 0; k < m; ++k) l.values.push_back(at(k));
  return l;
}

CircleCocycle RealLift::reduced() const {
  std::vector<CircleValue> v;
  v.reserve(values.size());
  for (const auto& x : values) v.push_back(CircleValue::reduce(x));
  return CircleCocycle{sys, level, std::move(v)};
}

SymbolicReal RealLift::mean() const {
  SymbolicReal sum;
  for (const auto& x : values) sum = sum + x;
  return sum.scaled(exact::make_rational(1, sys->multiplicity(level)));
}

bool RealLift::in_band(const Rational& lo, const Rational& hi) const {
  for (const auto& x : values)
    if (!exact::in_open_band(x, lo, hi)) return false;
  return true;
}

// --- coboundary / minimality / rigidity --------------------------------------

std::string verdict_str(Verdict v) {
  switch (v) {
    case Verdict::Yes:
      return "yes";
    case Verdict::No:
      return "no";
    case Verdict::Unknown:
      return "unknown";
  }
  return "unknown";
}

namespace {

// Telescoped witness at level j for a cocycle whose level-j cycle sum is 0
// in T: eta(k) = sum_{i=1..k} xi(i); then xi = eta - eta∘alpha^{-1}.
CircleCocycle telescope_witness(const CircleCocycle& xi, int j) {
  Int mj = xi.sys->multiplicity(j);
  std::vector<CircleValue> eta(to_index(mj));
  CircleValue acc;
  eta[0] = acc;
  for (Int k = 1; k < mj; ++k) {
    acc = acc + xi.at(k);
    eta[to_index(k)] = acc;
  }
  return CircleCocycle{xi.sys, j, std::move(eta)};
}

bool verify_coboundary(const CircleCocycle& xi, const CircleCocycle& eta) {
  int l = std::max(xi.level, eta.level);
  Int m = xi.sys->multiplicity(l);
  for (Int k = 0; k < m; ++k) {
    CircleValue rhs = eta.at(k) - eta.at(exact::mod_floor(k - 1, m));
    if (!(xi.at(k) == rhs)) return false;
  }
  return true;
}

}  // namespace

CocycleDecision coboundary_test(const CircleCocycle& xi, int max_level) {
  CocycleDecision out;
  CircleValue theta = xi.cycle_sum(xi.level);
  out.search_level = max_level;

  if (!theta.is_rational()) {
    out.verdict = Verdict::No;
    out.certificate = "cycle sum " + theta.str() +
                      " has a nonzero irrational coordinate";
    return out;
  }
  Rational t = theta.representative().as_rational();  // in [0,1)
  Int m_n = xi.sys->multiplicity(xi.level);
  const Int& q = t.get_den();

  for (int j = xi.level; j <= max_level; ++j) {
    Int ratio = xi.sys->multiplicity(j) / m_n;
    if (mpz_divisible_p(ratio.get_mpz_t(), q.get_mpz_t())) {
      CircleCocycle eta = telescope_witness(xi, std::max(j, 1));
      out.verdict = Verdict::Yes;
      out.witness = eta;
      out.search_level = j;
      out.reverified = verify_coboundary(xi, eta);
      if (!out.reverified) throw Error("coboundary witness failed re-check");
      out.certificate = "telescoped witness at level " + std::to_string(j);
      return out;
    }
  }
  if (!xi.sys->supernatural().admits(
          exact::make_rational(1, q * m_n))) {
    out.verdict = Verdict::No;
    out.certificate = "cycle sum " + exact::rational_str(t) +
                      ": denominator " + q.get_str() +
                      " * m_n never divides a deeper tower height (not "
                      "admitted by " +
                      xi.sys->supernatural().str() + ")";
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.certificate = "witness exists beyond the level budget";
  return out;
}

CocycleDecision minimality_test(const CircleCocycle& xi, int max_level,
                                const CancelToken& cancel) {
  CocycleDecision out;
  out.search_level = max_level;
  CircleValue theta = xi.cycle_sum(xi.level);
  if (!theta.is_rational()) {
    out.verdict = Verdict::Yes;
    out.certificate = "cycle sum " + theta.str() +
                      " is irrational, so n*[xi] != 0 for every n >= 1";
    return out;
  }
  // Rational cycle sum p/q: n = q always gives a coboundary at the cocycle's
  // own level, so the search below terminates with the smallest such n.
  Rational t = theta.representative().as_rational();
  for (Int n = 1; n <= t.get_den(); ++n) {
    cancel.throw_if_cancelled();
    CocycleDecision cb = coboundary_test(xi.scaled(n), max_level);
    if (cb.verdict == Verdict::Yes) {
      out.verdict = Verdict::No;
      out.multiple = n;
      out.witness = cb.witness;
      out.reverified = cb.reverified;
      out.search_level = cb.search_level;
      out.certificate =
          "n*[xi] = 0 for n = " + n.get_str() +
          "; every minimal subset is E = {(x,t) : n t = eta(alpha^{-1} x)} "
          "up to a rotation of the fiber";
      return out;
    }
  }
  // Unreachable for locally constant data over odometers.
  out.verdict = Verdict::Unknown;
  out.certificate = "no multiple resolved within the level budget";
  return out;
}

CocycleDecision rigidity_test(const CircleCocycle& xi, int max_level) {
  CocycleDecision out;
  out.search_level = max_level;
  SymbolicReal mean = xi.canonical_mean();
  if (!mean.is_rational()) {
    out.verdict = Verdict::Yes;
    out.certificate = "mean " + mean.str() +
                      " has an irrational coordinate, so n*mu(lift) never "
                      "lies in Z[1/N]";
    return out;
  }
  CocycleDecision min = minimality_test(xi, max_level);
  if (min.verdict == Verdict::No) {
    out.verdict = Verdict::No;
    out.multiple = min.multiple;
    out.witness = min.witness;
    out.reverified = min.reverified;
    out.certificate =
        "not minimal (n = " + min.multiple->get_str() +
        "): a non-minimal rotation extension has uncountably many minimal "
        "subsets, hence is not rigid";
    return out;
  }
  out.verdict = Verdict::Unknown;
  out.certificate = "mean criterion inconclusive (it is only sufficient)";
  return out;
}

MeanResult cocycle_mean(const CircleCocycle& xi, const RealLift& lift) {
  RealLift::make(xi, lift.values);  // validates consistency
  MeanResult out;
  out.mean = lift.mean();
  out.delta_coset =
      "mod D(K^0) = Z[1/" + xi.sys->supernatural().str() + "]";
  return out;
}

// --- perturbation constructions ------------------------------------------------------

namespace {

int perturb_level(const CircleCocycle& xi, const Rational& eps, int floor_level) {
  if (eps <= 0) throw PreconditionError("eps must be positive");
  int j = std::max(std::max(xi.level, floor_level), 1);
  while (Rational(xi.sys->multiplicity(j)) * eps <= 1) ++j;
  return j;
}

void check_perturb_bound(const CircleCocycle& defect_free,  // values to bound
                         const Rational& eps) {
  for (const auto& v : defect_free.values) {
    SymbolicReal gap = SymbolicReal(eps) - v.distance_to_zero();
    if (gap.is_zero() || gap.sign() < 0)
      throw Error("perturbation bound re-verification failed");
  }
}

}  // namespace

CircleCocycle perturb(const CircleCocycle& xi, const Rational& eps) {
  return perturb_signed(xi, SignCocycle::constant(xi.sys, 0), eps);
}

CircleCocycle perturb_signed(const CircleCocycle& xi, const SignCocycle& c,
                             const Rational& eps) {
  if (xi.sys.get() != c.sys.get())
    throw PreconditionError("cocycle and sign cocycle over different systems");
  int j = perturb_level(xi, eps, c.level);
  Int h = xi.sys->multiplicity(j);

  // Prefix parities P_k = (-1)^{sum_{i<k} c(i)} untwist the recursion:
  // with xi'(k) = P_k xi(k), run the plain telescoping on xi' and twist the
  // result back by eta(k) = P_k zeta(k).
  std::vector<int> parity(to_index(h) + 1);
  parity[0] = 1;
  for (Int k = 0; k < h; ++k)
    parity[to_index(k) + 1] =
        c.at(k) ? -parity[to_index(k)] : parity[to_index(k)];

  std::vector<CircleValue> xi_tw(to_index(h));
  for (Int k = 0; k < h; ++k) {
    CircleValue v = xi.at(k);
    xi_tw[to_index(k)] = parity[to_index(k)] > 0 ? v : v.negated();
  }

  CircleValue kappa;  // twisted cycle sum
  for (const auto& v : xi_tw) kappa = kappa + v;
  SymbolicReal kappa_lift = kappa.centered_lift();  // in (-1/2, 1/2] ⊂ (-1,1)

  std::vector<CircleValue> eta(to_index(h));
  CircleValue partial;
  for (Int k = 0; k < h; ++k) {
    // zeta(k) = sum_{i<k} xi'(i) - (k/h) kappa~
    SymbolicReal drift = kappa_lift.scaled(exact::make_rational(k, h));
    CircleValue zeta =
        CircleValue::reduce(partial.representative() - drift);
    eta[to_index(k)] =
        parity[to_index(k)] > 0 ? zeta : zeta.negated();
    partial = partial + xi_tw[to_index(k)];
  }
  CircleCocycle out{xi.sys, j, std::move(eta)};

  // Exact re-verification of |xi(x) + eta(x) - (-1)^{c(x)} eta(alpha x)| < eps.
  std::vector<CircleValue> defect(to_index(h));
  for (Int k = 0; k < h; ++k) {
    Int next = exact::mod_floor(k + 1, h);
    CircleValue ea = out.at(next);
    if (c.at(k)) ea = ea.negated();
    defect[to_index(k)] = xi.at(k) + out.at(k) - ea;
  }
  check_perturb_bound(CircleCocycle{xi.sys, j, std::move(defect)}, eps);
  return out;
}

// --- Bott element and control -------------------------------------------------

kgroup::K0Class bott(const RealLift& xi_context, const CircleCocycle& eta,
                     const std::optional<RealLift>& eta_lift) {
  const SystemPtr& sys = xi_context.sys;
  if (sys.get() != eta.sys.get())
    throw PreconditionError("bott: context and eta over different systems");
  if (!xi_context.in_band(Rational(7, 15), Rational(8, 15)))
    throw PreconditionError("bott: context lift must lie in (7/15, 8/15)");

  int l = std::max(xi_context.level, eta.level);
  if (eta_lift) l = std::max(l, eta_lift->level);
  Int m = sys->multiplicity(l);

  RealLift lift = eta_lift ? eta_lift->at_level(l)
                           : RealLift::canonical(eta.at_level(l));
  RealLift::make(eta.at_level(l), lift.values);  // consistency check
  RealLift xi = xi_context.at_level(l);

  // H(alpha, xi): (xi + eta - eta∘alpha)(x) in (1/10, 9/10), exactly.
  for (Int k = 0; k < m; ++k) {
    Int next = exact::mod_floor(k + 1, m);
    CircleValue band =
        CircleValue::reduce(xi.at(k)) + eta.at(k) - eta.at(next);
    if (!exact::in_open_band(band.representative(), Rational(1, 10),
                             Rational(9, 10)))
      throw PreconditionError("bott: eta is not in H(alpha, xi)");
  }

  std::vector<Int> f(to_index(m));
  for (Int k = 0; k < m; ++k) {
    Int next = exact::mod_floor(k + 1, m);
    f[to_index(k)] = exact::nearest_integer(lift.at(k) - lift.at(next));
  }
  return kgroup::k0_class(sys, l, std::move(f));
}

ControlResult control(const RealLift& xi1, const RealLift& xi2, int f_level,
                      const std::vector<Int>& f, const Rational& eps) {
  const SystemPtr& sys = xi1.sys;
  if (sys.get() != xi2.sys.get())
    throw PreconditionError("control: lifts over different systems");
  if (!(eps > 0) || eps >= Rational(1, 10))
    throw PreconditionError("control: need 0 < eps < 1/10");
  if (!xi1.in_band(Rational(7, 15), Rational(8, 15)) ||
      !xi2.in_band(Rational(7, 15), Rational(8, 15)))
    throw PreconditionError("control: lifts must lie in (7/15, 8/15)");
  kgroup::K0Class f_class = kgroup::k0_class(sys, f_level, f);
  {
    SymbolicReal gap = xi2.mean() - xi1.mean() -
                       SymbolicReal(f_class.value);
    if (!gap.is_zero())
      throw PreconditionError(
          "control: mean identity mu(xi2) = mu(xi1) + mu(f) fails");
  }

  int j = std::max(std::max(xi1.level, xi2.level), std::max(f_level, 1));
  Int h = sys->multiplicity(j);
  RealLift a = xi1.at_level(j), b = xi2.at_level(j);

  // Tower averages of (xi1 - xi2 + f) vanish exactly at any level >= the
  // data level, so the telescoped eta needs no drift correction.
  RealLift eta_lift;
  eta_lift.sys = sys;
  eta_lift.level = j;
  eta_lift.values.assign(to_index(h), SymbolicReal());
  SymbolicReal acc;
  for (Int k = 1; k < h; ++k) {
    acc = acc + (b.at(k - 1) - a.at(k - 1));
    eta_lift.values[to_index(k)] = acc;
  }

  ControlResult out{
      CircleCocycle{sys, j, {}}, RealLift{}, kgroup::K0Class{}, false, false};
  out.eta = eta_lift.reduced();
  out.eta_lift = RealLift::make(out.eta, eta_lift.values);

  // |(xi1^ - xi2^)(x) - (eta - eta∘alpha)(x)| < eps, exactly.
  bool ok = true;
  for (Int k = 0; k < h && ok; ++k) {
    Int next = exact::mod_floor(k + 1, h);
    CircleValue d = CircleValue::reduce(a.at(k)) -
                    CircleValue::reduce(b.at(k)) -
                    (out.eta.at(k) - out.eta.at(next));
    SymbolicReal gap = SymbolicReal(eps) - d.distance_to_zero();
    ok = !gap.is_zero() && gap.sign() > 0;
  }
  out.bound_verified = ok;
  if (!ok) throw Error("control: epsilon bound re-verification failed");

  out.bott_class = bott(xi1, out.eta, out.eta_lift);
  out.bott_matches = kgroup::k0_compare(out.bott_class, f_class).equal;
  if (!out.bott_matches) throw Error("control: B_alpha(eta) != [f]");
  return out;
}

// --- flip cohomology ----------------------------------------------------------

DigitShift digit_conjugacy(const SystemPtr& sys, int level,
                           std::span<const Int> permutation) {
  Int m = sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(permutation.size())) != m)
    throw PreconditionError("conjugacy permutation size must equal m_level");
  for (Int k = 0; k < m; ++k) {
    Int next = exact::mod_floor(k + 1, m);
    Int expect = exact::mod_floor(permutation[to_index(k)] + 1, m);
    if (permutation[to_index(next)] != expect)
      throw PreconditionError(
          "not a conjugacy: the permutation does not commute with +1");
  }
  return DigitShift{level, permutation[0]};
}

CocycleDecision flip_cohomology_test(const CircleCocycle& xi,
                                     const CircleCocycle& zeta,
                                     const std::optional<DigitShift>& conj,
                                     int max_level) {
  if (xi.sys.get() != zeta.sys.get())
    throw PreconditionError("flip test needs cocycles on one system");
  CircleCocycle zf = zeta;
  if (conj && conj->shift != 0) {
    int l = std::max(zeta.level, conj->level);
    Int m = xi.sys->multiplicity(l);
    std::vector<CircleValue> v(to_index(m));
    for (Int k = 0; k < m; ++k)
      v[to_index(k)] = zeta.at(exact::mod_floor(k + conj->shift, m));
    zf = CircleCocycle{xi.sys, l, std::move(v)};
  }
  CocycleDecision plus = coboundary_test(xi + (-zf), max_level);
  if (plus.verdict == Verdict::Yes) {
    plus.certificate = "[xi] = [zeta∘F]: " + plus.certificate;
    return plus;
  }
  CocycleDecision minus = coboundary_test(xi + zf, max_level);
  if (minus.verdict == Verdict::Yes) {
    minus.certificate = "[xi] = -[zeta∘F] (flip branch): " + minus.certificate;
    return minus;
  }
  CocycleDecision out;
  if (plus.verdict == Verdict::No && minus.verdict == Verdict::No) {
    out.verdict = Verdict::No;
    out.certificate = "neither branch: {" + plus.certificate + "} and {" +
                      minus.certificate + "}";
  } else {
    out.verdict = Verdict::Unknown;
    out.certificate = "undecided within the level budget";
  }
  return out;
}

// --- untwisting and minimal sets ----------------------------------------------

UntwistResult untwist(const SignCocycle& o, const CircleCocycle& xi) {
  if (o.sys.get() != xi.sys.get())
    throw PreconditionError("untwist: data over different systems");
  cantor::SkewZ2 sk = cantor::skew_z2(xi.sys, o);
  if (!sk.minimal)
    throw PreconditionError("untwist: [o] = 0, the skew product splits");
  int base_l = std::max(std::max(xi.level, o.level), sk.base_level);
  int skew_l = sk.skew_level_of(base_l);
  Int two_m = 2 * xi.sys->multiplicity(base_l);
  std::vector<CircleValue> v(to_index(two_m));
  for (Int r = 0; r < two_m; ++r) {
    auto [q, sheet] = sk.decompose(r, skew_l);
    CircleValue x = xi.at(q);
    v[to_index(r)] = sheet ? x.negated() : x;
  }
  UntwistResult out{sk, CircleCocycle{sk.skew_odometer, skew_l, std::move(v)}};
  return out;
}

MinimalSetsResult minimal_sets_isom(const SignCocycle& o,
                                    const CircleCocycle& xi, int max_level,
                                    const CancelToken& cancel) {
  MinimalSetsResult out;
  UntwistResult ut = untwist(o, xi);  // throws when [o] = 0
  const cantor::SkewZ2& sk = ut.skew;

  for (Int n = 1; n <= max_level; ++n) {
    cancel.throw_if_cancelled();
    CocycleDecision cb = coboundary_test(ut.cocycle.scaled(n), max_level);
    if (cb.verdict != Verdict::Yes) continue;

    // Balance the witness: zeta + zeta∘gamma is constant by minimality of
    // the skew product; subtract a half of it so the witness is delta(eta).
    const CircleCocycle& zeta = *cb.witness;
    int skew_l = zeta.level;
    int base_l = sk.base_level_of(skew_l);
    Int m = xi.sys->multiplicity(base_l);
    Int two_m = 2 * m;
    CircleCocycle zl = zeta.at_level(skew_l);

    CircleValue cst;
    bool have = false;
    for (Int r = 0; r < two_m; ++r) {
      CircleValue s = zl.at(r) + zl.at(exact::mod_floor(r + m, two_m));
      if (!have) {
        cst = s;
        have = true;
      } else if (!(s == cst)) {
        throw Error("minimal_sets_isom: zeta + zeta∘gamma not constant");
      }
    }
    CircleValue half = CircleValue::reduce(
        cst.representative().scaled(Rational(1, 2)));

    std::vector<CircleValue> eta_vals(to_index(m));
    for (Int q = 0; q < m; ++q) {
      Int r = sk.skew_residue(q, 0, skew_l);
      eta_vals[to_index(q)] = zl.at(r) - half;
    }
    CircleCocycle eta{xi.sys, base_l, std::move(eta_vals)};

    // Re-substitute n*xi = eta - alpha_phi^*(eta), where
    // alpha_phi^*(eta)(x) = (-1)^{o(alpha^{-1} x)} eta(alpha^{-1} x).
    bool ok = true;
    CircleCocycle nxi = xi.scaled(n);
    for (Int q = 0; q < m && ok; ++q) {
      Int prev = exact::mod_floor(q - 1, m);
      CircleValue pulled = o.at(prev) ? eta.at(prev).negated() : eta.at(prev);
      ok = nxi.at(q) == eta.at(q) - pulled;
    }
    if (!ok) throw Error("minimal_sets_isom: witness re-verification failed");

    out.minimal_within_bound = false;
    out.multiple = n;
    out.eta = eta;
    out.reverified = true;
    out.family =
        "E_s = {(x,t) : n t = alpha_phi^*(eta)(x) + s or "
        "n t = alpha_phi^*(eta)(x) - s}, n = " +
        n.get_str();
    out.certificate = "witness found through the skew product at level " +
                      std::to_string(skew_l);
    return out;
  }
  out.minimal_within_bound = true;
  out.certificate =
      "no witness with n <= " + std::to_string(max_level) +
      "; minimality itself has no finite certificate for this class";
  return out;
}

InducedCocycle induce(const CircleCocycle& xi, int level,
                      const Int& base_residue) {
  if (level < xi.level)
    throw PreconditionError("induce: cocycle must be locally constant at or "
                            "above the cylinder level");
  InducedCocycle out{cantor::induce_system(xi.sys, level, base_residue),
                     xi.cycle_sum(level)};
  return out;
}

}  // namespace cantork::cocycle
