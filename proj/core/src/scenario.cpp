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

#include "cantork/scenario.hpp"

#include <fstream>
#include <future>
#include <map>
#include <sstream>

#include "cantork/circlemaps.hpp"
#include "cantork/rieffel.hpp"

namespace cantork::cli {

using json = nlohmann::ordered_json;
using exact::CircleValue;
using exact::Int;
using exact::Rational;
using exact::SymbolicReal;

namespace {

const json& require(const json& j, const std::string& key) {
  auto it = j.find(key);
  if (it == j.end())
    throw PreconditionError("missing field '" + key + "' in " + j.dump());
  return *it;
}

Int parse_int(const json& j) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw PreconditionError("expected an integer, got " + j.dump());
}

Rational parse_rat(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return exact::parse_rational(j.get<std::string>());
  throw PreconditionError("expected a rational, got " + j.dump());
}

struct Env {
  exact::TablePtr table;
  std::map<std::string, cantor::SystemPtr> systems;
  std::map<std::string, cocycle::CircleCocycle> cocycles;
  std::map<std::string, cantor::SignCocycle> signs;
  std::map<std::string, cocycle::RealLift> lifts;
  std::map<std::string, circlemaps::PLHomeo> pl_maps;

  SymbolicReal sym(const json& j) const {
    if (j.is_number_integer()) return SymbolicReal(Rational(j.get<long>()));
    if (j.is_string())
      return exact::parse_symbolic(j.get<std::string>(), table);
    throw PreconditionError("expected a symbolic value, got " + j.dump());
  }
  CircleValue circ(const json& j) const { return CircleValue::reduce(sym(j)); }

  const cantor::SystemPtr& system(const json& j) const {
    auto it = systems.find(j.get<std::string>());
    if (it == systems.end())
      throw PreconditionError("unknown system '" + j.get<std::string>() + "'");
    return it->second;
  }
  const cocycle::CircleCocycle& cocycle_ref(const json& j) const {
    auto it = cocycles.find(j.get<std::string>());
    if (it == cocycles.end())
      throw PreconditionError("unknown cocycle '" + j.get<std::string>() + "'");
    return it->second;
  }
  const cantor::SignCocycle& sign_ref(const json& j) const {
    auto it = signs.find(j.get<std::string>());
    if (it == signs.end())
      throw PreconditionError("unknown sign cocycle '" +
                              j.get<std::string>() + "'");
    return it->second;
  }
  const cocycle::RealLift& lift_ref(const json& j) const {
    auto it = lifts.find(j.get<std::string>());
    if (it == lifts.end())
      throw PreconditionError("unknown lift '" + j.get<std::string>() + "'");
    return it->second;
  }
  const circlemaps::PLHomeo& pl_ref(const json& j) const {
    auto it = pl_maps.find(j.get<std::string>());
    if (it == pl_maps.end())
      throw PreconditionError("unknown pl_map '" + j.get<std::string>() + "'");
    return it->second;
  }
};

json sym_json(const SymbolicReal& v) { return v.str(); }
json circ_json(const CircleValue& v) { return v.representative().str(); }
json rat_json(const Rational& q) { return exact::rational_str(q); }

json cocycle_json(const cocycle::CircleCocycle& c) {
  json out;
  out["level"] = c.level;
  json vals = json::array();
  for (const auto& v : c.values) vals.push_back(circ_json(v));
  out["values"] = vals;
  return out;
}

json sign_json(const cantor::SignCocycle& c) {
  json out;
  out["level"] = c.level;
  json vals = json::array();
  for (auto v : c.values) vals.push_back(static_cast<int>(v));
  out["values"] = vals;
  return out;
}

json decision_json(const cocycle::CocycleDecision& d) {
  json out;
  out["verdict"] = cocycle::verdict_str(d.verdict);
  if (d.multiple) out["n"] = d.multiple->get_str();
  if (d.witness) {
    json w;
    w["eta"] = cocycle_json(*d.witness);
    w["reverified"] = d.reverified;
    out["witness"] = w;
  }
  out["certificate"] = d.certificate;
  if (d.verdict == cocycle::Verdict::Unknown) out["reason"] = d.certificate;
  out["search_level"] = d.search_level;
  return out;
}

json rotation_json(const circlemaps::RotationNumber& r) {
  json out;
  out["exact"] = r.exact;
  if (r.value) out["value"] = circ_json(*r.value);
  out["enclosure"] = {rat_json(r.enclosure.lo), rat_json(r.enclosure.hi)};
  if (r.witness) {
    json w;
    w["period"] = r.witness->period.get_str();
    w["winding"] = r.witness->winding.get_str();
    w["point"] = sym_json(r.witness->point);
    w["reverified"] = true;
    out["witness"] = w;
  }
  return out;
}

kgroup::RealEmbeddedGroup parse_group(const Env& env, const json& j) {
  kgroup::RealEmbeddedGroup g;
  g.table = env.table;
  if (j.contains("system"))
    g.rational_part = env.system(j.at("system"))->supernatural();
  if (j.contains("z_generators"))
    for (const auto& s : j.at("z_generators"))
      g.z_generators.push_back(env.sym(s));
  return g;
}

crossed::SystemDescriptor parse_descriptor(const Env& env, const json& j) {
  if (j.contains("denjoy")) {
    const json& d = j.at("denjoy");
    return crossed::denjoy_descriptor(env.sym(require(d, "theta")),
                                      env.sym(require(d, "mean")));
  }
  if (j.contains("odometer")) {
    const json& d = j.at("odometer");
    return crossed::odometer_descriptor(env.system(require(d, "system")),
                                        env.cocycle_ref(require(d, "cocycle")));
  }
  throw PreconditionError("descriptor needs 'denjoy' or 'odometer'");
}

circlemaps::PLCocycle parse_pl_cocycle(const Env& env, const json& j) {
  const cantor::SystemPtr& sys = env.system(require(j, "system"));
  int level = require(j, "level").get<int>();
  std::vector<circlemaps::PLHomeo> maps;
  for (const auto& name : require(j, "maps"))
    maps.push_back(env.pl_ref(name));
  return circlemaps::PLCocycle::make(sys, level, std::move(maps));
}

json verify_json(const crossed::VerifyReport& v) {
  json out;
  out["ok"] = v.ok;
  out["identity_i"] = v.identity_i;
  out["identity_ii"] = v.identity_ii;
  out["identity_iii"] = v.identity_iii;
  out["detail"] = v.detail;
  return out;
}

// --- declarations -------------------------------------------------------------

void declare_generators(Env& env, const json& doc) {
  env.table = std::make_shared<exact::GeneratorTable>();
  if (!doc.contains("generators")) return;
  for (const auto& g : doc.at("generators")) {
    std::string name = require(g, "name").get<std::string>();
    std::string kind = require(g, "kind").get<std::string>();
    if (kind == "sqrt") {
      env.table->add_sqrt(name, parse_rat(require(g, "radicand")));
    } else if (kind == "golden") {
      env.table->add_golden_ratio(name);
    } else if (kind == "stream") {
      std::vector<exact::Interval> stages;
      for (const auto& iv : require(g, "intervals"))
        stages.emplace_back(parse_rat(iv.at(0)), parse_rat(iv.at(1)));
      env.table->add_stream(name, std::move(stages));
    } else {
      throw PreconditionError("unknown generator kind '" + kind + "'");
    }
  }
}

void declare_systems(Env& env, const json& doc) {
  if (!doc.contains("systems")) return;
  for (const auto& s : doc.at("systems")) {
    std::string name = require(s, "name").get<std::string>();
    const json& od = require(s, "odometer");
    std::vector<Int> mults;
    for (const auto& m : require(od, "mults")) mults.push_back(parse_int(m));
    Int growth = 0;
    if (od.contains("extend")) {
      std::string e = od.at("extend").get<std::string>();
      if (e.empty() || e[0] != 'x')
        throw PreconditionError("extend must look like \"x3\"");
      growth = Int(e.substr(1));
    }
    env.systems.emplace(name, cantor::make_odometer(std::move(mults), growth));
  }
}

void declare_data(Env& env, const json& doc) {
  if (doc.contains("sign_cocycles"))
    for (const auto& c : doc.at("sign_cocycles")) {
      std::vector<std::uint8_t> vals;
      for (const auto& v : require(c, "values"))
        vals.push_back(static_cast<std::uint8_t>(v.get<int>() & 1));
      env.signs.emplace(
          require(c, "name").get<std::string>(),
          cantor::SignCocycle::make(env.system(require(c, "system")),
                                    require(c, "level").get<int>(),
                                    std::move(vals)));
    }
  if (doc.contains("cocycles"))
    for (const auto& c : doc.at("cocycles")) {
      std::vector<CircleValue> vals;
      for (const auto& v : require(c, "values")) vals.push_back(env.circ(v));
      env.cocycles.emplace(
          require(c, "name").get<std::string>(),
          cocycle::CircleCocycle::make(env.system(require(c, "system")),
                                       require(c, "level").get<int>(),
                                       std::move(vals)));
    }
  if (doc.contains("lifts"))
    for (const auto& l : doc.at("lifts")) {
      const auto& xi = env.cocycle_ref(require(l, "cocycle"));
      std::vector<SymbolicReal> vals;
      for (const auto& v : require(l, "values")) vals.push_back(env.sym(v));
      env.lifts.emplace(require(l, "name").get<std::string>(),
                        cocycle::RealLift::make(xi, std::move(vals)));
    }
  if (doc.contains("pl_maps"))
    for (const auto& p : doc.at("pl_maps")) {
      std::vector<CircleValue> bks;
      std::vector<SymbolicReal> vals;
      for (const auto& b : require(p, "breakpoints")) bks.push_back(env.circ(b));
      for (const auto& v : require(p, "values")) vals.push_back(env.sym(v));
      circlemaps::PLHomeo h =
          circlemaps::PLHomeo::increasing(std::move(bks), std::move(vals));
      if (p.value("degree", 1) == -1) h = h.with_degree_flip();
      env.pl_maps.emplace(require(p, "name").get<std::string>(), std::move(h));
    }
}

// --- command dispatch -----------------------------------------------------------

json run_command(Env& env, const json& cmd, const RunFlags& flags) {
  std::string op = require(cmd, "op").get<std::string>();
  int budget = cmd.value("max_level", flags.budget_level);
  json out;
  out["op"] = op;

  if (op == "system_info") {
    const auto& sys = env.system(require(cmd, "system"));
    out["supernatural"] = sys->supernatural().str();
    out["description"] = sys->str();
  } else if (op == "towers") {
    const auto& sys = env.system(require(cmd, "system"));
    cantor::TowerPartition tp =
        cantor::towers(sys, require(cmd, "level").get<int>());
    out["height"] = tp.towers[0].height.get_str();
    out["base_residue"] = tp.towers[0].base_residue.get_str();
    out["roof_residue"] = tp.roof_residue().get_str();
  } else if (op == "apply_transform") {
    const auto& sys = env.system(require(cmd, "system"));
    int level = require(cmd, "level").get<int>();
    cantor::CantorPoint p{sys, level, parse_int(require(cmd, "residue"))};
    cantor::CantorPoint q =
        cantor::apply_transform(p, parse_int(require(cmd, "k")), level);
    out["residue"] = q.residue.get_str();
  } else if (op == "measure_of") {
    const auto& sys = env.system(require(cmd, "system"));
    std::vector<SymbolicReal> vals;
    for (const auto& v : require(cmd, "values")) vals.push_back(env.sym(v));
    cantor::InvariantMeasure mu{sys};
    out["value"] = sym_json(
        cantor::measure_of(mu, require(cmd, "level").get<int>(), vals));
  } else if (op == "induce") {
    const auto& xi = env.cocycle_ref(require(cmd, "cocycle"));
    if (cmd.contains("residues") && require(cmd, "residues").size() != 1)
      throw PreconditionError("induce: U must be a single cylinder");
    Int residue = cmd.contains("residues")
                      ? parse_int(require(cmd, "residues").at(0))
                      : parse_int(require(cmd, "residue"));
    cocycle::InducedCocycle ind =
        cocycle::induce(xi, require(cmd, "level").get<int>(), residue);
    out["return_time"] = ind.system.return_time.get_str();
    out["induced_supernatural"] = ind.system.induced->supernatural().str();
    out["induced_value"] = circ_json(ind.value);
  } else if (op == "skew_z2") {
    cantor::SkewZ2 sk = cantor::skew_z2(env.system(require(cmd, "system")),
                                        env.sign_ref(require(cmd, "sign")));
    out["minimal"] = sk.minimal;
    if (sk.minimal) {
      out["skew_supernatural"] = sk.skew_odometer->supernatural().str();
    } else {
      json w;
      w["chi"] = sign_json(*sk.witness_chi);
      w["reverified"] = true;
      out["witness"] = w;
      out["components"] = sk.components;
    }
  } else if (op == "k0_class") {
    const auto& sys = env.system(require(cmd, "system"));
    std::vector<Int> f;
    for (const auto& v : require(cmd, "values")) f.push_back(parse_int(v));
    kgroup::K0Class c =
        kgroup::k0_class(sys, require(cmd, "level").get<int>(), std::move(f));
    out["value"] = rat_json(c.value);
    out["group"] = "Z[1/" + sys->supernatural().str() + "]";
  } else if (op == "k0_compare") {
    const auto& sys = env.system(require(cmd, "system"));
    auto parse_class = [&](const json& j) {
      std::vector<Int> f;
      for (const auto& v : require(j, "values")) f.push_back(parse_int(v));
      return kgroup::k0_class(sys, require(j, "level").get<int>(),
                              std::move(f));
    };
    kgroup::K0Compare c = kgroup::k0_compare(parse_class(require(cmd, "a")),
                                             parse_class(require(cmd, "b")));
    out["equal"] = c.equal;
    out["a_positive"] = c.a_positive;
    out["a_le_b"] = c.a_le_b;
  } else if (op == "state_eval") {
    const auto& sys = env.system(require(cmd, "system"));
    std::vector<Int> f;
    for (const auto& v : require(cmd, "values")) f.push_back(parse_int(v));
    kgroup::K0Class c =
        kgroup::k0_class(sys, require(cmd, "level").get<int>(), std::move(f));
    cantor::InvariantMeasure mu{sys};
    out["value"] = sym_json(kgroup::state_eval(c, mu));
  } else if (op == "mod2_class") {
    kgroup::Mod2Class mc = kgroup::mod2_class(
        env.system(require(cmd, "system")), env.sign_ref(require(cmd, "sign")));
    out["is_zero"] = mc.is_zero;
    out["class_value"] = rat_json(mc.class_value);
    out["description"] = mc.description;
    if (mc.witness) {
      json w;
      w["chi"] = sign_json(*mc.witness);
      w["reverified"] = true;
      out["witness"] = w;
    }
  } else if (op == "quotient_torsion") {
    kgroup::QuotientTorsion qt = kgroup::quotient_torsion(
        env.system(require(cmd, "system")), env.sign_ref(require(cmd, "sign")));
    out["quotient"] = qt.quotient_description;
    out["torsion_order"] = qt.torsion_order.get_str();
    out["f0_class"] = rat_json(qt.f0_value);
    out["doubling_in_subgroup"] = qt.doubling_in_subgroup;
  } else if (op == "order_iso_decision") {
    kgroup::OrderIso oi = kgroup::order_iso_decision(
        parse_group(env, require(cmd, "g")), parse_group(env, require(cmd, "h")),
        parse_group(env, require(cmd, "sub_g")),
        parse_group(env, require(cmd, "sub_h")));
    out["exists"] = oi.exists;
    out["reason"] = oi.reason;
  } else if (op == "coboundary_test") {
    out.update(decision_json(
        cocycle::coboundary_test(env.cocycle_ref(require(cmd, "cocycle")),
                                 budget)));
  } else if (op == "minimality_test") {
    out.update(decision_json(
        cocycle::minimality_test(env.cocycle_ref(require(cmd, "cocycle")),
                                 budget)));
  } else if (op == "rigidity_test") {
    out.update(decision_json(cocycle::rigidity_test(
        env.cocycle_ref(require(cmd, "cocycle")), budget)));
  } else if (op == "cocycle_mean") {
    const auto& xi = env.cocycle_ref(require(cmd, "cocycle"));
    cocycle::RealLift lift = cmd.contains("lift")
                                 ? env.lift_ref(cmd.at("lift"))
                                 : cocycle::RealLift::canonical(xi);
    cocycle::MeanResult m = cocycle::cocycle_mean(xi, lift);
    out["mean"] = sym_json(m.mean);
    out["delta_rep"] = m.delta_coset;
  } else if (op == "perturb" || op == "perturb_signed") {
    const auto& xi = env.cocycle_ref(require(cmd, "cocycle"));
    Rational eps = parse_rat(require(cmd, "eps"));
    cocycle::CircleCocycle eta =
        op == "perturb"
            ? cocycle::perturb(xi, eps)
            : cocycle::perturb_signed(xi, env.sign_ref(require(cmd, "sign")),
                                      eps);
    json w;
    w["eta"] = cocycle_json(eta);
    w["reverified"] = true;  // construction throws unless the bound holds
    out["witness"] = w;
    if (cmd.contains("name"))
      env.cocycles.emplace(cmd.at("name").get<std::string>(), eta);
  } else if (op == "control") {
    std::vector<Int> f;
    for (const auto& v : require(cmd, "f_values")) f.push_back(parse_int(v));
    cocycle::ControlResult c = cocycle::control(
        env.lift_ref(require(cmd, "lift1")), env.lift_ref(require(cmd, "lift2")),
        require(cmd, "f_level").get<int>(), f, parse_rat(require(cmd, "eps")));
    json w;
    w["eta"] = cocycle_json(c.eta);
    w["reverified"] = c.bound_verified && c.bott_matches;
    out["witness"] = w;
    out["bott_class"] = rat_json(c.bott_class.value);
    if (cmd.contains("name"))
      env.cocycles.emplace(cmd.at("name").get<std::string>(), c.eta);
  } else if (op == "bott") {
    std::optional<cocycle::RealLift> el;
    if (cmd.contains("eta_lift")) el = env.lift_ref(cmd.at("eta_lift"));
    kgroup::K0Class b = cocycle::bott(env.lift_ref(require(cmd, "context")),
                                      env.cocycle_ref(require(cmd, "eta")), el);
    out["class_value"] = rat_json(b.value);
    json f = json::array();
    for (const auto& x : b.rep) f.push_back(x.get_str());
    out["vector"] = f;
    out["level"] = b.level;
  } else if (op == "flip_cohomology_test") {
    std::optional<cocycle::DigitShift> conj;
    if (cmd.contains("conjugacy")) {
      const json& c = cmd.at("conjugacy");
      conj = cocycle::DigitShift{require(c, "level").get<int>(),
                                 parse_int(require(c, "shift"))};
    }
    out.update(decision_json(cocycle::flip_cohomology_test(
        env.cocycle_ref(require(cmd, "cocycle")),
        env.cocycle_ref(require(cmd, "zeta")), conj, budget)));
  } else if (op == "minimal_sets_isom") {
    cocycle::MinimalSetsResult r = cocycle::minimal_sets_isom(
        env.sign_ref(require(cmd, "sign")),
        env.cocycle_ref(require(cmd, "cocycle")), budget);
    out["minimal_within_bound"] = r.minimal_within_bound;
    if (r.multiple) out["n"] = r.multiple->get_str();
    if (r.eta) {
      json w;
      w["eta"] = cocycle_json(*r.eta);
      w["reverified"] = r.reverified;
      out["witness"] = w;
    }
    if (!r.family.empty()) out["family"] = r.family;
    out["certificate"] = r.certificate;
  } else if (op == "untwist") {
    cocycle::UntwistResult u =
        cocycle::untwist(env.sign_ref(require(cmd, "sign")),
                         env.cocycle_ref(require(cmd, "cocycle")));
    out["skew_supernatural"] = u.skew.skew_odometer->supernatural().str();
    out["cocycle"] = cocycle_json(u.cocycle);
    if (cmd.contains("name")) {
      std::string name = cmd.at("name").get<std::string>();
      env.systems.emplace(name + "_system", u.skew.skew_odometer);
      env.cocycles.emplace(name, u.cocycle);
    }
  } else if (op == "invariant_of") {
    const auto& sys = env.system(require(cmd, "system"));
    const auto& xi = env.cocycle_ref(require(cmd, "cocycle"));
    crossed::CrossedInvariant inv =
        cmd.contains("sign")
            ? crossed::invariant_of(sys, env.sign_ref(cmd.at("sign")), xi)
            : crossed::invariant_of(sys, xi);
    out["orientation_preserving"] = inv.orientation_preserving;
    out["k0"] = inv.k0_description;
    out["k1"] = inv.k1_description;
    out["k0_subgroup"] = inv.k0_subgroup.str();
    if (inv.rieffel_trace) out["rieffel_trace"] = sym_json(*inv.rieffel_trace);
    if (inv.k1_torsion) {
      out["torsion_order"] = inv.k1_torsion->torsion_order.get_str();
      out["f0_class"] = rat_json(inv.k1_torsion->f0_value);
    }
    out["minimal"] = inv.minimal;
    out["cone_formal"] = inv.cone_formal;
    if (inv.cone_assumed_from_base)
      out["cone_assumption"] =
          "positive cone adopted from K^0(X, alpha); the non-orientation-"
          "preserving crossed product has no displayed cone";
  } else if (op == "rieffel") {
    const auto& lift = env.lift_ref(require(cmd, "lift"));
    std::optional<cocycle::CircleCocycle> eta;
    if (cmd.contains("eta")) eta = env.cocycle_ref(cmd.at("eta"));
    crossed::RieffelPair pair = crossed::rieffel(lift, eta);
    crossed::VerifyReport v = crossed::verify_projection(pair);
    cantor::InvariantMeasure mu{pair.sys};
    crossed::TraceResult t = crossed::trace_of(pair, mu);
    out["projection"] = verify_json(v);
    out["trace"] = sym_json(t.value);
    out["trace_routes_agree"] = t.agree;
  } else if (op == "bott_identity_check") {
    crossed::BottIdentity b = crossed::bott_identity_check(
        env.lift_ref(require(cmd, "lift")),
        env.cocycle_ref(require(cmd, "eta")));
    out["class_identity"] = b.class_identity;
    out["trace_identity"] = b.trace_identity;
    out["bott_class"] = rat_json(b.bott_class.value);
    out["trace_zero"] = sym_json(b.trace_zero);
    out["trace_eta"] = sym_json(b.trace_eta);
  } else if (op == "kconj_decision") {
    crossed::FlipMode mode = flags.flip;
    if (cmd.contains("flip"))
      mode = cmd.at("flip").get<bool>() ? crossed::FlipMode::FlipOnly
                                        : crossed::FlipMode::PlainOnly;
    crossed::KConjDecision d =
        crossed::kconj_decision(parse_descriptor(env, require(cmd, "a")),
                                parse_descriptor(env, require(cmd, "b")), mode);
    out["verdict"] = cocycle::verdict_str(d.verdict);
    out["flip_used"] = d.flip_used;
    out["reason"] = d.reason;
  } else if (op == "rotation_number") {
    circlemaps::PLHomeo map = [&] {
      if (cmd.contains("compose")) {
        const json& list = cmd.at("compose");
        circlemaps::PLHomeo acc = env.pl_ref(list.at(list.size() - 1));
        for (std::size_t i = list.size() - 1; i-- > 0;)
          acc = circlemaps::PLHomeo::compose(env.pl_ref(list.at(i)), acc);
        return acc;
      }
      return env.pl_ref(require(cmd, "pl_map"));
    }();
    out.update(rotation_json(
        circlemaps::rotation_number(map, cmd.value("budget", 128u))));
  } else if (op == "rotation_target") {
    circlemaps::RotationTarget t = circlemaps::rotation_target(
        env.pl_ref(require(cmd, "pl_map")), parse_rat(require(cmd, "lo")),
        parse_rat(require(cmd, "hi")), cmd.value("budget", 128u));
    out["t"] = rat_json(t.t);
    out["certificate"] = rotation_json(t.certificate);
  } else if (op == "perturb_rotation") {
    circlemaps::PerturbRotation p = circlemaps::perturb_rotation(
        parse_pl_cocycle(env, require(cmd, "pl_cocycle")),
        parse_rat(require(cmd, "lo")), parse_rat(require(cmd, "hi")),
        cmd.value("budget", 128u));
    json w;
    w["eta"] = cocycle_json(p.eta);
    w["reverified"] = true;
    out["witness"] = w;
    json certs = json::array();
    for (const auto& c : p.certificates) certs.push_back(rotation_json(c));
    out["certificates"] = certs;
  } else if (op == "rieffel_general") {
    crossed::GeneralRieffel g = crossed::rieffel_general(
        parse_pl_cocycle(env, require(cmd, "pl_cocycle")),
        env.circ(require(cmd, "s")));
    out["c"] = sym_json(g.c);
    out["projection"] = verify_json(crossed::verify_projection(g.pair));
    cantor::InvariantMeasure mu{g.pair.sys};
    out["trace"] = sym_json(crossed::trace_of(g.pair, mu).value);
  } else if (op == "simulate") {
    const auto& sys = env.system(require(cmd, "system"));
    const auto& xi = env.cocycle_ref(require(cmd, "cocycle"));
    std::optional<cantor::SignCocycle> o;
    if (cmd.contains("sign")) o = env.sign_ref(cmd.at("sign"));
    const json& st = require(cmd, "start");
    cantor::CantorPoint start{sys, require(st, "level").get<int>(),
                              parse_int(require(st, "residue"))};
    circlemaps::OrbitSample orbit = circlemaps::simulate(
        sys, o, xi, start, env.circ(require(st, "fiber")),
        require(cmd, "steps").get<long>(),
        cmd.value("mode", std::string("exact")) == "exact");
    const auto& last = orbit.steps.back();
    out["final_residue"] = last.residue.get_str();
    if (orbit.exact) out["final_fiber"] = circ_json(last.fiber);
    out["level"] = orbit.level;
    out["cells_visited"] = orbit.cells_visited;
    {
      std::ostringstream d;
      d.precision(6);
      d << std::fixed << orbit.discrepancy;
      out["discrepancy"] = d.str();
    }
    if (cmd.value("dump", false)) {
      // Tabular orbit dump: step, residue, fiber value per line.
      json rows = json::array();
      for (std::size_t i = 0; i < orbit.steps.size(); ++i) {
        const auto& s = orbit.steps[i];
        std::ostringstream row;
        row << i << "\t" << s.residue.get_str() << "\t";
        if (orbit.exact)
          row << s.fiber.str();
        else
          row << s.fiber_dyadic;
        rows.push_back(row.str());
      }
      out["orbit"] = rows;
    }
  } else if (op == "example93_cocycle") {
    const auto& sys = env.system(require(cmd, "system"));
    std::vector<CircleValue> targets;
    for (const auto& t : require(cmd, "targets")) targets.push_back(env.circ(t));
    circlemaps::Example93 ex = circlemaps::example93_cocycle(sys, targets);
    json s = json::array();
    for (const auto& v : ex.s) s.push_back(sym_json(v));
    out["s"] = s;
    out["identities_verified"] = ex.identities_verified;
    out["truncation"] = ex.truncation_note;
    out["cocycle"] = cocycle_json(ex.xi);
    if (cmd.contains("name")) {
      std::string name = cmd.at("name").get<std::string>();
      env.cocycles.emplace(name, ex.xi);
      env.signs.emplace(name + "_sign", ex.o);
    }
  } else if (op == "supernatural_ops") {
    const auto& s = env.system(require(cmd, "s_system"))->supernatural();
    if (cmd.contains("t_system")) {
      const auto& t = env.system(cmd.at("t_system"))->supernatural();
      out["divides"] = t.divides(s);
      out["equal"] = s == t;
    }
    if (cmd.contains("q")) out["admits"] = s.admits(parse_rat(cmd.at("q")));
  } else if (op == "nearest_integer") {
    out["value"] =
        exact::nearest_integer(env.sym(require(cmd, "value"))).get_str();
  } else if (op == "sym_sign") {
    out["sign"] = env.sym(require(cmd, "value"))
                      .sign(cmd.value("budget", exact::kDefaultSignBudget));
  } else {
    throw PreconditionError("unknown op '" + op + "'");
  }
  out["status"] = "ok";
  return out;
}

bool command_defines_names(const json& commands) {
  for (const auto& c : commands)
    if (c.contains("name")) return true;
  return false;
}

}  // namespace

Report run_scenario_text(const std::string& text, const RunFlags& flags) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    Report r;
    r.doc["schema"] = "cantor-k/report/1";
    r.doc["error"] = std::string("scenario parse error: ") + e.what();
    r.exit_code = 1;
    return r;
  }

  Report rep;
  rep.doc["schema"] = "cantor-k/report/1";
  if (doc.value("schema", "") != "cantor-k/1") {
    rep.doc["error"] = "unsupported scenario schema (want \"cantor-k/1\")";
    rep.exit_code = 1;
    return rep;
  }

  Env env;
  try {
    declare_generators(env, doc);
    declare_systems(env, doc);
    declare_data(env, doc);
  } catch (const std::exception& e) {
    rep.doc["error"] = std::string("declaration error: ") + e.what();
    rep.exit_code = 1;
    return rep;
  }

  json results = json::array();
  bool any_error = false, any_unknown = false;
  const json commands = doc.value("commands", json::array());

  auto run_one = [&env, &flags](const json& cmd) -> json {
    try {
      return run_command(env, cmd, flags);
    } catch (const std::exception& e) {
      json r;
      r["op"] = cmd.value("op", "?");
      r["status"] = "error";
      r["error"] = e.what();
      return r;
    }
  };

  if (flags.parallel && !command_defines_names(commands)) {
    std::vector<std::future<json>> futs;
    futs.reserve(commands.size());
    for (const auto& cmd : commands)
      futs.push_back(std::async(std::launch::async, run_one, cmd));
    for (auto& f : futs) results.push_back(f.get());
  } else {
    for (const auto& cmd : commands) results.push_back(run_one(cmd));
  }

  int index = 0;
  for (auto& r : results) {
    r["index"] = index++;
    if (r.value("status", "") == "error") any_error = true;
    if (r.value("verdict", "") == "unknown") any_unknown = true;
  }
  rep.doc["commands"] = results;
  rep.exit_code = any_error ? 1 : (flags.strict && any_unknown ? 2 : 0);
  return rep;
}

Report run_scenario_file(const std::string& path, const RunFlags& flags) {
  std::ifstream in(path);
  if (!in) {
    // Fall back to a bundled scenario of that name.
    for (const auto& [name, text] : bundled_scenarios())
      if (name == path) return run_scenario_text(text, flags);
    Report r;
    r.doc["schema"] = "cantor-k/report/1";
    r.doc["error"] = "cannot open scenario '" + path + "'";
    r.exit_code = 1;
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return run_scenario_text(buf.str(), flags);
}

std::string emit_report(const Report& report, const std::string& format) {
  if (format == "json") return report.doc.dump(2) + "\n";
  if (format != "table")
    throw PreconditionError("unknown report format '" + format + "'");
  std::ostringstream out;
  if (report.doc.contains("error")) {
    out << "error: " << report.doc.at("error").get<std::string>() << "\n";
    return out.str();
  }
  for (const auto& r : report.doc.at("commands")) {
    out << r.at("index").get<int>() << "\t" << r.at("op").get<std::string>()
        << "\t" << r.value("status", "");
    if (r.contains("verdict"))
      out << "\tverdict=" << r.at("verdict").get<std::string>();
    if (r.contains("exists"))
      out << "\texists=" << (r.at("exists").get<bool>() ? "true" : "false");
    if (r.contains("value")) out << "\tvalue=" << r.at("value").dump();
    if (r.contains("error")) out << "\t" << r.at("error").get<std::string>();
    out << "\n";
  }
  return out.str();
}

}  // namespace cantork::cli
