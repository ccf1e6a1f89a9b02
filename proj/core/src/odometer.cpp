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

#include "cantork/odometer.hpp"

#include <sstream>

namespace cantork::cantor {

OdometerSystem::OdometerSystem(std::vector<Int> mults, Int growth)
    : mults_(std::move(mults)), growth_(std::move(growth)) {
  if (mults_.empty())
    throw PreconditionError("odometer needs at least one multiplicity");
  if (mults_.front() < 2)
    throw PreconditionError("multiplicities must be >= 2");
  for (std::size_t i = 1; i < mults_.size(); ++i) {
    if (!mpz_divisible_p(mults_[i].get_mpz_t(), mults_[i - 1].get_mpz_t()))
      throw PreconditionError("divisibility violation: " +
                              mults_[i - 1].get_str() + " does not divide " +
                              mults_[i].get_str());
    if (mults_[i] <= mults_[i - 1])
      throw PreconditionError("multiplicities must be strictly increasing");
  }
  if (growth_ < 2)
    throw PreconditionError("growth factor must be >= 2");
  sn_ = exact::SupernaturalNumber::odometer_type(mults_, growth_);
}

Int OdometerSystem::multiplicity(int level) const {
  if (level < 0) throw PreconditionError("negative level");
  if (level == 0) return 1;
  if (level <= static_cast<int>(mults_.size())) return mults_[level - 1];
  Int m = mults_.back();
  Int g;
  mpz_pow_ui(g.get_mpz_t(), growth_.get_mpz_t(),
             static_cast<unsigned long>(level - mults_.size()));
  return m * g;
}

std::string OdometerSystem::str() const {
  std::ostringstream out;
  out << "odometer {";
  for (std::size_t i = 0; i < mults_.size(); ++i) {
    if (i) out << ", ";
    out << mults_[i].get_str();
  }
  out << ", ...} x" << growth_.get_str() << " (type " << sn_.str() << ")";
  return out.str();
}

SystemPtr make_odometer(std::vector<Int> mults, Int growth) {
  if (growth == 0) {
    if (mults.size() >= 2)
      growth = mults.back() / mults[mults.size() - 2];
    else if (mults.size() == 1)
      growth = mults.front();
    else
      throw PreconditionError("cannot infer growth from an empty sequence");
  }
  return std::make_shared<OdometerSystem>(std::move(mults), std::move(growth));
}

CantorPoint deepen(const CantorPoint& p, int level) {
  if (level < p.level) throw PreconditionError("deepen to a shallower level");
  return CantorPoint{p.sys, level, p.residue};
}

CantorPoint apply_transform(const CantorPoint& p, const Int& k, int level) {
  CantorPoint q = deepen(p, level);
  q.residue = exact::mod_floor(q.residue + k, p.sys->multiplicity(level));
  return q;
}

TowerPartition towers(const SystemPtr& sys, int level) {
  if (level < 1) throw PreconditionError("tower partition needs level >= 1");
  TowerPartition tp;
  tp.sys = sys;
  tp.level = level;
  tp.towers.push_back(Tower{sys->multiplicity(level), Int(0)});
  return tp;
}

SignCocycle SignCocycle::constant(SystemPtr sys, std::uint8_t v) {
  return SignCocycle{std::move(sys), 0, {static_cast<std::uint8_t>(v & 1)}};
}

SignCocycle SignCocycle::make(SystemPtr sys, int level,
                              std::vector<std::uint8_t> values) {
  Int m = sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(values.size())) != m)
    throw PreconditionError("sign cocycle vector size must equal m_level");
  for (auto& v : values) v &= 1;
  return SignCocycle{std::move(sys), level, std::move(values)};
}

std::uint8_t SignCocycle::at(const Int& residue) const {
  Int m = sys->multiplicity(level);
  Int r = exact::mod_floor(residue, m);
  return values[r.get_ui()];
}

Int SignCocycle::sum() const {
  Int s = 0;
  for (auto v : values) s += v;
  return s;
}

Rational cylinder_mass(const InvariantMeasure& mu, int level) {
  return exact::make_rational(1, mu.sys->multiplicity(level));
}

exact::SymbolicReal measure_of(const InvariantMeasure& mu, int level,
                               std::span<const exact::SymbolicReal> values) {
  Int m = mu.sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(values.size())) != m)
    throw PreconditionError("value vector size must equal m_level");
  exact::SymbolicReal sum;
  for (const auto& v : values) sum = sum + v;
  return sum.scaled(exact::make_rational(1, m));
}

Rational measure_of(const InvariantMeasure& mu, int level,
                    std::span<const Int> values) {
  Int m = mu.sys->multiplicity(level);
  if (Int(static_cast<unsigned long>(values.size())) != m)
    throw PreconditionError("value vector size must equal m_level");
  Int sum = 0;
  for (const auto& v : values) sum += v;
  return exact::make_rational(sum, m);
}

}  // namespace cantork::cantor
