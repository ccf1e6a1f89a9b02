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

#include <doctest.h>

#include <random>
#include <thread>

#include "cantork/supernatural.hpp"
#include "cantork/symbolic.hpp"

using namespace cantork;
using namespace cantork::exact;

namespace {

TablePtr table_with(std::string* gold_name = nullptr) {
  auto t = std::make_shared<GeneratorTable>();
  t->add_sqrt("r2", Rational(2));
  t->add_golden_ratio("gold");
  if (gold_name) *gold_name = "gold";
  return t;
}

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rational_str(make_rational(2, 4)) == "1/2");
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(rational_floor(Rational(-1, 2)) == -1);
  CHECK_THROWS_AS(parse_rational("x"), PreconditionError);
}

TEST_CASE("symbolic arithmetic is coefficientwise exact") {
  auto t = table_with();
  SymbolicReal third(Rational(1, 3));
  SymbolicReal sixth(Rational(1, 6));
  CHECK((third + sixth) == SymbolicReal(Rational(1, 2)));

  SymbolicReal theta = SymbolicReal::generator(t, 0);
  CHECK((theta - theta).is_zero());

  SymbolicReal v = SymbolicReal(Rational(1, 4)) + theta.scaled(Rational(1, 2));
  CHECK(v.scaled(Rational(2)) ==
        SymbolicReal(Rational(1, 2)) + theta);
}

TEST_CASE("mismatched tables are rejected") {
  auto t1 = table_with();
  auto t2 = table_with();
  SymbolicReal a = SymbolicReal::generator(t1, 0);
  SymbolicReal b = SymbolicReal::generator(t2, 0);
  CHECK_THROWS_AS(a + b, PreconditionError);
}

TEST_CASE("sym_sign: zero iff zero coefficient vector") {
  auto t = table_with();
  CHECK(SymbolicReal().sign() == 0);
  CHECK(SymbolicReal(Rational(1, 3)).sign() == 1);
  CHECK(SymbolicReal(Rational(-2)).sign() == -1);

  // golden ratio fractional part vs 3/5: convergents 1/2, 2/3, 3/5, 5/8, ...
  // give (sqrt(5)-1)/2 = 0.618... > 3/5.
  SymbolicReal gold = SymbolicReal::generator(t, 1);
  CHECK((gold - SymbolicReal(Rational(3, 5))).sign() == 1);
  CHECK((gold - SymbolicReal(Rational(2, 3))).sign() == -1);
}

TEST_CASE("sign agrees with any separating enclosure") {
  auto t = table_with();
  SymbolicReal v = SymbolicReal::generator(t, 0) - SymbolicReal(Rational(1));
  // sqrt(2) - 1 > 0
  int s = v.sign();
  for (unsigned d = 2; d < 10; ++d) {
    Interval e = v.enclosure(d);
    if (e.excludes_zero()) CHECK((e.lo > 0 ? 1 : -1) == s);
  }
}

TEST_CASE("enclosures nest and halve") {
  auto t = table_with();
  for (GeneratorTable::Id id = 0; id < 2; ++id) {
    Interval prev = t->enclosure(id, 0);
    for (unsigned d = 1; d < 12; ++d) {
      Interval cur = t->enclosure(id, d);
      CHECK(prev.contains(cur));
      CHECK(cur.width() * 2 <= prev.width());
      prev = cur;
    }
  }
}

TEST_CASE("stream generators validate and exhaust") {
  auto t = std::make_shared<GeneratorTable>();
  std::vector<Interval> stages = {Interval(Rational(0), Rational(1)),
                                  Interval(Rational(1, 4), Rational(3, 4)),
                                  Interval(Rational(3, 8), Rational(5, 8))};
  auto id = t->add_stream("u", stages);
  CHECK(t->enclosure(id, 2).width() == Rational(1, 4));
  CHECK_THROWS_AS(t->enclosure(id, 3), BudgetExhausted);

  std::vector<Interval> bad = {Interval(Rational(0), Rational(1)),
                               Interval(Rational(0), Rational(2, 3))};
  CHECK_THROWS_AS(t->add_stream("bad", bad), PreconditionError);
}

TEST_CASE("sqrt generator rejects rational squares") {
  auto t = std::make_shared<GeneratorTable>();
  CHECK_THROWS_AS(t->add_sqrt("x", Rational(4)), PreconditionError);
  CHECK_THROWS_AS(t->add_sqrt("y", Rational(9, 16)), PreconditionError);
  CHECK_NOTHROW(t->add_sqrt("z", Rational(2, 3)));
}

TEST_CASE("nearest_integer") {
  auto t = table_with();
  CHECK(nearest_integer(SymbolicReal(Rational(-1, 4))) == 0);
  CHECK(nearest_integer(SymbolicReal(Rational(2, 3))) == 1);
  CHECK_THROWS_AS(nearest_integer(SymbolicReal(Rational(1, 2))),
                  PreconditionError);
  CHECK_THROWS_AS(nearest_integer(SymbolicReal(Rational(-3, 2))),
                  PreconditionError);
  SymbolicReal gold = SymbolicReal::generator(t, 1);
  CHECK(nearest_integer(gold) == 1);  // 0.618...
  CHECK(nearest_integer(gold - SymbolicReal(Rational(1, 2))) == 0);
}

TEST_CASE("nearest_integer translation property") {
  auto t = table_with();
  std::mt19937 rng(12345);
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(3, 15);
  std::uniform_int_distribution<int> shift(-5, 5);
  for (int i = 0; i < 100; ++i) {
    Rational q(num(rng), den(rng));
    q.canonicalize();
    SymbolicReal a = q.get_den() == 2 ? SymbolicReal(q + Rational(1, 7))
                                      : SymbolicReal(q);
    if (i % 3 == 0)
      a = a + SymbolicReal::generator(t, 1, Rational(1, 23));
    Int z(shift(rng));
    Int base;
    try {
      base = nearest_integer(a);
    } catch (const PreconditionError&) {
      continue;  // exact half-integer draw
    }
    CHECK(nearest_integer(a + SymbolicReal(Rational(z))) == base + z);
  }
}

TEST_CASE("circle values canonicalize to [0,1)") {
  auto t = table_with();
  CircleValue a = CircleValue::reduce(SymbolicReal(Rational(7, 3)));
  CHECK(a.representative() == SymbolicReal(Rational(1, 3)));
  CircleValue b = CircleValue::reduce(SymbolicReal(Rational(-1, 3)));
  CHECK(b.representative() == SymbolicReal(Rational(2, 3)));

  SymbolicReal gold = SymbolicReal::generator(t, 1);
  CircleValue c = CircleValue::reduce(gold + SymbolicReal(Rational(3)));
  CHECK(c.representative() == gold);
}

TEST_CASE("circle addition properties") {
  auto t = table_with();
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> num(-10, 10);
  std::uniform_int_distribution<int> den(1, 12);
  auto random_value = [&](int i) {
    SymbolicReal v(make_rational(num(rng), den(rng)));
    if (i % 2 == 0) v = v + SymbolicReal::generator(t, 0, Rational(1, 5));
    return CircleValue::reduce(v);
  };
  for (int i = 0; i < 60; ++i) {
    CircleValue a = random_value(i), b = random_value(i + 1),
                c = random_value(i + 2);
    CHECK((a + b) == (b + a));
    CHECK(((a + b) + c) == (a + (b + c)));
    // a + (1 - a) = 0
    CircleValue one_minus =
        CircleValue::reduce(SymbolicReal(Rational(1)) - a.representative());
    CHECK((a + one_minus).is_zero());
  }
}

TEST_CASE("supernatural numbers") {
  using SN = SupernaturalNumber;
  std::vector<Int> three{3, 9, 27};
  SN s3 = SN::odometer_type(three, Int(3));
  CHECK(s3.str() == "3^inf");
  CHECK(s3.admits(Rational(5, 27)));
  CHECK(!s3.admits(Rational(1, 2)));

  std::vector<Int> mixed{3, 6, 18, 54};
  SN s23 = SN::odometer_type(mixed, Int(3));
  CHECK(s23.str() == "2 * 3^inf");
  CHECK(s3.divides(s23));
  CHECK(!(s23 == s3));
  CHECK(!s23.divides(s3));

  std::vector<Int> two{2, 4, 8};
  SN s2 = SN::odometer_type(two, Int(2));
  CHECK(s2.admits(Rational(1, 1024)));
  CHECK(!s2.admits(Rational(1, 6)));
}

TEST_CASE("supernatural admits is monotone under divisibility") {
  using SN = SupernaturalNumber;
  std::vector<Int> a{3, 9};
  std::vector<Int> b{3, 6, 18};
  SN s = SN::odometer_type(a, Int(3));
  SN tt = SN::odometer_type(b, Int(3));
  REQUIRE(s.divides(tt));
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(1, 50);
  std::uniform_int_distribution<int> den(1, 200);
  for (int i = 0; i < 200; ++i) {
    Rational q = make_rational(num(rng), den(rng));
    if (s.admits(q)) CHECK(tt.admits(q));
  }
}

TEST_CASE("symbolic parsing round-trips") {
  auto t = table_with();
  SymbolicReal v = parse_symbolic("1/2 + 1/3*r2 - gold", t);
  CHECK(v.rational_part() == Rational(1, 2));
  CHECK(parse_symbolic(v.str(), t) == v);
  CHECK(parse_symbolic("r2", t) == SymbolicReal::generator(t, 0));
  CHECK_THROWS_AS(parse_symbolic("nope", t), PreconditionError);
  CHECK_THROWS_AS(parse_symbolic("", t), PreconditionError);
}

TEST_CASE("concurrent readers share one generator table") {
  auto t = table_with();
  SymbolicReal gold = SymbolicReal::generator(t, 1);
  std::vector<std::thread> workers;
  std::atomic<int> bad{0};
  for (int w = 0; w < 4; ++w)
    workers.emplace_back([&, w] {
      for (int i = 0; i < 200; ++i) {
        SymbolicReal probe =
            gold - SymbolicReal(make_rational(3 + (i + w) % 3, 5));
        int s = probe.sign();
        int expect = (3 + (i + w) % 3) == 3 ? 1 : -1;  // gold vs 3/5, 4/5, 5/5
        if (s != expect) ++bad;
      }
    });
  for (auto& w : workers) w.join();
  CHECK(bad == 0);
}

TEST_CASE("budget exhaustion reports the last enclosure") {
  auto t = std::make_shared<GeneratorTable>();
  auto id = t->add_stream("u", {Interval(Rational(0), Rational(1))});
  SymbolicReal u = SymbolicReal::generator(t, id);
  try {
    (void)(u - SymbolicReal(Rational(1, 2))).sign(8);
    FAIL("expected BudgetExhausted");
  } catch (const BudgetExhausted& e) {
    CHECK(std::string(e.what()).find("exhausted") != std::string::npos);
  }
}
