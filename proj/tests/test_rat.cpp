// Copyright 2026 The lcplab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "lcplab/error.hpp"
#include "lcplab/labgen.hpp"
#include "lcplab/rat.hpp"

using namespace lcplab;

TEST_CASE("rational construction reduces to lowest terms") {
  CHECK(Rat(2, 6) == Rat(1, 3));
  CHECK(Rat(-4, 8) == Rat(-1, 2));
  CHECK(Rat(1, -2) == Rat(-1, 2));
  CHECK(Rat(-3, -9) == Rat(1, 3));
  CHECK(Rat(0, 7) == Rat(0));
  CHECK(Rat(2, 6).den() == mpz_class(3));
  CHECK(Rat(1, -2).den() == mpz_class(2));
  CHECK_THROWS_AS(Rat(1, 0), ArithmeticError);
}

TEST_CASE("rational parsing accepts integers, fractions, exact decimals") {
  CHECK(Rat::parse("3") == Rat(3));
  CHECK(Rat::parse("-7/2") == Rat(-7, 2));
  CHECK(Rat::parse("+5/10") == Rat(1, 2));
  CHECK(Rat::parse("1.6") == Rat(8, 5));
  CHECK(Rat::parse("0.1") == Rat(1, 10));
  CHECK(Rat::parse("-0.25") == Rat(-1, 4));
  CHECK(Rat::parse("2.") == Rat(2));
  CHECK(Rat::parse(".5") == Rat(1, 2));
  CHECK(Rat::parse("  12/9 ") == Rat(4, 3));
  CHECK(Rat::parse("0.0") == Rat(0));
  CHECK(Rat::parse("123456789012345678901234567890") ==
        Rat::from_mpz(mpz_class("123456789012345678901234567890"),
                      mpz_class(1)));
}

TEST_CASE("rational parsing rejects malformed text") {
  CHECK_THROWS_AS(Rat::parse(""), InputError);
  CHECK_THROWS_AS(Rat::parse("abc"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/0"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/-2"), InputError);
  CHECK_THROWS_AS(Rat::parse("1/2/3"), InputError);
  CHECK_THROWS_AS(Rat::parse("1e5"), InputError);
  CHECK_THROWS_AS(Rat::parse("1.2.3"), InputError);
  CHECK_THROWS_AS(Rat::parse("."), InputError);
  CHECK_THROWS_AS(Rat::parse("--1"), InputError);
  CHECK_THROWS_AS(Rat::parse("1 / 2"), InputError);
}

TEST_CASE("rational arithmetic is exact") {
  Rat a(1, 3), b(1, 6);
  CHECK(a + b == Rat(1, 2));
  CHECK(a - b == Rat(1, 6));
  CHECK(a * b == Rat(1, 18));
  CHECK(a / b == Rat(2));
  CHECK(-a == Rat(-1, 3));
  CHECK(a.reciprocal() == Rat(3));
  CHECK(Rat(-2, 5).abs() == Rat(2, 5));
  CHECK_THROWS_AS(a / Rat(0), ArithmeticError);
  CHECK_THROWS_AS(Rat(0).reciprocal(), ArithmeticError);

  // The textbook float trap stays exact here.
  Rat tenth = Rat::parse("0.1");
  Rat sum;
  for (int i = 0; i < 10; ++i) sum += tenth;
  CHECK(sum == Rat(1));
}

TEST_CASE("rational arithmetic identities hold on random values") {
  Prng rng(20260816);
  auto draw = [&rng]() {
    long num = rng.uniform(-40, 40);
    long den = rng.uniform(1, 23);
    return Rat(num, den);
  };
  for (int trial = 0; trial < 200; ++trial) {
    Rat a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == Rat(0));
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(Rat::parse(a.str()) == a);
  }
}

TEST_CASE("rational ordering and sign queries") {
  CHECK(Rat(1, 3) < Rat(1, 2));
  CHECK(Rat(-1) < Rat(0));
  CHECK(Rat(7, 2) > Rat(3));
  CHECK(Rat(1, 2) <= Rat(1, 2));
  CHECK(Rat(5).sign() == 1);
  CHECK(Rat(-5, 3).sign() == -1);
  CHECK(Rat(0).sign() == 0);
  CHECK(Rat(0).is_zero());
  CHECK(Rat(4, 2).is_integer());
  CHECK(!Rat(1, 2).is_integer());
  CHECK(Rat(9).fits_long());
  CHECK(Rat(9).to_long() == 9);
}

TEST_CASE("rational text form") {
  CHECK(Rat(3).str() == "3");
  CHECK(Rat(-7, 2).str() == "-7/2");
  CHECK(Rat(0).str() == "0");
  CHECK(Rat(8, 5).str() == "8/5");
}

TEST_CASE("vector helpers compute exact componentwise results") {
  RatVec a = {Rat(1), Rat(-2), Rat(3, 2)};
  RatVec b = {Rat(2), Rat(2), Rat(1, 2)};
  CHECK(dot(a, b) == Rat(-5, 4));
  CHECK(vec_add(a, b) == RatVec{Rat(3), Rat(0), Rat(2)});
  CHECK(vec_sub(a, b) == RatVec{Rat(-1), Rat(-4), Rat(1)});
  CHECK(vec_scale(Rat(2), a) == RatVec{Rat(2), Rat(-4), Rat(3)});
  CHECK(!vec_all_nonneg(a));
  CHECK(vec_all_nonneg(b));
  CHECK(vec_all_pos(b));
  CHECK(!vec_all_pos(RatVec{Rat(1), Rat(0)}));
  CHECK(vec_all_zero(RatVec{Rat(0), Rat(0)}));
  CHECK(vec_str(a) == "(1, -2, 3/2)");
}
