// Copyright 2026 The stingy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "stingy/rational.hpp"

#include "doctest.h"

using namespace stingy;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6") == Rational(6));
  CHECK(parse_rational("-3") == Rational(-3));
  CHECK(parse_rational("3/2") == Rational(3, 2));
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK(parse_rational("6/4") == Rational(3, 2));  // normalized
  CHECK(parse_rational("12345678901234567890123") ==
        Rational(BigInt("12345678901234567890123")));

  CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational(" 1"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1 "), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("2/"), std::invalid_argument);
}

TEST_CASE("rational formatting is canonical") {
  CHECK(format_rational(Rational(5)) == "5");
  CHECK(format_rational(Rational(6, 4)) == "3/2");
  CHECK(format_rational(Rational(-6, 4)) == "-3/2");
  CHECK(format_rational(Rational(0)) == "0");

  // parse . format is the identity on canonical strings
  for (const char* s : {"0", "1", "-7", "3/2", "-22/7", "37/27"}) {
    CHECK(format_rational(parse_rational(s)) == s);
  }
}

TEST_CASE("exact power") {
  CHECK(pow_rational(Rational(4, 3), 3) == Rational(64, 27));
  CHECK(pow_rational(Rational(3, 2), 0) == Rational(1));
  CHECK(pow_rational(Rational(-1, 2), 2) == Rational(1, 4));
}

TEST_CASE("extended rationals") {
  const ExtRational two = Rational(2);
  const ExtRational inf = ExtRational::infinity();

  CHECK(two.value() == Rational(2));
  CHECK_FALSE(two.is_infinite());
  CHECK(inf.is_infinite());
  CHECK_THROWS_AS(inf.value(), std::logic_error);

  CHECK(two < inf);
  CHECK(inf > two);
  CHECK(inf == ExtRational::infinity());
  CHECK_FALSE(inf < inf);
  CHECK(ExtRational(Rational(3, 2)) > ExtRational(Rational(5, 4)));

  CHECK(format_ext(inf) == "inf");
  CHECK(format_ext(two) == "2");
}
