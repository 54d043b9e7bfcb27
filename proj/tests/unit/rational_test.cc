// Copyright 2026 The MBCE Authors
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

#include "mbce/rational.h"

#include "doctest.h"
#include "mbce/errors.h"

namespace mbce {
namespace {

TEST_CASE("ParseRational accepts fractions and integers") {
  CHECK(ParseRational("3/6") == Rational(1, 2));
  CHECK(ParseRational("-2") == Rational(-2));
  CHECK(ParseRational(" 7/4 ") == Rational(7, 4));
  CHECK(ParseRational("0") == 0);
}

TEST_CASE("ParseRational rejects malformed text") {
  for (const char* bad : {"1/0", "abc", "", "1/", "/2", "1.5", "1/2/3"}) {
    CAPTURE(bad);
    try {
      ParseRational(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
    }
  }
}

TEST_CASE("ToString is canonical") {
  CHECK(ToString(ParseRational("2/4")) == "1/2");
  CHECK(ToString(Rational(-3)) == "-3");
  CHECK(ParseRational(ToString(Rational(-22, 7))) == Rational(-22, 7));
}

TEST_CASE("ParseRationalList splits on commas") {
  const Vector v = ParseRationalList("1/4,3/4");
  REQUIRE(v.size() == 2);
  CHECK(v[0] == Rational(1, 4));
  CHECK(v[1] == Rational(3, 4));
}

TEST_CASE("vector helpers") {
  const Vector a{Rational(1, 2), Rational(1, 3), Rational(1, 6)};
  CHECK(Sum(a) == 1);
  CHECK(IsProbabilityVector(a));
  CHECK_FALSE(IsProbabilityVector({Rational(1, 2), Rational(1, 3)}));
  CHECK_FALSE(IsProbabilityVector({Rational(3, 2), Rational(-1, 2)}));
  CHECK(Dot(a, {6, 6, 6}) == 6);
  CHECK_THROWS_AS(Dot(a, {1, 2}), Error);
  CHECK(ZeroMatrix(2, 3)[1].size() == 3);
  CHECK(ToDouble(Rational(1, 4)) == doctest::Approx(0.25));
}

}  // namespace
}  // namespace mbce
