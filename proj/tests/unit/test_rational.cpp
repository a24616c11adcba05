/*
   Copyright 2026 The divalg Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <doctest.h>

#include "divalg/rational.hpp"

using namespace divalg;

TEST_CASE("parsing and printing") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == Rational(-7));
    CHECK(to_string(Rational(3, 2)) == "3/2");
    CHECK(to_string(Rational(-2)) == "-2/1");
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
    CHECK(to_decimal(Rational(275, 504)) == "0.5456349206");
}

TEST_CASE("height and powers") {
    CHECK(height(Rational(-3, 7)) == 7);
    CHECK(height(Rational(0)) == 1);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("height enumeration order") {
    auto v = rationals_up_to_height(2);
    std::vector<Rational> expected{0, 1, -1, Rational(1, 2), Rational(-1, 2), 2, -2};
    CHECK(v == expected);
    // Count of rationals of height <= 3: 0, +-1, +-2, +-3, +-1/2, +-1/3, +-2/3, +-3/2.
    CHECK(rationals_up_to_height(3).size() == 15);
}

TEST_CASE("harmonic range") {
    CHECK(harmonic_range(1, 3) == Rational(11, 6));
    CHECK(harmonic_range(6, 10) == Rational(1, 6) + Rational(1, 7) + Rational(1, 8) + Rational(1, 9) + Rational(1, 10));
}
