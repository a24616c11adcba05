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

#include "divalg/polynomial.hpp"

using namespace divalg;

TEST_CASE("arithmetic and evaluation") {
    UniPoly p{1, 2, 1};  // (t+1)^2
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == 9);
    CHECK(p * UniPoly{-1, 1} == UniPoly{-1, -1, 1, 1});
    CHECK((p - p).is_zero());
    CHECK(p.derivative() == UniPoly{2, 2});
    CHECK(p.to_string() == "t^2 + 2*t + 1");
}

TEST_CASE("division and gcd") {
    UniPoly a{-1, 0, 0, 1};  // t^3 - 1
    UniPoly b{-1, 1};
    auto [q, r] = divmod(a, b);
    CHECK(q == UniPoly{1, 1, 1});
    CHECK(r.is_zero());
    CHECK(gcd(UniPoly{-1, 0, 1}, UniPoly{1, 2, 1}) == UniPoly{1, 1});
    auto e = extended_gcd(UniPoly{1, 0, 1}, UniPoly{0, 1});
    CHECK(e.g == UniPoly{1});
    CHECK(e.s * UniPoly{1, 0, 1} + e.t * UniPoly{0, 1} == e.g);
}

TEST_CASE("resultant is the norm for monic f") {
    // N_{Q(i)/Q}(1 + i) = 2, N(3) = 9
    UniPoly f{1, 0, 1};
    CHECK(resultant(f, UniPoly{1, 1}) == 2);
    CHECK(resultant(f, UniPoly{3}) == 9);
    CHECK(compose_mod(UniPoly{0, 0, 1}, UniPoly{0, 1}, f) == UniPoly{-1});
}
