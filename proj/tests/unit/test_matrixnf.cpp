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

#include "divalg/matrixnf.hpp"

using namespace divalg;

namespace {

NFElement q(const FieldPtr& k, long v) { return NFElement::from_rational(k, v); }

}  // namespace

TEST_CASE("determinant and solve over Q(i)") {
    auto k = NumberField::quadratic(-1);
    auto i = NFElement::generator(k);
    MatrixNF m(k, 2, {q(k, 1), i, i, q(k, 1)});
    CHECK(determinant(m) == q(k, 2));
    auto x = solve(m, {q(k, 2), q(k, 0)});
    REQUIRE(x);
    CHECK(m.at(0, 0) * (*x)[0] + m.at(0, 1) * (*x)[1] == q(k, 2));
    MatrixNF singular(k, 2, {q(k, 1), i, i, q(k, -1)});
    CHECK_FALSE(solve(singular, {q(k, 1), q(k, 0)}));
}

TEST_CASE("characteristic and minimal polynomials") {
    auto k = NumberField::quadratic(2);
    auto id = MatrixNF::identity(k, 3);
    CHECK(min_poly(id) == KPoly::from_rational(k, UniPoly{-1, 1}));
    CHECK(char_poly(id) == KPoly::from_rational(k, UniPoly{-1, 3, -3, 1}));
    auto m = MatrixNF::block_diagonal({MatrixNF::identity(k, 1), MatrixNF::diagonal(k, {q(k, 2), q(k, 2)})});
    CHECK(min_poly(m) == KPoly::from_rational(k, UniPoly{2, -3, 1}));
}

TEST_CASE("cycle matrices") {
    auto k = NumberField::quadratic(3);
    auto r = NFElement::generator(k);
    auto c = build_cycle_matrix(k, {q(k, 2), r, q(k, -1)});
    // T^3 - (2 * r * -1)
    CHECK(min_poly(c) == KPoly(k, {r * Rational(2), q(k, 0), q(k, 0), q(k, 1)}));
    CHECK(c.power(3) == MatrixNF::identity(k, 3) * (r * Rational(-2)));
    CHECK_THROWS(build_cycle_matrix(k, {q(k, 1), q(k, 0)}));
}

TEST_CASE("monomial round trip") {
    auto k = NumberField::quadratic(5);
    MonomialData data{Permutation::from_cycles(3, {{1, 3}}), {q(k, 2), q(k, 3), NFElement::generator(k)}};
    auto m = from_monomial(k, data);
    auto back = monomial_structure(m);
    REQUIRE(back);
    CHECK(back->perm == data.perm);
    CHECK(back->scalars == data.scalars);
    MatrixNF full(k, 2, {q(k, 1), q(k, 1), q(k, 0), q(k, 1)});
    CHECK_FALSE(monomial_structure(full));
}

TEST_CASE("polynomial division over K") {
    auto k = NumberField::quadratic(-1);
    auto i = NFElement::generator(k);
    KPoly f(k, {q(k, 1), q(k, 0), q(k, 1)});  // T^2 + 1 = (T - i)(T + i)
    KPoly g(k, {-i, q(k, 1)});
    auto [quot, rem] = divmod(f, g);
    CHECK(rem.is_zero());
    CHECK(quot == KPoly(k, {i, q(k, 1)}));
    CHECK(f.to_rational() == UniPoly{1, 0, 1});
    CHECK_FALSE(g.to_rational());
}
