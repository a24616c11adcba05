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

#include "divalg/verify/period_fields.hpp"

#include <stdexcept>

#include "divalg/arith.hpp"

namespace divalg::oracle {

namespace {

using Ring = std::vector<Integer>;  // Z[x]/(x^p - 1)

Ring ring_mul(const Ring& a, const Ring& b) {
    const std::size_t p = a.size();
    Ring out(p, Integer(0));
    for (std::size_t i = 0; i < p; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < p; ++j) {
            if (b[j] != 0) out[(i + j) % p] += a[i] * b[j];
        }
    }
    return out;
}

// Coordinates on zeta^1..zeta^{p-1}, using 1 = -(zeta + ... + zeta^{p-1}).
std::vector<Rational> to_basis(const Ring& r) {
    std::vector<Rational> v(r.size() - 1);
    for (std::size_t i = 1; i < r.size(); ++i) v[i - 1] = Rational(r[i] - r[0]);
    return v;
}

// The rational number represented by a Galois-invariant ring element.
Rational invariant_value(const Ring& r) {
    for (std::size_t i = 2; i < r.size(); ++i) {
        if (r[i] != r[1]) throw std::logic_error("period polynomial coefficient is not rational");
    }
    return Rational(r[0] - r[1]);
}

// Solves sum_k s_k cols[k] = target (consistent, full column rank).
std::vector<Rational> solve_columns(const std::vector<std::vector<Rational>>& cols, const std::vector<Rational>& target) {
    const std::size_t n = cols.size(), rows = target.size();
    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(n + 1));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < n; ++c) a[r][c] = cols[c][r];
        a[r][n] = target[r];
    }
    std::size_t row = 0;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = row;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) throw std::logic_error("period powers are linearly dependent");
        std::swap(a[piv], a[row]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[row][c];
            for (std::size_t k = c; k <= n; ++k) a[r][k] -= f * a[row][k];
        }
        ++row;
    }
    for (std::size_t r = row; r < rows; ++r) {
        if (a[r][n] != 0) throw std::logic_error("sigma image is not in the period field");
    }
    std::vector<Rational> s(n);
    for (std::size_t c = 0; c < n; ++c) s[c] = a[c][n] / a[c][c];
    return s;
}

}  // namespace

FieldPtr gaussian_period_field(long d, long p) {
    if (!is_prime(static_cast<std::int64_t>(p)) || d < 2 || (p - 1) % d != 0) {
        throw std::invalid_argument("gaussian_period_field needs a prime p with d | p - 1");
    }
    const auto n = static_cast<std::size_t>(p);
    const std::int64_t g = smallest_primitive_root(p);
    std::vector<Ring> eta(static_cast<std::size_t>(d), Ring(n, Integer(0)));
    for (long e = 0; e < p - 1; ++e) {
        const auto h = powmod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>(e), static_cast<std::uint64_t>(p));
        eta[static_cast<std::size_t>(e % d)][h] += 1;
    }
    // prod_j (T - eta_j), coefficients in the ring, ascending in T.
    std::vector<Ring> poly{Ring(n, Integer(0))};
    poly[0][0] = 1;
    for (const auto& root : eta) {
        std::vector<Ring> next(poly.size() + 1, Ring(n, Integer(0)));
        for (std::size_t k = 0; k < poly.size(); ++k) {
            for (std::size_t i = 0; i < n; ++i) next[k + 1][i] += poly[k][i];
            const Ring prod = ring_mul(root, poly[k]);
            for (std::size_t i = 0; i < n; ++i) next[k][i] -= prod[i];
        }
        poly = std::move(next);
    }
    std::vector<Rational> f;
    for (const auto& c : poly) f.push_back(invariant_value(c));

    std::vector<std::vector<Rational>> powers;
    Ring power(n, Integer(0));
    power[0] = 1;
    for (long k = 0; k < d; ++k) {
        powers.push_back(to_basis(power));
        power = ring_mul(power, eta[0]);
    }
    const auto s = solve_columns(powers, to_basis(eta[1]));
    return NumberField::custom(UniPoly(f), UniPoly(s), "eta");
}

FieldPtr cubic7_field() { return NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}, "t"); }

FieldPtr reference_field(long d) {
    switch (d) {
        case 2:
            return NumberField::quadratic(-1);
        case 3:
            return cubic7_field();
        case 4:
            return NumberField::cyclotomic_prime(5);
        case 5:
            return gaussian_period_field(5, 11);
        case 6:
            return NumberField::cyclotomic_prime(7);
        case 7:
            return gaussian_period_field(7, 29);
        case 8:
            return gaussian_period_field(8, 17);
        case 9:
            return gaussian_period_field(9, 19);
        case 10:
            return NumberField::cyclotomic_prime(11);
        case 11:
            return gaussian_period_field(11, 23);
        case 12:
            return NumberField::cyclotomic_prime(13);
        default:
            throw std::out_of_range("reference fields cover degrees 2..12");
    }
}

}  // namespace divalg::oracle
