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

#ifndef DIVALG_POLYNOMIAL_HPP
#define DIVALG_POLYNOMIAL_HPP

#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg {

/// Univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class UniPoly {
   public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);
    UniPoly(std::initializer_list<long> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, std::size_t degree);

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    /// Zero beyond the degree.
    Rational coeff(std::size_t k) const;
    const Rational& leading() const;
    bool is_monic() const { return !is_zero() && leading() == 1; }

    Rational operator()(const Rational& x) const;

    UniPoly monic() const;
    UniPoly derivative() const;

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& rhs);
    UniPoly& operator-=(const UniPoly& rhs);
    UniPoly& operator*=(const UniPoly& rhs);
    UniPoly& operator*=(const Rational& rhs);

    friend UniPoly operator+(UniPoly lhs, const UniPoly& rhs) { return lhs += rhs; }
    friend UniPoly operator-(UniPoly lhs, const UniPoly& rhs) { return lhs -= rhs; }
    friend UniPoly operator*(UniPoly lhs, const UniPoly& rhs) { return lhs *= rhs; }
    friend UniPoly operator*(UniPoly lhs, const Rational& rhs) { return lhs *= rhs; }
    friend bool operator==(const UniPoly& lhs, const UniPoly& rhs) { return lhs.coeffs_ == rhs.coeffs_; }

    /// Human-readable form, highest degree first, e.g. "t^3 + t^2 - 2*t - 1".
    std::string to_string(const std::string& var = "t") const;

   private:
    void normalize();
    std::vector<Rational> coeffs_;
};

/// Quotient and remainder; throws on division by zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);

/// Monic gcd (zero if both are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct ExtendedGcd {
    UniPoly g;  // monic
    UniPoly s;
    UniPoly t;  // s*a + t*b == g
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// p(q) reduced modulo `modulus`.
UniPoly compose_mod(const UniPoly& p, const UniPoly& q, const UniPoly& modulus);

/// Resultant by the Euclidean remainder sequence.
Rational resultant(const UniPoly& f, const UniPoly& g);

}  // namespace divalg

#endif  // DIVALG_POLYNOMIAL_HPP
