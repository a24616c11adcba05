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

#include "divalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace divalg {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

UniPoly::UniPoly(std::initializer_list<long> coeffs) {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs) coeffs_.emplace_back(c);
    normalize();
}

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, std::size_t degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

void UniPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Rational(0); }

const Rational& UniPoly::leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    UniPoly out = *this;
    Rational lc = leading();
    for (auto& c : out.coeffs_) c /= lc;
    return out;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> v(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v[k - 1] = coeffs_[k] * static_cast<long>(k);
    return UniPoly(std::move(v));
}

UniPoly UniPoly::operator-() const {
    UniPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> v(coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(v);
    normalize();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    normalize();
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const Rational& c = coeffs_[k];
        if (c == 0) continue;
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) os << "-";
        } else {
            os << (sgn(c) < 0 ? " - " : " + ");
        }
        first = false;
        bool unit = mag == 1;
        if (k == 0) {
            os << mag.get_str();
            continue;
        }
        if (!unit) os << mag.get_str() << "*";
        os << var;
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    if (num.degree() < den.degree()) return {UniPoly{}, num};
    std::vector<Rational> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size() - 1;
    std::vector<Rational> quot(rem.size() - dn);
    Rational inv_lc = 1 / d.back();
    for (std::size_t k = rem.size(); k-- > dn;) {
        if (rem[k] == 0) continue;
        Rational q = rem[k] * inv_lc;
        quot[k - dn] = q;
        for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= q * d[j];
    }
    rem.resize(dn);
    return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        auto r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(1), s1;
    UniPoly t0, t1 = UniPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    Rational lc = r0.leading();
    Rational inv = 1 / lc;
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly compose_mod(const UniPoly& p, const UniPoly& q, const UniPoly& modulus) {
    UniPoly acc;
    UniPoly qq = divmod(q, modulus).second;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        acc = divmod(acc * qq, modulus).second;
        acc += UniPoly::constant(p.coeffs()[k]);
    }
    return divmod(acc, modulus).second;
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() || g.is_zero()) return Rational(0);
    UniPoly a = f, b = g;
    Rational acc = 1;
    while (true) {
        const int m = a.degree();
        const int n = b.degree();
        if (n == 0) return acc * pow(b.leading(), m);
        if (m == 0) return acc * pow(a.leading(), n);
        if (m < n) {
            if ((m * n) % 2 == 1) acc = -acc;
            std::swap(a, b);
            continue;
        }
        // res(a, b) = (-1)^{mn} lc(b)^{m - deg r} res(b, r) with r = a mod b
        UniPoly r = divmod(a, b).second;
        if (r.is_zero()) return Rational(0);
        if ((m * n) % 2 == 1) acc = -acc;
        acc *= pow(b.leading(), m - r.degree());
        a = std::move(b);
        b = std::move(r);
    }
}

}  // namespace divalg
