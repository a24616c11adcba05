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

#include "divalg/rational.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace divalg {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    std::size_t i = 0;
    if (!text.empty() && (text[0] == '-' || text[0] == '+')) i = 1;
    if (i == text.size()) throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
    for (std::size_t j = i; j < text.size(); ++j) {
        if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
            throw std::invalid_argument("malformed rational '" + std::string(whole) + "'");
        }
    }
    std::string digits(text[0] == '+' ? text.substr(1) : text);
    return Integer(digits, 10);
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    auto t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(t, text));
    auto num = parse_integer(trim(t.substr(0, slash)), text);
    auto den = parse_integer(trim(t.substr(slash + 1)), text);
    return make_rational(num, den);
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal(const Rational& q, int significant) {
    if (q == 0) return "0";
    const Rational mag = abs(q);
    auto pow10 = [](long e) {
        Integer t;
        mpz_ui_pow_ui(t.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(e)));
        return e >= 0 ? Rational(t) : Rational(Integer(1), t);
    };
    // Leading digit sits at 10^exponent.
    long exponent = static_cast<long>(mpz_sizeinbase(mag.get_num_mpz_t(), 10)) -
                    static_cast<long>(mpz_sizeinbase(mag.get_den_mpz_t(), 10));
    while (mag < pow10(exponent)) --exponent;
    while (mag >= pow10(exponent + 1)) ++exponent;

    // Round half away from zero to `significant` digits.
    Rational scaled = mag * pow10(significant - 1 - exponent);
    Integer digits_int = (2 * scaled.get_num() + scaled.get_den()) / (2 * scaled.get_den());
    std::string digits = digits_int.get_str();
    if (static_cast<int>(digits.size()) > significant) {
        ++exponent;
        digits.resize(static_cast<std::size_t>(significant));
    }

    std::string out;
    if (exponent >= 0) {
        auto int_len = static_cast<std::size_t>(exponent + 1);
        if (digits.size() <= int_len) {
            out = digits + std::string(int_len - digits.size(), '0');
        } else {
            out = digits.substr(0, int_len) + "." + digits.substr(int_len);
        }
    } else {
        out = "0." + std::string(static_cast<std::size_t>(-exponent - 1), '0') + digits;
    }
    if (out.find('.') != std::string::npos) {
        while (out.back() == '0') out.pop_back();
        if (out.back() == '.') out.pop_back();
    }
    return (sgn(q) < 0 ? "-" : "") + out;
}

Integer height(const Rational& q) {
    Integer n = abs(q.get_num());
    return n > q.get_den() ? n : Integer(q.get_den());
}

Rational pow(const Rational& q, long exponent) {
    if (exponent < 0) {
        if (q == 0) throw std::domain_error("negative power of zero");
        Rational inverse = 1 / q;
        return pow(inverse, -exponent);
    }
    Rational out;
    mpz_pow_ui(out.get_num_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(out.get_den_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    out.canonicalize();
    return out;
}

std::vector<Rational> rationals_up_to_height(unsigned bound) {
    std::vector<Rational> out{Rational(0)};
    for (unsigned h = 1; h <= bound; ++h) {
        std::vector<Rational> shell;
        // Height exactly h: num = ±h with den <= h, or den = h with |num| < h.
        for (unsigned den = 1; den <= h; ++den) {
            if (std::gcd(h, den) == 1) {
                shell.push_back(make_rational(Integer(h), Integer(den)));
                shell.push_back(make_rational(-Integer(h), Integer(den)));
            }
        }
        for (unsigned num = 1; num < h; ++num) {
            if (std::gcd(num, h) == 1) {
                shell.push_back(make_rational(Integer(num), Integer(h)));
                shell.push_back(make_rational(-Integer(num), Integer(h)));
            }
        }
        std::sort(shell.begin(), shell.end(), [](const Rational& x, const Rational& y) {
            const int c = cmp(abs(x), abs(y));
            return c != 0 ? c < 0 : x > y;
        });
        shell.erase(std::unique(shell.begin(), shell.end()), shell.end());
        out.insert(out.end(), shell.begin(), shell.end());
    }
    return out;
}

namespace {

// Returns (num, den) of sum_{k=lo}^{hi} 1/k without intermediate canonicalization.
std::pair<Integer, Integer> harmonic_split(long lo, long hi) {
    if (lo == hi) return {Integer(1), Integer(lo)};
    long mid = lo + (hi - lo) / 2;
    auto [n1, d1] = harmonic_split(lo, mid);
    auto [n2, d2] = harmonic_split(mid + 1, hi);
    return {n1 * d2 + n2 * d1, d1 * d2};
}

}  // namespace

Rational harmonic_range(long lo, long hi) {
    if (lo < 1) throw std::invalid_argument("harmonic_range: lo must be positive");
    if (hi < lo) return Rational(0);
    auto [n, d] = harmonic_split(lo, hi);
    return make_rational(n, d);
}

}  // namespace divalg
