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

#include "divalg/arith.hpp"

#include <stdexcept>

namespace divalg {

namespace {

constexpr unsigned long kTrialBound = 1000000;

}  // namespace

bool is_prime(const Integer& n) {
    if (n < 2) return false;
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0) return false;
    for (std::int64_t q = 3; q * q <= n; q += 2) {
        if (n % q == 0) return false;
    }
    return true;
}

Factorization factor(const Integer& n) {
    if (n == 0) throw std::invalid_argument("factor: zero has no factorization");
    Integer rest = abs(n);
    Factorization out;
    auto strip = [&](unsigned long q) {
        if (mpz_divisible_ui_p(rest.get_mpz_t(), q) == 0) return;
        int e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), q) != 0) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
            ++e;
        }
        out.emplace_back(Integer(q), e);
    };
    strip(2);
    for (unsigned long q = 3; q <= kTrialBound; q += 2) {
        if (rest == 1) break;
        if (Integer(q) * q > rest) break;
        strip(q);
    }
    if (rest != 1) {
        if (!is_prime(rest)) {
            throw std::domain_error("factor: cofactor " + rest.get_str() + " is composite beyond the trial bound");
        }
        out.emplace_back(rest, 1);
    }
    return out;
}

std::vector<Integer> prime_divisors(const Integer& n) {
    std::vector<Integer> out;
    for (const auto& [p, e] : factor(n)) out.push_back(p);
    return out;
}

bool is_squarefree(const Integer& n) {
    for (const auto& [p, e] : factor(n)) {
        if (e > 1) return false;
    }
    return true;
}

Integer squarefree_part(const Integer& n) {
    Integer m = sgn(n) < 0 ? -1 : 1;
    for (const auto& [p, e] : factor(n)) {
        if (e % 2 == 1) m *= p;
    }
    return m;
}

int valuation(const Integer& n, const Integer& p) {
    if (n == 0) throw std::invalid_argument("valuation: zero argument");
    Integer rest = n;
    int v = 0;
    while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t()) != 0) {
        mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
        ++v;
    }
    return v;
}

std::int64_t euler_phi(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("euler_phi: n must be positive");
    std::int64_t result = n;
    for (std::int64_t q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        while (n % q == 0) n /= q;
        result -= result / q;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> primes_below(std::int64_t bound) {
    std::vector<std::int64_t> out;
    if (bound <= 2) return out;
    std::vector<bool> composite(static_cast<std::size_t>(bound), false);
    for (std::int64_t i = 2; i < bound; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        out.push_back(i);
        for (std::int64_t j = i * i; j < bound; j += i) composite[static_cast<std::size_t>(j)] = true;
    }
    return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
    unsigned __int128 result = 1 % mod;
    unsigned __int128 b = base % mod;
    while (exp > 0) {
        if (exp & 1U) result = result * b % mod;
        b = b * b % mod;
        exp >>= 1U;
    }
    return static_cast<std::uint64_t>(result);
}

std::int64_t smallest_primitive_root(std::int64_t p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("smallest_primitive_root: p must be an odd prime");
    std::vector<std::int64_t> qs;
    for (const auto& [q, e] : factor(Integer(static_cast<long>(p - 1)))) qs.push_back(q.get_si());
    for (std::int64_t g = 2; g < p; ++g) {
        bool generator = true;
        for (auto q : qs) {
            if (powmod(static_cast<std::uint64_t>(g), static_cast<std::uint64_t>((p - 1) / q),
                       static_cast<std::uint64_t>(p)) == 1) {
                generator = false;
                break;
            }
        }
        if (generator) return g;
    }
    throw std::logic_error("smallest_primitive_root: none found");
}

}  // namespace divalg
