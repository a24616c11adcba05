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

#ifndef DIVALG_ARITH_HPP
#define DIVALG_ARITH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace divalg {

using Integer = mpz_class;

/// Factorization as (prime, exponent) pairs, primes ascending.
using Factorization = std::vector<std::pair<Integer, int>>;

bool is_prime(const Integer& n);
bool is_prime(std::int64_t n);

/// Trial division up to a fixed bound, then a primality test on the cofactor.
/// Throws std::domain_error if a composite cofactor survives the trial bound.
Factorization factor(const Integer& n);

/// Distinct primes dividing |n| (n != 0).
std::vector<Integer> prime_divisors(const Integer& n);

bool is_squarefree(const Integer& n);

/// The squarefree integer m with n = m * s^2, sign preserved.
Integer squarefree_part(const Integer& n);

/// p-adic valuation of a nonzero integer.
int valuation(const Integer& n, const Integer& p);

std::int64_t euler_phi(std::int64_t n);

std::vector<std::int64_t> primes_below(std::int64_t bound);

/// Smallest primitive root modulo an odd prime.
std::int64_t smallest_primitive_root(std::int64_t p);

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace divalg

#endif  // DIVALG_ARITH_HPP
