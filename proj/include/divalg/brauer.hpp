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

// Local data over Q: places, Hilbert symbols, Hasse invariants of
// quaternion algebras, and the cyclotomic-subfield obstruction.

#ifndef DIVALG_BRAUER_HPP
#define DIVALG_BRAUER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divalg/arith.hpp"
#include "divalg/rational.hpp"

namespace divalg {

class CyclicAlgebra;

/// A place of Q. Primes sort ascending, infinity sorts last.
class Place {
   public:
    static Place infinity() { return Place(Integer(0)); }
    /// Throws std::invalid_argument unless p is prime.
    static Place prime(const Integer& p);
    /// "inf" or a decimal prime.
    static Place parse(const std::string& text);

    bool is_infinite() const { return p_ == 0; }
    /// The prime; 0 for infinity.
    const Integer& p() const { return p_; }
    std::string to_string() const;

    friend bool operator==(const Place& a, const Place& b) { return a.p_ == b.p_; }
    friend bool operator<(const Place& a, const Place& b);

   private:
    explicit Place(Integer p) : p_(std::move(p)) {}
    Integer p_;
};

/// (a, b)_v in {+1, -1}; throws std::invalid_argument on a zero argument.
int hilbert_symbol(const Rational& a, const Rational& b, const Place& v);

/// Places where (a, b)_v can be -1: infinity, 2, and primes dividing a or b.
std::vector<Place> relevant_places(const Rational& a, const Rational& b);

/// Local invariants in [0, 1); only nonzero entries are stored.
class InvariantVector {
   public:
    InvariantVector() = default;
    /// Reduces each value mod 1 and drops zeros.
    explicit InvariantVector(const std::map<Place, Rational>& entries);

    void set(const Place& v, const Rational& value);
    Rational at(const Place& v) const;
    const std::map<Place, Rational>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }
    /// "{2: 1/2, inf: 1/2}"
    std::string to_string() const;

    friend bool operator==(const InvariantVector&, const InvariantVector&) = default;

   private:
    std::map<Place, Rational> entries_;
};

/// 1/2 at each place where (a, m)_v = -1. Requires a degree-2 algebra.
InvariantVector quaternion_invariants(const CyclicAlgebra& alg);

struct InvariantChecks {
    bool sum_zero = true;
    Integer index = 1;
};

/// Sum mod 1 and the lcm of the denominators.
InvariantChecks invariant_checks(const InvariantVector& v);

/// Least k >= 1 with p^k = 1 mod n. Throws unless gcd(p, n) = 1 and n >= 1.
std::int64_t multiplicative_order(std::int64_t p, std::int64_t n);

enum class RootBranch { degree, local_degree };

struct RootOfUnityReport {
    long d = 0;
    long r = 0;          // d for odd d, 2d for even d
    long phi_r = 0;
    bool excluded = false;
    RootBranch branch = RootBranch::degree;
    std::string reason;
    std::vector<std::string> trace;
    // Local-degree branch only.
    long group_exponent = 0;          // exponent of (Z/rZ)^x, exhaustive
    std::int64_t prime_bound = 0;
    std::int64_t primes_checked = 0;
    std::int64_t max_order_seen = 0;
    std::optional<std::int64_t> counterexample;  // an odd prime with order >= d
};

/// No element of order r in a degree-d division algebra over Q. Throws for d <= 2.
RootOfUnityReport root_of_unity_report(long d, std::int64_t prime_bound = 10000);

}  // namespace divalg

#endif  // DIVALG_BRAUER_HPP
