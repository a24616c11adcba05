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

#ifndef DIVALG_PERMCYCLE_HPP
#define DIVALG_PERMCYCLE_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg {

/// Permutation of {1, ..., d} stored as its image list.
class Permutation {
   public:
    /// images[i - 1] = image of i; must be a bijection of 1..d.
    explicit Permutation(std::vector<int> images);

    static Permutation identity(std::size_t d);
    /// Cycles use 1-based points; points not mentioned are fixed.
    static Permutation from_cycles(std::size_t d, const std::vector<std::vector<int>>& cycles);

    std::size_t size() const { return images_.size(); }
    int operator()(int point) const { return images_[static_cast<std::size_t>(point - 1)]; }
    const std::vector<int>& images() const { return images_; }

    /// (*this * rhs)(i) = (*this)(rhs(i))
    Permutation operator*(const Permutation& rhs) const;
    Permutation inverse() const;
    bool is_identity() const;

    /// Disjoint cycles including fixed points, each starting at its smallest point.
    std::vector<std::vector<int>> cycles() const;
    /// Cycle notation without fixed points; "()" for the identity.
    std::string to_string() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

   private:
    std::vector<int> images_;
};

/// Multiset of cycle lengths, kept sorted in descending order.
class CycleType {
   public:
    explicit CycleType(std::vector<int> lengths);

    int d() const { return d_; }
    const std::vector<int>& lengths() const { return lengths_; }
    std::size_t multiplicity(int length) const;
    /// "{3,2,2}"
    std::string to_string() const;

    friend bool operator==(const CycleType&, const CycleType&) = default;
    friend auto operator<=>(const CycleType& a, const CycleType& b) { return a.lengths_ <=> b.lengths_; }

   private:
    std::vector<int> lengths_;
    int d_ = 0;
};

CycleType cycle_type_of(const Permutation& p);

struct CycleFlags {
    bool unique_smallest = false;
    bool big_cycle = false;
    bool is_d_cycle = false;
    /// Indices into CycleType::lengths() of the lonely cycles.
    std::vector<std::size_t> lonely_indices;

    bool has_lonely() const { return !lonely_indices.empty(); }
};

/// unique_smallest: exactly one cycle attains the minimum length and the type is not {d}.
/// big_cycle: some length k with d/2 < k < d.
/// lonely: no subset of the other lengths sums to k_i, and a maximal k_i does not divide d.
CycleFlags classify_cycle_type(const CycleType& ct);

/// Number of permutations of S_d with this cycle type: d! / prod(k^{m_k} m_k!).
Integer count_with_type(const CycleType& ct);

enum class CensusPredicate { lonely, big, unique_smallest, any_exclusion };

std::string to_string(CensusPredicate p);
/// Accepts "lonely", "big", "unique-smallest"/"unique_smallest", "any"/"any_exclusion".
CensusPredicate parse_census_predicate(const std::string& text);

bool satisfies(const CycleFlags& flags, CensusPredicate p);
bool satisfies(const CycleType& ct, CensusPredicate p);

/// Visits every partition of n, parts in descending order, partitions in
/// reverse lexicographic order starting from {n}.
void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit);
std::vector<CycleType> partitions(int n);

constexpr int kCensusMaxDegree = 60;

struct CensusResult {
    int d = 0;
    CensusPredicate predicate = CensusPredicate::any_exclusion;
    Integer count;
    Integer total;  // d!
    Rational fraction;
    /// Per-type contributions, filled only when requested.
    std::vector<std::pair<CycleType, Integer>> contributions;
};

/// Exact count over all partitions of d weighted by count_with_type, 1 <= d <= 60.
CensusResult census(int d, CensusPredicate predicate, bool with_contributions = false);

/// sum_{floor(d/2) < k < d} 1/k; permutations containing a k-cycle with
/// k > d/2 number d!/k and these events are disjoint.
Rational big_cycle_fraction_exact(long d);

/// Same sum in long double, for d where the exact fraction is impractical.
long double big_cycle_fraction_numeric(long d);

}  // namespace divalg

#endif  // DIVALG_PERMCYCLE_HPP
