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

#include "divalg/permcycle.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

namespace divalg {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
        if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[static_cast<std::size_t>(v - 1)]) {
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(images_.size()));
        }
        seen[static_cast<std::size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(std::size_t d) {
    std::vector<int> images(d);
    for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<int>(i + 1);
    return Permutation(std::move(images));
}

Permutation Permutation::from_cycles(std::size_t d, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> images(d, 0);
    for (std::size_t i = 0; i < d; ++i) images[i] = static_cast<int>(i + 1);
    std::vector<bool> used(d, false);
    for (const auto& cycle : cycles) {
        for (std::size_t j = 0; j < cycle.size(); ++j) {
            int from = cycle[j];
            int to = cycle[(j + 1) % cycle.size()];
            if (from < 1 || static_cast<std::size_t>(from) > d || used[static_cast<std::size_t>(from - 1)]) {
                throw std::invalid_argument("cycles are not disjoint within 1.." + std::to_string(d));
            }
            used[static_cast<std::size_t>(from - 1)] = true;
            images[static_cast<std::size_t>(from - 1)] = to;
        }
    }
    return Permutation(std::move(images));
}

Permutation Permutation::operator*(const Permutation& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = images_[static_cast<std::size_t>(rhs.images_[i] - 1)];
    return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
    std::vector<int> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
    return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < size(); ++i) {
        if (images_[i] != static_cast<int>(i + 1)) return false;
    }
    return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(size(), false);
    for (std::size_t start = 0; start < size(); ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(images_[i] - 1)) {
            seen[i] = true;
            cycle.push_back(static_cast<int>(i + 1));
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    for (const auto& cycle : cycles()) {
        if (cycle.size() < 2) continue;
        os << "(";
        for (std::size_t j = 0; j < cycle.size(); ++j) os << (j ? " " : "") << cycle[j];
        os << ")";
    }
    std::string s = os.str();
    return s.empty() ? "()" : s;
}

// ---------------------------------------------------------------- CycleType

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    if (lengths_.empty()) throw std::invalid_argument("cycle type needs at least one cycle");
    for (int k : lengths_) {
        if (k < 1) throw std::invalid_argument("cycle lengths must be positive");
        d_ += k;
    }
    std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

std::size_t CycleType::multiplicity(int length) const {
    return static_cast<std::size_t>(std::count(lengths_.begin(), lengths_.end(), length));
}

std::string CycleType::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < lengths_.size(); ++i) os << (i ? "," : "") << lengths_[i];
    os << "}";
    return os.str();
}

CycleType cycle_type_of(const Permutation& p) {
    std::vector<int> lengths;
    for (const auto& c : p.cycles()) lengths.push_back(static_cast<int>(c.size()));
    return CycleType(std::move(lengths));
}

// ---------------------------------------------------------------- classification

namespace {

// True if `target` is a sum of a sub-multiset of lengths with index `skip` removed.
bool subset_sum_reaches(const std::vector<int>& lengths, std::size_t skip, int target) {
    if (target < 64) {
        std::uint64_t reach = 1;
        const std::uint64_t mask = (target == 63) ? ~std::uint64_t{0} : ((std::uint64_t{1} << (target + 1)) - 1);
        for (std::size_t j = 0; j < lengths.size(); ++j) {
            if (j == skip || lengths[j] > target) continue;
            reach = (reach | (reach << lengths[j])) & mask;
            if ((reach >> target) & 1U) return true;
        }
        return false;
    }
    boost::dynamic_bitset<> reach(static_cast<std::size_t>(target) + 1);
    reach.set(0);
    for (std::size_t j = 0; j < lengths.size(); ++j) {
        if (j == skip || lengths[j] > target) continue;
        reach |= reach << static_cast<std::size_t>(lengths[j]);
        if (reach.test(static_cast<std::size_t>(target))) return true;
    }
    return false;
}

}  // namespace

CycleFlags classify_cycle_type(const CycleType& ct) {
    CycleFlags flags;
    const auto& len = ct.lengths();
    const int d = ct.d();
    flags.is_d_cycle = len.size() == 1;
    const int smallest = len.back();
    const int largest = len.front();
    flags.unique_smallest = !flags.is_d_cycle && ct.multiplicity(smallest) == 1;
    flags.big_cycle = std::any_of(len.begin(), len.end(), [d](int k) { return 2 * k > d && k < d; });
    for (std::size_t i = 0; i < len.size(); ++i) {
        const int k = len[i];
        if (subset_sum_reaches(len, i, k)) continue;
        if (k == largest && d % k == 0) continue;
        flags.lonely_indices.push_back(i);
    }
    return flags;
}

Integer count_with_type(const CycleType& ct) {
    Integer num;
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(ct.d()));
    Integer den = 1;
    const auto& len = ct.lengths();
    for (std::size_t i = 0; i < len.size();) {
        std::size_t j = i;
        while (j < len.size() && len[j] == len[i]) ++j;
        const auto m = static_cast<unsigned long>(j - i);
        Integer kpow, mfac;
        mpz_ui_pow_ui(kpow.get_mpz_t(), static_cast<unsigned long>(len[i]), m);
        mpz_fac_ui(mfac.get_mpz_t(), m);
        den *= kpow * mfac;
        i = j;
    }
    mpz_divexact(num.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return num;
}

std::string to_string(CensusPredicate p) {
    switch (p) {
        case CensusPredicate::lonely:
            return "lonely";
        case CensusPredicate::big:
            return "big";
        case CensusPredicate::unique_smallest:
            return "unique-smallest";
        case CensusPredicate::any_exclusion:
            return "any";
    }
    return "any";
}

CensusPredicate parse_census_predicate(const std::string& text) {
    if (text == "lonely") return CensusPredicate::lonely;
    if (text == "big") return CensusPredicate::big;
    if (text == "unique-smallest" || text == "unique_smallest") return CensusPredicate::unique_smallest;
    if (text == "any" || text == "any_exclusion") return CensusPredicate::any_exclusion;
    throw std::invalid_argument("unknown census predicate '" + text + "'");
}

bool satisfies(const CycleFlags& flags, CensusPredicate p) {
    switch (p) {
        case CensusPredicate::lonely:
            return flags.has_lonely();
        case CensusPredicate::big:
            return flags.big_cycle;
        case CensusPredicate::unique_smallest:
            return flags.unique_smallest;
        case CensusPredicate::any_exclusion:
            return flags.has_lonely() || flags.big_cycle || flags.unique_smallest;
    }
    return false;
}

bool satisfies(const CycleType& ct, CensusPredicate p) {
    if (p == CensusPredicate::big) {
        const int d = ct.d();
        return std::any_of(ct.lengths().begin(), ct.lengths().end(), [d](int k) { return 2 * k > d && k < d; });
    }
    return satisfies(classify_cycle_type(ct), p);
}

// ---------------------------------------------------------------- partitions and census

namespace {

void partitions_rec(int remaining, int max_part, std::vector<int>& parts,
                    const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(parts);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        parts.push_back(k);
        partitions_rec(remaining - k, k, parts, visit);
        parts.pop_back();
    }
}

}  // namespace

void for_each_partition(int n, const std::function<void(const std::vector<int>&)>& visit) {
    if (n < 1) throw std::invalid_argument("partitions need n >= 1");
    std::vector<int> parts;
    partitions_rec(n, n, parts, visit);
}

std::vector<CycleType> partitions(int n) {
    std::vector<CycleType> out;
    for_each_partition(n, [&](const std::vector<int>& parts) { out.emplace_back(parts); });
    return out;
}

CensusResult census(int d, CensusPredicate predicate, bool with_contributions) {
    if (d < 1 || d > kCensusMaxDegree) {
        throw std::out_of_range("census supports 1 <= d <= " + std::to_string(kCensusMaxDegree));
    }
    CensusResult result;
    result.d = d;
    result.predicate = predicate;
    result.count = 0;
    mpz_fac_ui(result.total.get_mpz_t(), static_cast<unsigned long>(d));
    for_each_partition(d, [&](const std::vector<int>& parts) {
        CycleType ct(parts);
        if (!satisfies(ct, predicate)) return;
        Integer n = count_with_type(ct);
        result.count += n;
        if (with_contributions) result.contributions.emplace_back(std::move(ct), std::move(n));
    });
    result.fraction = make_rational(result.count, result.total);
    return result;
}

Rational big_cycle_fraction_exact(long d) {
    if (d < 1) throw std::invalid_argument("big_cycle_fraction_exact: d must be positive");
    return harmonic_range(d / 2 + 1, d - 1);
}

long double big_cycle_fraction_numeric(long d) {
    if (d < 1) throw std::invalid_argument("big_cycle_fraction_numeric: d must be positive");
    long double sum = 0;
    // Smallest terms first.
    for (long k = d - 1; k > d / 2; --k) sum += 1.0L / static_cast<long double>(k);
    return sum;
}

}  // namespace divalg
