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

// Property checks shared by `divalg verify`, the unit tests and the
// acceptance runner. Every check is deterministic for a given seed.

#ifndef DIVALG_VERIFY_SUITES_HPP
#define DIVALG_VERIFY_SUITES_HPP

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace divalg::verify {

struct CheckResult {
    explicit CheckResult(std::string check_name) : name(std::move(check_name)) {}

    std::string name;
    bool passed = true;
    std::size_t cases = 0;
    std::vector<std::string> failures;  // first few only
    std::vector<std::string> info;

    void fail(const std::string& what);
};

using Rng = std::mt19937_64;

// Algebra level.
CheckResult check_nrd_formula(const std::vector<long>& degrees, int samples_per_degree, Rng& rng);
CheckResult check_char_poly_rational(const std::vector<long>& degrees, int samples_per_degree, Rng& rng);
CheckResult check_regular_rep_homomorphism(int samples, Rng& rng);
CheckResult check_hamilton_inverse(int samples, Rng& rng);

// Matrices.
CheckResult check_cycle_min_poly(int max_k, int samples, Rng& rng);
CheckResult check_char_poly_oracle(int samples, Rng& rng);
CheckResult check_min_poly_divides(int samples, Rng& rng);
CheckResult check_monomial_round_trip(int samples, Rng& rng);

// Fields and norms.
CheckResult check_field_norms(int samples, Rng& rng);
CheckResult check_quadratic_norm_decision(unsigned height_bound);

// Local data.
CheckResult check_hilbert_oracle(long bound, const std::vector<long>& primes);
CheckResult check_product_formula(int pairs, Rng& rng);
CheckResult check_hilbert_bimultiplicative(int samples, Rng& rng);
CheckResult check_hamilton();
CheckResult check_root_obstruction(long lo, long hi, std::int64_t prime_bound);

// Combinatorics.
CheckResult check_census_oracle(int max_d);
CheckResult check_big_fraction(int max_census_d);
CheckResult check_predicate_implications(int max_d);

// Weyl groups.
CheckResult check_phi_structure();
CheckResult check_stabilizer(unsigned height_bound);
CheckResult check_consistency(long lo, long hi);
CheckResult check_sl1_witnesses(unsigned height_bound);

struct SuiteResult {
    std::string name;
    std::vector<CheckResult> checks;
    bool passed() const;
};

const std::vector<std::string>& suite_names();
/// Throws std::invalid_argument for an unknown suite name.
SuiteResult run_suite(const std::string& name, std::uint64_t seed);

}  // namespace divalg::verify

#endif  // DIVALG_VERIFY_SUITES_HPP
