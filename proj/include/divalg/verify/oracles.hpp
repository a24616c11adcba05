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

// Brute-force reference computations. None of these share code paths with
// the routines they check: they enumerate, expand or solve directly.

#ifndef DIVALG_VERIFY_ORACLES_HPP
#define DIVALG_VERIFY_ORACLES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "divalg/cyclicalg.hpp"
#include "divalg/permcycle.hpp"

namespace divalg::oracle {

/// Flags read straight off the definitions, subsets enumerated explicitly.
struct TypeFlags {
    bool unique_smallest = false;
    bool big = false;
    bool lonely = false;
};
TypeFlags flags_from_definitions(const std::vector<int>& lengths);

bool satisfies(const TypeFlags& f, CensusPredicate p);

/// Walks all d! permutations (d <= 10).
Integer brute_force_census(int d, CensusPredicate p);

/// Solvability of z^2 = a x^2 + b y^2 over Q_v, decided by searching for a
/// primitive solution modulo p^k after reducing valuations to {0, 1}.
/// k = 2 for odd p and k = 7 for p = 2. Returns +1 or -1.
int hilbert_by_solvability(const Rational& a, const Rational& b, const Integer& p);
/// Real solvability: +1 unless a and b are both negative, by direct evaluation.
int hilbert_at_infinity(const Rational& a, const Rational& b);

/// Leibniz expansion of a determinant (n <= 8).
NFElement leibniz_det(const MatrixNF& m);

/// det(t0 I - M) by Leibniz expansion.
NFElement char_poly_at(const MatrixNF& m, const NFElement& t0);

/// Norm as the determinant of multiplication by b on the Q-basis 1, t, ..., t^{d-1},
/// by fraction-free rational elimination.
Rational norm_by_multiplication_matrix(const NFElement& b);

/// Uniform helpers for randomized checks.
Rational random_rational(std::mt19937_64& rng, long max_num, long max_den);
Rational random_nonzero_rational(std::mt19937_64& rng, long max_num, long max_den);
NFElement random_element(const FieldPtr& field, std::mt19937_64& rng, long max_num, long max_den);
AlgElement random_alg_element(const AlgebraPtr& alg, std::mt19937_64& rng, long max_num, long max_den);

}  // namespace divalg::oracle

#endif  // DIVALG_VERIFY_ORACLES_HPP
