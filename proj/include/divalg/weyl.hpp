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

#ifndef DIVALG_WEYL_HPP
#define DIVALG_WEYL_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "divalg/cyclicalg.hpp"
#include "divalg/permcycle.hpp"

namespace divalg {

/// The Galois group {sigma^0, ..., sigma^{d-1}} is indexed 0..d-1 and
/// sigma^i acts by left multiplication: j -> i + j mod d. Throws unless 0 <= i < d.
Permutation phi(std::size_t d, long i);
Permutation phi(const CyclicAlgebra& alg, long i);

struct WeylSubgroup {
    std::size_t d = 0;
    std::vector<Permutation> elements;
    std::map<Permutation, std::string> labels;

    bool contains(const Permutation& p) const;
    /// Identity, closure and inverses.
    bool is_subgroup() const;
    std::string to_string() const;
};

/// {phi(sigma^i) : 0 <= i < d}.
WeylSubgroup weyl_subgroup_Dx(const CyclicAlgebra& alg);

struct SL1Subgroup {
    WeylSubgroup group;
    /// Whether -a^{d/2} is a norm when d = 2 mod 4; yes/no when exact.
    Decision condition = Decision::yes;
    bool exact = true;
    std::optional<NFElement> norm_witness;
    std::vector<std::string> warnings;
};

/// {1} unless d = 2 mod 4; then {1, phi(sigma^{d/2})} iff -a^{d/2} is a norm.
SL1Subgroup weyl_subgroup_SL1(const AlgebraPtr& alg, unsigned height_bound);

struct SL1Representability {
    Decision decision = Decision::unknown;
    Rational target;  // (-1)^{i(d-1)} a^i
    std::optional<NFElement> norm_witness;
    /// x^i b^{-1}, of reduced norm 1, when a witness b is known.
    std::optional<AlgElement> element;
    std::string method;
};

SL1Representability representable_in_SL1(const AlgebraPtr& alg, long i, unsigned height_bound);

enum class WeylGroupKind { Dx, SL1 };
std::string to_string(WeylGroupKind g);

enum class ExclusionTag { unique_smallest, big, lonely, min_poly_thm, thm_Q };
std::string to_string(ExclusionTag t);

enum class VerdictKind { excluded, representable_fundamental, unknown };
std::string to_string(VerdictKind k);

struct TypeVerdict {
    CycleType type;
    VerdictKind kind = VerdictKind::unknown;
    std::vector<ExclusionTag> tags;
    std::string witness;  // labels of the realizing elements
};

struct RepresentabilityReport {
    int d = 0;
    WeylGroupKind group = WeylGroupKind::Dx;
    std::vector<TypeVerdict> verdicts;  // one per partition of d, {d} first
    std::vector<std::string> notes;

    const TypeVerdict& verdict_for(const CycleType& ct) const;
};

/// Exclusion tags apply for d > 2. Types realized by the algebra's subgroup
/// are marked representable; a type both excluded and realized throws
/// std::logic_error since it would contradict the exclusion theorems.
RepresentabilityReport coset_report(int d, WeylGroupKind group, const AlgebraPtr& alg = nullptr,
                                    unsigned height_bound = 4);

/// The exclusion tags for one cycle type, as used by coset_report.
std::vector<ExclusionTag> exclusion_tags(const CycleType& ct, WeylGroupKind group);

struct StabilizerHit {
    AlgElement element;
    MonomialData data;
};

/// Elements of coefficient height <= bound with monomial regular representation,
/// sorted lexicographically by coefficients. Throws std::logic_error if any
/// hit has more than one nonzero coefficient.
std::vector<StabilizerHit> stabilizer_search(const AlgebraPtr& alg, unsigned height_bound);

/// Text describing the affine Weyl group of SL_1(D) as W_SL1 extended by translations.
std::string affine_summary(const AlgebraPtr& alg, unsigned height_bound);

}  // namespace divalg

#endif  // DIVALG_WEYL_HPP
