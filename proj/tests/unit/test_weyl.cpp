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

#include <doctest.h>

#include "divalg/weyl.hpp"

using namespace divalg;

namespace {

AlgebraPtr hamilton() { return CyclicAlgebra::create(NumberField::quadratic(-1), -1); }

}  // namespace

TEST_CASE("phi is the rotation by i") {
    CHECK(phi(4, 1).images() == std::vector<int>{2, 3, 4, 1});
    CHECK(phi(4, 2) == phi(4, 1) * phi(4, 1));
    CHECK(phi(4, 0).is_identity());
    CHECK_THROWS(phi(4, 4));
    CHECK(cycle_type_of(phi(6, 2)) == CycleType({3, 3}));
}

TEST_CASE("weyl subgroup of the unit group") {
    auto alg = CyclicAlgebra::create(NumberField::cyclotomic_prime(5), 3);
    auto w = weyl_subgroup_Dx(*alg);
    CHECK(w.elements.size() == 4);
    CHECK(w.is_subgroup());
    CHECK(w.contains(phi(4, 3)));
}

TEST_CASE("weyl subgroup of SL1") {
    auto h = weyl_subgroup_SL1(hamilton(), 4);
    CHECK(h.exact);
    CHECK(h.group.to_string() == "{1, φ(σ)}");
    auto g = weyl_subgroup_SL1(CyclicAlgebra::create(NumberField::quadratic(-1), -3), 4);
    CHECK(g.group.to_string() == "{1}");
    auto odd = weyl_subgroup_SL1(CyclicAlgebra::create(NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}), 2), 1);
    CHECK(odd.group.elements.size() == 1);
}

TEST_CASE("SL1 witness for Hamilton") {
    auto r = representable_in_SL1(hamilton(), 1, 4);
    CHECK(r.decision == Decision::yes);
    CHECK(r.target == 1);
    REQUIRE(r.element);
    CHECK(reduced_norm(*r.element) == 1);
}

TEST_CASE("coset report for d = 3") {
    auto cubic = CyclicAlgebra::create(NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}), 2);
    auto rep = coset_report(3, WeylGroupKind::SL1, cubic, 1);
    auto& trivial = rep.verdict_for(CycleType({1, 1, 1}));
    CHECK(trivial.kind == VerdictKind::representable_fundamental);
    auto& two_one = rep.verdict_for(CycleType({2, 1}));
    CHECK(two_one.kind == VerdictKind::excluded);
    // 2 > 3/2, so the 2-cycle is also big.
    CHECK(two_one.tags ==
          std::vector<ExclusionTag>{ExclusionTag::unique_smallest, ExclusionTag::big, ExclusionTag::lonely});
    auto& three = rep.verdict_for(CycleType({3}));
    CHECK(three.kind == VerdictKind::excluded);
    CHECK(three.tags == std::vector<ExclusionTag>{ExclusionTag::min_poly_thm, ExclusionTag::thm_Q});
}

TEST_CASE("without an algebra nothing is realized") {
    auto rep = coset_report(3, WeylGroupKind::Dx);
    CHECK(rep.verdict_for(CycleType({1, 1, 1})).kind == VerdictKind::unknown);
    CHECK(rep.verdict_for(CycleType({3})).kind == VerdictKind::unknown);
}

TEST_CASE("exclusion tags") {
    CHECK(exclusion_tags(CycleType({3, 2, 2}), WeylGroupKind::Dx) == std::vector<ExclusionTag>{ExclusionTag::lonely});
    CHECK(exclusion_tags(CycleType({2, 2}), WeylGroupKind::Dx).empty());
    // 4 is a power of 2, so only the rational obstruction applies.
    CHECK(exclusion_tags(CycleType({4}), WeylGroupKind::SL1) == std::vector<ExclusionTag>{ExclusionTag::thm_Q});
    CHECK(exclusion_tags(CycleType({4}), WeylGroupKind::Dx).empty());
}

TEST_CASE("stabilizer search finds monomials only") {
    auto hits = stabilizer_search(hamilton(), 1);
    CHECK_FALSE(hits.empty());
    for (const auto& hit : hits) {
        CHECK(hit.element.support_size() == 1);
        long i = 0;
        while (hit.element.coeff(static_cast<std::size_t>(i)).is_zero()) ++i;
        CHECK(hit.data.perm == phi(2, i));
    }
}

TEST_CASE("affine summary") {
    CHECK(affine_summary(hamilton(), 4).find("order-2") != std::string::npos);
    auto cubic = CyclicAlgebra::create(NumberField::custom(UniPoly{-1, -2, 1, 1}, UniPoly{-2, 0, 1}), 2);
    CHECK(affine_summary(cubic, 1).find("translations only") != std::string::npos);
}
