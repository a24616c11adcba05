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

#include "divalg/weyl.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace divalg {

namespace {

std::string phi_label(long i) {
    if (i == 0) return "1";
    if (i == 1) return "φ(σ)";
    return "φ(σ^" + std::to_string(i) + ")";
}

bool is_power_of_two(long n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Permutation phi(std::size_t d, long i) {
    if (i < 0 || static_cast<std::size_t>(i) >= d) throw std::out_of_range("phi: index outside 0..d-1");
    std::vector<int> images(d);
    for (std::size_t j = 0; j < d; ++j) images[j] = static_cast<int>((static_cast<std::size_t>(i) + j) % d) + 1;
    return Permutation(std::move(images));
}

Permutation phi(const CyclicAlgebra& alg, long i) { return phi(alg.degree(), i); }

// ---------------------------------------------------------------- subgroups

bool WeylSubgroup::contains(const Permutation& p) const {
    return std::find(elements.begin(), elements.end(), p) != elements.end();
}

bool WeylSubgroup::is_subgroup() const {
    if (!contains(Permutation::identity(d))) return false;
    for (const auto& g : elements) {
        if (g.size() != d || !contains(g.inverse())) return false;
        for (const auto& h : elements) {
            if (!contains(g * h)) return false;
        }
    }
    return true;
}

std::string WeylSubgroup::to_string() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t k = 0; k < elements.size(); ++k) {
        auto it = labels.find(elements[k]);
        os << (k ? ", " : "") << (it != labels.end() ? it->second : elements[k].to_string());
    }
    os << "}";
    return os.str();
}

WeylSubgroup weyl_subgroup_Dx(const CyclicAlgebra& alg) {
    WeylSubgroup w;
    w.d = alg.degree();
    for (long i = 0; i < static_cast<long>(w.d); ++i) {
        Permutation p = phi(w.d, i);
        w.labels.emplace(p, phi_label(i));
        w.elements.push_back(std::move(p));
    }
    return w;
}

SL1Subgroup weyl_subgroup_SL1(const AlgebraPtr& alg, unsigned height_bound) {
    SL1Subgroup out;
    const long d = static_cast<long>(alg->degree());
    out.group.d = alg->degree();
    const Permutation id = Permutation::identity(alg->degree());
    out.group.elements.push_back(id);
    out.group.labels.emplace(id, "1");

    const DivisionResult div = is_division(alg, height_bound);
    if (div.decision != Decision::yes) {
        out.warnings.push_back("division property is " + to_string(div.decision) + " (" + div.method + ")");
    }
    if (d % 4 != 2) return out;

    const Rational target = -pow(alg->a(), d / 2);
    const NormResult nr = is_galois_norm(alg->field(), target, height_bound);
    out.condition = nr.decision;
    out.norm_witness = nr.witness;
    if (nr.decision == Decision::yes) {
        Permutation p = phi(alg->degree(), d / 2);
        out.group.labels.emplace(p, phi_label(d / 2));
        out.group.elements.push_back(std::move(p));
    } else if (nr.decision == Decision::unknown) {
        out.exact = false;
        out.warnings.push_back("norm status of " + to_string(target) + " unknown up to height " +
                               std::to_string(height_bound) + "; phi(sigma^" + std::to_string(d / 2) +
                               ") may also be representable");
    }
    return out;
}

SL1Representability representable_in_SL1(const AlgebraPtr& alg, long i, unsigned height_bound) {
    const long d = static_cast<long>(alg->degree());
    if (i < 0 || i >= d) throw std::out_of_range("representable_in_SL1: index outside 0..d-1");
    SL1Representability out;
    out.target = pow(alg->a(), i);
    if ((i * (d - 1)) % 2 != 0) out.target = -out.target;
    const NormResult nr = is_galois_norm(alg->field(), out.target, height_bound);
    out.decision = nr.decision;
    out.norm_witness = nr.witness;
    out.method = nr.method;
    if (nr.witness) {
        // Nrd(x^i b^{-1}) = (-1)^{i(d-1)} a^i / N(b) = 1.
        AlgElement z = AlgElement::monomial(alg, i, nr.witness->inverse());
        if (reduced_norm(z) != 1) throw std::logic_error("SL1 witness does not have reduced norm 1");
        out.element = std::move(z);
    }
    return out;
}

// ---------------------------------------------------------------- coset report

std::string to_string(WeylGroupKind g) { return g == WeylGroupKind::Dx ? "Dx" : "SL1"; }

std::string to_string(ExclusionTag t) {
    switch (t) {
        case ExclusionTag::unique_smallest:
            return "unique_smallest";
        case ExclusionTag::big:
            return "big";
        case ExclusionTag::lonely:
            return "lonely";
        case ExclusionTag::min_poly_thm:
            return "min_poly_thm";
        case ExclusionTag::thm_Q:
            return "thm_Q";
    }
    return "?";
}

std::string to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::excluded:
            return "ExcludedBy";
        case VerdictKind::representable_fundamental:
            return "RepresentableFundamental";
        case VerdictKind::unknown:
            return "Unknown";
    }
    return "?";
}

const TypeVerdict& RepresentabilityReport::verdict_for(const CycleType& ct) const {
    for (const auto& v : verdicts) {
        if (v.type == ct) return v;
    }
    throw std::out_of_range("no verdict for cycle type " + ct.to_string());
}

std::vector<ExclusionTag> exclusion_tags(const CycleType& ct, WeylGroupKind group) {
    std::vector<ExclusionTag> tags;
    const int d = ct.d();
    if (d <= 2) return tags;
    const CycleFlags f = classify_cycle_type(ct);
    if (f.unique_smallest) tags.push_back(ExclusionTag::unique_smallest);
    if (f.big_cycle) tags.push_back(ExclusionTag::big);
    if (f.has_lonely()) tags.push_back(ExclusionTag::lonely);
    if (group == WeylGroupKind::SL1 && f.is_d_cycle) {
        if (!is_power_of_two(d)) tags.push_back(ExclusionTag::min_poly_thm);
        tags.push_back(ExclusionTag::thm_Q);
    }
    return tags;
}

RepresentabilityReport coset_report(int d, WeylGroupKind group, const AlgebraPtr& alg, unsigned height_bound) {
    if (d < 2) throw std::invalid_argument("coset_report needs d >= 2");
    if (alg && static_cast<int>(alg->degree()) != d) throw std::invalid_argument("coset_report: algebra degree differs from d");
    RepresentabilityReport rep;
    rep.d = d;
    rep.group = group;

    std::optional<WeylSubgroup> realized;
    if (alg) {
        if (group == WeylGroupKind::Dx) {
            realized = weyl_subgroup_Dx(*alg);
        } else {
            SL1Subgroup sl1 = weyl_subgroup_SL1(alg, height_bound);
            for (const auto& w : sl1.warnings) rep.notes.push_back("warning: " + w);
            realized = std::move(sl1.group);
        }
        const DivisionResult div = is_division(alg, height_bound);
        if (div.decision == Decision::yes) {
            rep.notes.push_back("D is a division algebra over Q, so e(D) = " + std::to_string(d) +
                                " and a^i is a norm iff " + std::to_string(d) + " divides i");
        }
    }
    if (d == 2) rep.notes.push_back("d = 2: exclusion theorems do not apply; fundamental apartment data only");

    for_each_partition(d, [&](const std::vector<int>& parts) {
        TypeVerdict v{CycleType(parts), VerdictKind::unknown, {}, {}};
        v.tags = exclusion_tags(v.type, group);
        std::vector<std::string> witnesses;
        if (realized) {
            for (const auto& g : realized->elements) {
                if (cycle_type_of(g) == v.type) witnesses.push_back(realized->labels.at(g));
            }
        }
        if (!v.tags.empty() && !witnesses.empty()) {
            throw std::logic_error("cycle type " + v.type.to_string() + " is both excluded and realized");
        }
        if (!v.tags.empty()) {
            v.kind = VerdictKind::excluded;
        } else if (!witnesses.empty()) {
            v.kind = VerdictKind::representable_fundamental;
            for (std::size_t k = 0; k < witnesses.size(); ++k) v.witness += (k ? ", " : "") + witnesses[k];
        }
        rep.verdicts.push_back(std::move(v));
    });
    return rep;
}

// ---------------------------------------------------------------- stabilizer search

std::vector<StabilizerHit> stabilizer_search(const AlgebraPtr& alg, unsigned height_bound) {
    const std::size_t d = alg->degree();
    const FieldPtr& field = alg->field();
    std::vector<StabilizerHit> hits;
    for_each_tuple_by_height(d * d, height_bound, [&](const std::vector<Rational>& t) {
        std::vector<NFElement> coeffs;
        coeffs.reserve(d);
        for (std::size_t i = 0; i < d; ++i) {
            coeffs.emplace_back(field, std::vector<Rational>(t.begin() + static_cast<long>(i * d),
                                                             t.begin() + static_cast<long>((i + 1) * d)));
        }
        AlgElement z(alg, std::move(coeffs));
        if (auto data = monomial_structure(regular_rep(z))) {
            if (z.support_size() != 1) {
                throw std::logic_error("monomial regular representation from multi-term element " + z.to_string());
            }
            hits.push_back({std::move(z), std::move(*data)});
        }
        return true;
    });
    auto key_less = [](const StabilizerHit& x, const StabilizerHit& y) {
        const auto& a = x.element.coeffs();
        const auto& b = y.element.coeffs();
        for (std::size_t i = 0; i < a.size(); ++i) {
            const auto& ca = a[i].coeffs();
            const auto& cb = b[i].coeffs();
            for (std::size_t k = 0; k < ca.size(); ++k) {
                if (ca[k] != cb[k]) return ca[k] < cb[k];
            }
        }
        return false;
    };
    std::sort(hits.begin(), hits.end(), key_less);
    return hits;
}

std::string affine_summary(const AlgebraPtr& alg, unsigned height_bound) {
    const SL1Subgroup sl1 = weyl_subgroup_SL1(alg, height_bound);
    std::ostringstream os;
    const std::size_t order = sl1.group.elements.size();
    if (order == 1) {
        os << "W_{SL1} trivial; affine action is by translations only: (W_a)_{SL1} = Q";
    } else {
        os << "W_{SL1} = " << sl1.group.to_string() << "; affine = order-" << order << " group ⋉ Q";
    }
    if (!sl1.exact) os << " (lower bound: norm condition unknown)";
    return os.str();
}

}  // namespace divalg
