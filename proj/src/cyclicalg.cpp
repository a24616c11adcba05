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

#include "divalg/cyclicalg.hpp"

#include <sstream>
#include <stdexcept>

#include "divalg/brauer.hpp"

namespace divalg {

AlgebraPtr CyclicAlgebra::create(FieldPtr field, Rational a) {
    if (!field) throw std::invalid_argument("cyclic algebra needs a field");
    if (a == 0) throw std::invalid_argument("cyclic algebra needs a != 0");
    return std::make_shared<const CyclicAlgebra>(Token{}, std::move(field), std::move(a));
}

CyclicAlgebra::CyclicAlgebra(Token, FieldPtr field, Rational a) : field_(std::move(field)), a_(std::move(a)) {}

std::string CyclicAlgebra::description() const {
    return "(K/Q, sigma, " + to_string(a_) + ") with K = " + field_->description();
}

void require_same_algebra(const CyclicAlgebra& a, const CyclicAlgebra& b) {
    if (&a == &b) return;
    if (a.a() != b.a() || !a.field()->same_as(*b.field())) throw std::invalid_argument("algebra mismatch");
}

// ---------------------------------------------------------------- AlgElement

AlgElement::AlgElement(AlgebraPtr alg, std::vector<NFElement> coeffs) : alg_(std::move(alg)), coeffs_(std::move(coeffs)) {
    const std::size_t d = alg_->degree();
    if (coeffs_.size() > d) throw std::invalid_argument("algebra element has more than d coefficients");
    for (const auto& c : coeffs_) require_same_field(*alg_->field(), *c.field());
    while (coeffs_.size() < d) coeffs_.push_back(NFElement::zero(alg_->field()));
}

AlgElement AlgElement::zero(const AlgebraPtr& alg) { return AlgElement(alg, {}); }

AlgElement AlgElement::one(const AlgebraPtr& alg) { return from_field(alg, NFElement::one(alg->field())); }

AlgElement AlgElement::monomial(const AlgebraPtr& alg, long i, const NFElement& b) {
    const auto d = static_cast<long>(alg->degree());
    if (i < 0) throw std::invalid_argument("monomial: negative power of x");
    std::vector<NFElement> coeffs(alg->degree(), NFElement::zero(alg->field()));
    coeffs[static_cast<std::size_t>(i % d)] = b * pow(alg->a(), i / d);
    return AlgElement(alg, std::move(coeffs));
}

AlgElement AlgElement::x_power(const AlgebraPtr& alg, long i) { return monomial(alg, i, NFElement::one(alg->field())); }

AlgElement AlgElement::from_field(const AlgebraPtr& alg, const NFElement& b) { return monomial(alg, 0, b); }

bool AlgElement::is_zero() const { return support_size() == 0; }

std::size_t AlgElement::support_size() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_) n += c.is_zero() ? 0 : 1;
    return n;
}

AlgElement AlgElement::operator-() const {
    AlgElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

AlgElement& AlgElement::operator+=(const AlgElement& rhs) {
    require_same_algebra(*alg_, *rhs.alg_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& rhs) {
    require_same_algebra(*alg_, *rhs.alg_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

AlgElement operator*(const AlgElement& z, const AlgElement& w) {
    require_same_algebra(*z.alg_, *w.alg_);
    const std::size_t d = z.alg_->degree();
    const FieldPtr& field = z.alg_->field();
    std::vector<NFElement> out(d, NFElement::zero(field));
    for (std::size_t j = 0; j < d; ++j) {
        const NFElement& c = w.coeffs_[j];
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < d; ++i) {
            const NFElement& b = z.coeffs_[i];
            if (b.is_zero()) continue;
            NFElement term = apply_automorphism(b, static_cast<long>(j)) * c;
            if (i + j >= d) term *= z.alg_->a();
            out[(i + j) % d] += term;
        }
    }
    return AlgElement(z.alg_, std::move(out));
}

bool operator==(const AlgElement& a, const AlgElement& b) {
    require_same_algebra(*a.alg_, *b.alg_);
    return a.coeffs_ == b.coeffs_;
}

AlgElement AlgElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    std::vector<NFElement> e0(alg_->degree(), NFElement::zero(alg_->field()));
    e0[0] = NFElement::one(alg_->field());
    auto w = solve(regular_rep(*this), e0);
    if (!w) throw std::domain_error("element is a zero divisor");
    return AlgElement(alg_, std::move(*w));
}

std::string AlgElement::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << "(" << coeffs_[i].to_string() << ")";
        } else {
            os << "x" << (i > 1 ? "^" + std::to_string(i) : "") << "*(" << coeffs_[i].to_string() << ")";
        }
    }
    return first ? "0" : os.str();
}

// ---------------------------------------------------------------- representation

MatrixNF regular_rep(const AlgElement& z) {
    const auto& alg = z.algebra();
    const std::size_t d = alg->degree();
    MatrixNF m(alg->field(), d);
    // z x^j = sum_i x^{i+j} sigma^j(b_i), with x^d = a.
    for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) {
            const NFElement& b = z.coeff(i);
            if (b.is_zero()) continue;
            NFElement entry = apply_automorphism(b, static_cast<long>(j));
            if (i + j >= d) entry *= alg->a();
            m.at((i + j) % d, j) = std::move(entry);
        }
    }
    return m;
}

Rational reduced_norm(const AlgElement& z) {
    const NFElement det = determinant(regular_rep(z));
    if (!det.is_rational()) throw std::domain_error("reduced norm is not rational: " + det.to_string());
    return det.rational_value();
}

Rational reduced_trace(const AlgElement& z) {
    const NFElement tr = regular_rep(z).trace();
    if (!tr.is_rational()) throw std::domain_error("reduced trace is not rational: " + tr.to_string());
    return tr.rational_value();
}

UniPoly reduced_char_poly(const AlgElement& z) {
    const KPoly chi = char_poly(regular_rep(z));
    auto q = chi.to_rational();
    if (!q) throw std::domain_error("reduced characteristic polynomial is not rational: " + chi.to_string());
    return *q;
}

DivisionResult is_division(const AlgebraPtr& alg, unsigned height_bound) {
    const auto d = static_cast<long>(alg->degree());
    const FieldPtr& field = alg->field();
    if (d == 1) return {Decision::no, NFElement::from_rational(field, alg->a()), 1, "degree one"};
    if (d == 2) {
        const InvariantVector inv = quaternion_invariants(*alg);
        if (!inv.empty()) return {Decision::yes, std::nullopt, 0, "quaternion invariants " + inv.to_string()};
        NormResult nr = is_galois_norm(field, alg->a(), height_bound);
        return {Decision::no, nr.witness, 1, "quaternion invariants {}"};
    }
    for (long i = 1; i < d; ++i) {
        if (d % i != 0) continue;
        NormResult nr = is_galois_norm(field, pow(alg->a(), i), height_bound);
        if (nr.decision == Decision::yes) {
            return {Decision::no, nr.witness, i, "a^" + std::to_string(i) + " is a norm (" + nr.method + ")"};
        }
        if (nr.decision == Decision::no) continue;
    }
    return {Decision::unknown, std::nullopt, 0, "no norm witness up to height " + std::to_string(height_bound)};
}

}  // namespace divalg
