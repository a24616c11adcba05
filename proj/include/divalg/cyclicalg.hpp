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

/**
 * @file cyclicalg.hpp
 * @brief Cyclic algebras (K/Q, sigma, a) and their left regular representation.
 *
 * Elements are written z = sum_i x^i b_i with b_i in K. The relations are
 * x^d = a and b x = x sigma(b), so that
 *
 *     (x^i b)(x^j c) = x^{(i+j) mod d} a^{floor((i+j)/d)} sigma^j(b) c.
 *
 * D is a right K-vector space on the basis 1, x, ..., x^{d-1}. Left
 * multiplication by z is K-linear and its matrix (column j = coefficients
 * of z x^j) is the regular representation used for reduced norms.
 */

#ifndef DIVALG_CYCLICALG_HPP
#define DIVALG_CYCLICALG_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divalg/matrixnf.hpp"
#include "divalg/numberfield.hpp"

namespace divalg {

class CyclicAlgebra;
using AlgebraPtr = std::shared_ptr<const CyclicAlgebra>;

class CyclicAlgebra {
    struct Token {};

   public:
    /// Throws std::invalid_argument when a == 0.
    static AlgebraPtr create(FieldPtr field, Rational a);

    CyclicAlgebra(Token, FieldPtr field, Rational a);

    const FieldPtr& field() const { return field_; }
    std::size_t degree() const { return field_->degree(); }
    const Rational& a() const { return a_; }
    std::string description() const;

   private:
    FieldPtr field_;
    Rational a_;
};

class AlgElement {
   public:
    /// coeffs[i] is b_i in z = sum x^i b_i; shorter vectors are zero-padded.
    AlgElement(AlgebraPtr alg, std::vector<NFElement> coeffs);

    static AlgElement zero(const AlgebraPtr& alg);
    static AlgElement one(const AlgebraPtr& alg);
    /// x^i b, with i taken mod d and the factor a^{floor(i/d)} absorbed.
    static AlgElement monomial(const AlgebraPtr& alg, long i, const NFElement& b);
    static AlgElement x_power(const AlgebraPtr& alg, long i);
    static AlgElement from_field(const AlgebraPtr& alg, const NFElement& b);

    const AlgebraPtr& algebra() const { return alg_; }
    const std::vector<NFElement>& coeffs() const { return coeffs_; }
    const NFElement& coeff(std::size_t i) const { return coeffs_.at(i); }
    bool is_zero() const;
    /// Number of nonzero b_i.
    std::size_t support_size() const;

    AlgElement operator-() const;
    AlgElement& operator+=(const AlgElement& rhs);
    AlgElement& operator-=(const AlgElement& rhs);
    friend AlgElement operator+(AlgElement a, const AlgElement& b) { return a += b; }
    friend AlgElement operator-(AlgElement a, const AlgElement& b) { return a -= b; }
    friend AlgElement operator*(const AlgElement& a, const AlgElement& b);
    friend bool operator==(const AlgElement& a, const AlgElement& b);

    /// Solves z w = 1 through the regular representation.
    /// Throws std::domain_error for zero or for a zero divisor.
    AlgElement inverse() const;

    std::string to_string() const;

   private:
    AlgebraPtr alg_;
    std::vector<NFElement> coeffs_;
};

void require_same_algebra(const CyclicAlgebra& a, const CyclicAlgebra& b);

MatrixNF regular_rep(const AlgElement& z);

/// det / trace / char poly of the regular representation. Each throws
/// std::domain_error if the value is not rational.
Rational reduced_norm(const AlgElement& z);
Rational reduced_trace(const AlgElement& z);
UniPoly reduced_char_poly(const AlgElement& z);

struct DivisionResult {
    Decision decision = Decision::unknown;
    /// For a no: b with N(b) = a^power, splitting the algebra.
    std::optional<NFElement> witness;
    long power = 0;
    std::string method;
};

/// d == 2 is decided by quaternion invariants. Otherwise a^i in N(K^x) for
/// some proper divisor i of d gives a no; d prime with every search failing
/// stays unknown. a^d = N(a) is always a norm, so a^i is a norm iff a^gcd(i,d)
/// is, and proper divisors cover every 1 <= i < d.
DivisionResult is_division(const AlgebraPtr& alg, unsigned height_bound);

}  // namespace divalg

#endif  // DIVALG_CYCLICALG_HPP
