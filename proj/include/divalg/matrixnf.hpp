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
 * @file matrixnf.hpp
 * @brief Exact square matrices over a NumberField and polynomials over K.
 *
 * Everything here is exact: determinants by Gaussian elimination, the
 * characteristic polynomial by reduction to Hessenberg form, and the minimal
 * polynomial by a linear-dependency search over I, M, M^2, ...
 *
 * Monomial matrices factor as M = diag(s) * P, where P e_j = e_{perm(j)}.
 * The nonzero entry of column j therefore sits in row perm(j) and equals
 * s[perm(j)].
 */

#ifndef DIVALG_MATRIXNF_HPP
#define DIVALG_MATRIXNF_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divalg/numberfield.hpp"
#include "divalg/permcycle.hpp"
#include "divalg/polynomial.hpp"

namespace divalg {

/// Polynomial with coefficients in K, ascending degree, trailing zeros stripped.
class KPoly {
   public:
    explicit KPoly(FieldPtr field, std::vector<NFElement> coeffs = {});
    static KPoly from_rational(const FieldPtr& field, const UniPoly& p);

    const FieldPtr& field() const { return field_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<NFElement>& coeffs() const { return coeffs_; }
    NFElement coeff(std::size_t k) const;
    bool is_monic() const;

    /// The same polynomial over Q if every coefficient is rational.
    std::optional<UniPoly> to_rational() const;

    KPoly& operator+=(const KPoly& rhs);
    KPoly& operator-=(const KPoly& rhs);
    KPoly& operator*=(const KPoly& rhs);
    friend KPoly operator+(KPoly a, const KPoly& b) { return a += b; }
    friend KPoly operator-(KPoly a, const KPoly& b) { return a -= b; }
    friend KPoly operator*(KPoly a, const KPoly& b) { return a *= b; }
    friend bool operator==(const KPoly& a, const KPoly& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const;

   private:
    void normalize();
    FieldPtr field_;
    std::vector<NFElement> coeffs_;
};

std::pair<KPoly, KPoly> divmod(const KPoly& num, const KPoly& den);

class MatrixNF {
   public:
    /// Zero matrix.
    MatrixNF(FieldPtr field, std::size_t n);
    /// Row-major entries, n*n of them.
    MatrixNF(FieldPtr field, std::size_t n, std::vector<NFElement> entries);

    static MatrixNF identity(const FieldPtr& field, std::size_t n);
    static MatrixNF diagonal(const FieldPtr& field, const std::vector<NFElement>& diag);
    static MatrixNF block_diagonal(const std::vector<MatrixNF>& blocks);

    const FieldPtr& field() const { return field_; }
    std::size_t n() const { return n_; }
    const NFElement& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }
    NFElement& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }

    bool is_zero() const;
    NFElement trace() const;

    MatrixNF& operator+=(const MatrixNF& rhs);
    MatrixNF& operator-=(const MatrixNF& rhs);
    MatrixNF& operator*=(const NFElement& scalar);
    friend MatrixNF operator+(MatrixNF a, const MatrixNF& b) { return a += b; }
    friend MatrixNF operator-(MatrixNF a, const MatrixNF& b) { return a -= b; }
    friend MatrixNF operator*(MatrixNF a, const NFElement& s) { return a *= s; }
    friend MatrixNF operator*(const MatrixNF& a, const MatrixNF& b);
    friend bool operator==(const MatrixNF& a, const MatrixNF& b);

    MatrixNF power(unsigned k) const;

    std::string to_string() const;

   private:
    FieldPtr field_;
    std::size_t n_;
    std::vector<NFElement> entries_;
};

NFElement determinant(const MatrixNF& m);

/// Solves m * x = rhs; nullopt if m is singular.
std::optional<std::vector<NFElement>> solve(const MatrixNF& m, const std::vector<NFElement>& rhs);

/// det(tI - M), monic of degree n, via Hessenberg reduction.
KPoly char_poly(const MatrixNF& m);

/// Least-degree monic polynomial annihilating M.
KPoly min_poly(const MatrixNF& m);

struct MonomialData {
    Permutation perm;
    std::vector<NFElement> scalars;
};

std::optional<MonomialData> monomial_structure(const MatrixNF& m);
MatrixNF from_monomial(const FieldPtr& field, const MonomialData& data);

/// k x k matrix with a_1..a_{k-1} on the superdiagonal and a_k in the
/// lower-left corner (a single [a_1] for k == 1). Throws on a zero entry.
MatrixNF build_cycle_matrix(const FieldPtr& field, const std::vector<NFElement>& entries);

}  // namespace divalg

#endif  // DIVALG_MATRIXNF_HPP
