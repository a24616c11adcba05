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

#include "divalg/matrixnf.hpp"

#include <sstream>
#include <stdexcept>

namespace divalg {

// ---------------------------------------------------------------- KPoly

KPoly::KPoly(FieldPtr field, std::vector<NFElement> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) require_same_field(*field_, *c.field());
    normalize();
}

KPoly KPoly::from_rational(const FieldPtr& field, const UniPoly& p) {
    std::vector<NFElement> v;
    for (const auto& c : p.coeffs()) v.push_back(NFElement::from_rational(field, c));
    return KPoly(field, std::move(v));
}

void KPoly::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

NFElement KPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : NFElement::zero(field_); }

bool KPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == NFElement::one(field_); }

std::optional<UniPoly> KPoly::to_rational() const {
    std::vector<Rational> v;
    for (const auto& c : coeffs_) {
        if (!c.is_rational()) return std::nullopt;
        v.push_back(c.rational_value());
    }
    return UniPoly(std::move(v));
}

KPoly& KPoly::operator+=(const KPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(NFElement::zero(field_));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    normalize();
    return *this;
}

KPoly& KPoly::operator-=(const KPoly& rhs) {
    while (coeffs_.size() < rhs.coeffs_.size()) coeffs_.push_back(NFElement::zero(field_));
    for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    normalize();
    return *this;
}

KPoly& KPoly::operator*=(const KPoly& rhs) {
    if (is_zero() || rhs.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<NFElement> out(coeffs_.size() + rhs.coeffs_.size() - 1, NFElement::zero(field_));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

std::string KPoly::to_string() const {
    if (is_zero()) return "0";
    if (auto q = to_rational()) return q->to_string("T");
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].to_string() << ")";
        if (k > 0) os << "*T";
        if (k > 1) os << "^" << k;
    }
    return os.str();
}

std::pair<KPoly, KPoly> divmod(const KPoly& num, const KPoly& den) {
    if (den.is_zero()) throw std::domain_error("polynomial division by zero");
    const auto& field = num.field();
    if (num.degree() < den.degree()) return {KPoly(field), num};
    std::vector<NFElement> rem = num.coeffs();
    const auto& d = den.coeffs();
    const std::size_t dn = d.size() - 1;
    std::vector<NFElement> quot(rem.size() - dn, NFElement::zero(field));
    const NFElement inv_lc = d.back().inverse();
    for (std::size_t k = rem.size(); k-- > dn;) {
        if (rem[k].is_zero()) continue;
        NFElement q = rem[k] * inv_lc;
        for (std::size_t j = 0; j <= dn; ++j) rem[k - dn + j] -= q * d[j];
        quot[k - dn] = std::move(q);
    }
    rem.resize(dn, NFElement::zero(field));
    return {KPoly(field, std::move(quot)), KPoly(field, std::move(rem))};
}

// ---------------------------------------------------------------- MatrixNF

MatrixNF::MatrixNF(FieldPtr field, std::size_t n)
    : field_(std::move(field)), n_(n), entries_(n * n, NFElement::zero(field_)) {}

MatrixNF::MatrixNF(FieldPtr field, std::size_t n, std::vector<NFElement> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n) throw std::invalid_argument("matrix needs n*n entries");
    for (const auto& e : entries_) require_same_field(*field_, *e.field());
}

MatrixNF MatrixNF::identity(const FieldPtr& field, std::size_t n) {
    MatrixNF m(field, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = NFElement::one(field);
    return m;
}

MatrixNF MatrixNF::diagonal(const FieldPtr& field, const std::vector<NFElement>& diag) {
    MatrixNF m(field, diag.size());
    for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
    return m;
}

MatrixNF MatrixNF::block_diagonal(const std::vector<MatrixNF>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("block_diagonal needs at least one block");
    std::size_t n = 0;
    for (const auto& b : blocks) n += b.n();
    MatrixNF m(blocks.front().field(), n);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
        require_same_field(*m.field(), *b.field());
        for (std::size_t i = 0; i < b.n(); ++i) {
            for (std::size_t j = 0; j < b.n(); ++j) m.at(offset + i, offset + j) = b.at(i, j);
        }
        offset += b.n();
    }
    return m;
}

bool MatrixNF::is_zero() const {
    for (const auto& e : entries_) {
        if (!e.is_zero()) return false;
    }
    return true;
}

NFElement MatrixNF::trace() const {
    NFElement t = NFElement::zero(field_);
    for (std::size_t i = 0; i < n_; ++i) t += at(i, i);
    return t;
}

MatrixNF& MatrixNF::operator+=(const MatrixNF& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += rhs.entries_[k];
    return *this;
}

MatrixNF& MatrixNF::operator-=(const MatrixNF& rhs) {
    if (n_ != rhs.n_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= rhs.entries_[k];
    return *this;
}

MatrixNF& MatrixNF::operator*=(const NFElement& scalar) {
    for (auto& e : entries_) e *= scalar;
    return *this;
}

MatrixNF operator*(const MatrixNF& a, const MatrixNF& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("matrix dimension mismatch");
    require_same_field(*a.field_, *b.field_);
    MatrixNF out(a.field_, a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
        for (std::size_t k = 0; k < a.n_; ++k) {
            const NFElement& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < a.n_; ++j) {
                if (!b.at(k, j).is_zero()) out.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return out;
}

bool operator==(const MatrixNF& a, const MatrixNF& b) { return a.n_ == b.n_ && a.entries_ == b.entries_; }

MatrixNF MatrixNF::power(unsigned k) const {
    MatrixNF result = identity(field_, n_);
    MatrixNF base = *this;
    while (k > 0) {
        if (k & 1U) result = result * base;
        k >>= 1U;
        if (k > 0) base = base * base;
    }
    return result;
}

std::string MatrixNF::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < n_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < n_; ++j) os << (j ? ", " : "") << at(i, j).to_string();
        os << "]";
    }
    os << "]";
    return os.str();
}

// ---------------------------------------------------------------- elimination

NFElement determinant(const MatrixNF& m) {
    const std::size_t n = m.n();
    MatrixNF a = m;
    NFElement det = NFElement::one(m.field());
    for (std::size_t col = 0; col < n; ++col) {
        // Any nonzero pivot is exact; take the first one found in the remaining block.
        std::size_t prow = n, pcol = n;
        for (std::size_t c = col; c < n && prow == n; ++c) {
            for (std::size_t r = col; r < n; ++r) {
                if (!a.at(r, c).is_zero()) {
                    prow = r;
                    pcol = c;
                    break;
                }
            }
        }
        if (prow == n) return NFElement::zero(m.field());
        if (prow != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(prow, j), a.at(col, j));
            det = -det;
        }
        if (pcol != col) {
            for (std::size_t i = 0; i < n; ++i) std::swap(a.at(i, pcol), a.at(i, col));
            det = -det;
        }
        const NFElement pivot = a.at(col, col);
        det *= pivot;
        const NFElement inv = pivot.inverse();
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a.at(r, col).is_zero()) continue;
            NFElement f = a.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                if (!a.at(col, j).is_zero()) a.at(r, j) -= f * a.at(col, j);
            }
        }
    }
    return det;
}

std::optional<std::vector<NFElement>> solve(const MatrixNF& m, const std::vector<NFElement>& rhs) {
    const std::size_t n = m.n();
    if (rhs.size() != n) throw std::invalid_argument("solve: right-hand side has wrong length");
    MatrixNF a = m;
    std::vector<NFElement> b = rhs;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t prow = n;
        for (std::size_t r = col; r < n; ++r) {
            if (!a.at(r, col).is_zero()) {
                prow = r;
                break;
            }
        }
        if (prow == n) return std::nullopt;
        if (prow != col) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a.at(prow, j), a.at(col, j));
            std::swap(b[prow], b[col]);
        }
        const NFElement inv = a.at(col, col).inverse();
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a.at(r, col).is_zero()) continue;
            NFElement f = a.at(r, col) * inv;
            for (std::size_t j = col; j < n; ++j) {
                if (!a.at(col, j).is_zero()) a.at(r, j) -= f * a.at(col, j);
            }
            b[r] -= f * b[col];
        }
    }
    for (std::size_t i = 0; i < n; ++i) b[i] *= a.at(i, i).inverse();
    return b;
}

KPoly char_poly(const MatrixNF& m) {
    const std::size_t n = m.n();
    const FieldPtr& field = m.field();
    MatrixNF h = m;
    // Similarity transform to upper Hessenberg form.
    for (std::size_t k = 1; k + 1 < n; ++k) {
        std::size_t piv = n;
        for (std::size_t i = k; i < n; ++i) {
            if (!h.at(i, k - 1).is_zero()) {
                piv = i;
                break;
            }
        }
        if (piv == n) continue;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h.at(piv, j), h.at(k, j));
            for (std::size_t i = 0; i < n; ++i) std::swap(h.at(i, piv), h.at(i, k));
        }
        const NFElement inv = h.at(k, k - 1).inverse();
        for (std::size_t i = k + 1; i < n; ++i) {
            if (h.at(i, k - 1).is_zero()) continue;
            NFElement u = h.at(i, k - 1) * inv;
            for (std::size_t j = 0; j < n; ++j) {
                if (!h.at(k, j).is_zero()) h.at(i, j) -= u * h.at(k, j);
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (!h.at(j, i).is_zero()) h.at(j, k) += u * h.at(j, i);
            }
        }
    }
    // p_m = (T - h_mm) p_{m-1} - sum_{i<m} h_im (prod_{j=i+1}^{m} h_{j,j-1}) p_{i-1}, 1-based.
    const KPoly T(field, {NFElement::zero(field), NFElement::one(field)});
    std::vector<KPoly> p;
    p.emplace_back(field, std::vector<NFElement>{NFElement::one(field)});
    for (std::size_t mm = 1; mm <= n; ++mm) {
        KPoly next = (T - KPoly(field, {h.at(mm - 1, mm - 1)})) * p[mm - 1];
        NFElement prod = NFElement::one(field);
        for (std::size_t i = mm - 1; i >= 1; --i) {
            prod *= h.at(i, i - 1);  // h_{i+1,i} in 1-based terms
            if (prod.is_zero()) break;
            NFElement coef = h.at(i - 1, mm - 1) * prod;
            if (!coef.is_zero()) next -= KPoly(field, {coef}) * p[i - 1];
        }
        p.push_back(std::move(next));
    }
    return p[n];
}

KPoly min_poly(const MatrixNF& m) {
    const std::size_t n = m.n();
    const FieldPtr& field = m.field();
    struct Row {
        std::vector<NFElement> v;
        std::size_t pivot;
        std::vector<NFElement> combo;  // coefficients on I, M, M^2, ...
    };
    std::vector<Row> basis;
    MatrixNF power = MatrixNF::identity(field, n);
    for (std::size_t k = 0; k <= n; ++k) {
        std::vector<NFElement> v;
        v.reserve(n * n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) v.push_back(power.at(i, j));
        }
        std::vector<NFElement> combo(k + 1, NFElement::zero(field));
        combo[k] = NFElement::one(field);
        for (const auto& row : basis) {
            if (v[row.pivot].is_zero()) continue;
            NFElement f = v[row.pivot] * row.v[row.pivot].inverse();
            for (std::size_t t = 0; t < v.size(); ++t) {
                if (!row.v[t].is_zero()) v[t] -= f * row.v[t];
            }
            for (std::size_t t = 0; t < row.combo.size(); ++t) combo[t] -= f * row.combo[t];
        }
        std::size_t pivot = v.size();
        for (std::size_t t = 0; t < v.size(); ++t) {
            if (!v[t].is_zero()) {
                pivot = t;
                break;
            }
        }
        if (pivot == v.size()) return KPoly(field, std::move(combo));
        basis.push_back({std::move(v), pivot, std::move(combo)});
        power = power * m;
    }
    throw std::logic_error("min_poly: no dependency found up to degree n");
}

// ---------------------------------------------------------------- monomial matrices

std::optional<MonomialData> monomial_structure(const MatrixNF& m) {
    const std::size_t n = m.n();
    std::vector<int> images(n);
    std::vector<NFElement> scalars(n, NFElement::zero(m.field()));
    std::vector<int> row_hits(n, 0);
    for (std::size_t j = 0; j < n; ++j) {
        int found = -1;
        for (std::size_t i = 0; i < n; ++i) {
            if (m.at(i, j).is_zero()) continue;
            if (found >= 0) return std::nullopt;
            found = static_cast<int>(i);
        }
        if (found < 0) return std::nullopt;
        auto r = static_cast<std::size_t>(found);
        if (++row_hits[r] > 1) return std::nullopt;
        images[j] = found + 1;
        scalars[r] = m.at(r, j);
    }
    return MonomialData{Permutation(std::move(images)), std::move(scalars)};
}

MatrixNF from_monomial(const FieldPtr& field, const MonomialData& data) {
    const std::size_t n = data.perm.size();
    if (data.scalars.size() != n) throw std::invalid_argument("monomial data: scalar count mismatch");
    MatrixNF m(field, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto r = static_cast<std::size_t>(data.perm(static_cast<int>(j + 1)) - 1);
        m.at(r, j) = data.scalars[r];
    }
    return m;
}

MatrixNF build_cycle_matrix(const FieldPtr& field, const std::vector<NFElement>& entries) {
    const std::size_t k = entries.size();
    if (k == 0) throw std::invalid_argument("cycle matrix needs at least one entry");
    for (const auto& e : entries) {
        if (e.is_zero()) throw std::invalid_argument("cycle matrix entries must be nonzero");
    }
    MatrixNF m(field, k);
    if (k == 1) {
        m.at(0, 0) = entries[0];
        return m;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) m.at(i, i + 1) = entries[i];
    m.at(k - 1, 0) = entries[k - 1];
    return m;
}

}  // namespace divalg
