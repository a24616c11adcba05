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

#include "divalg/verify/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace divalg::oracle {

TypeFlags flags_from_definitions(const std::vector<int>& lengths) {
    TypeFlags f;
    const int d = std::accumulate(lengths.begin(), lengths.end(), 0);
    const int lo = *std::min_element(lengths.begin(), lengths.end());
    const int hi = *std::max_element(lengths.begin(), lengths.end());
    const auto m = lengths.size();
    f.unique_smallest = m > 1 && std::count(lengths.begin(), lengths.end(), lo) == 1;
    for (int k : lengths) f.big = f.big || (2 * k > d && k < d);
    for (std::size_t i = 0; i < m; ++i) {
        bool reachable = false;
        // Nonempty subsets of the other cycles.
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m) && !reachable; ++mask) {
            if (mask & (std::uint64_t{1} << i)) continue;
            int sum = 0;
            for (std::size_t j = 0; j < m; ++j) {
                if (mask & (std::uint64_t{1} << j)) sum += lengths[j];
            }
            reachable = sum == lengths[i];
        }
        if (reachable) continue;
        if (lengths[i] == hi && d % hi == 0) continue;
        f.lonely = true;
    }
    return f;
}

bool satisfies(const TypeFlags& f, CensusPredicate p) {
    switch (p) {
        case CensusPredicate::lonely:
            return f.lonely;
        case CensusPredicate::big:
            return f.big;
        case CensusPredicate::unique_smallest:
            return f.unique_smallest;
        case CensusPredicate::any_exclusion:
            return f.lonely || f.big || f.unique_smallest;
    }
    return false;
}

Integer brute_force_census(int d, CensusPredicate p) {
    if (d < 1 || d > 10) throw std::out_of_range("brute force census supports 1 <= d <= 10");
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    Integer count = 0;
    std::vector<char> seen(perm.size());
    std::vector<int> lengths;
    do {
        std::fill(seen.begin(), seen.end(), 0);
        lengths.clear();
        for (std::size_t s = 0; s < perm.size(); ++s) {
            if (seen[s]) continue;
            int len = 0;
            for (std::size_t i = s; !seen[i]; i = static_cast<std::size_t>(perm[i])) {
                seen[i] = 1;
                ++len;
            }
            lengths.push_back(len);
        }
        if (satisfies(flags_from_definitions(lengths), p)) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

// ---------------------------------------------------------------- Hilbert symbols

namespace {

// Integer in the square class of q with p-adic valuation 0 or 1.
Integer reduced_rep(const Rational& q, const Integer& p) {
    Integer n = q.get_num() * q.get_den();
    const Integer p2 = p * p;
    while (mpz_divisible_p(n.get_mpz_t(), p2.get_mpz_t())) mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p2.get_mpz_t());
    return n;
}

}  // namespace

int hilbert_by_solvability(const Rational& a, const Rational& b, const Integer& p) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert oracle: zero argument");
    const unsigned k = (p == 2) ? 7 : 2;
    Integer modulus_z;
    mpz_pow_ui(modulus_z.get_mpz_t(), p.get_mpz_t(), k);
    const auto modulus = modulus_z.get_ui();
    const auto pp = p.get_ui();
    auto residue = [&](const Integer& n) {
        Integer r;
        mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), modulus_z.get_mpz_t());
        return r.get_ui();
    };
    const unsigned long A = residue(reduced_rep(a, p));
    const unsigned long B = residue(reduced_rep(b, p));

    std::vector<char> square(modulus, 0), unit_square(modulus, 0);
    for (unsigned long z = 0; z < modulus; ++z) {
        const unsigned long s = (z * z) % modulus;
        square[s] = 1;
        if (z % pp != 0) unit_square[s] = 1;
    }
    for (unsigned long x = 0; x < modulus; ++x) {
        const unsigned long ax2 = (A * ((x * x) % modulus)) % modulus;
        for (unsigned long y = 0; y < modulus; ++y) {
            const unsigned long v = (ax2 + B * ((y * y) % modulus)) % modulus;
            const bool xy_divisible = x % pp == 0 && y % pp == 0;
            if (xy_divisible ? unit_square[v] : square[v]) return 1;
        }
    }
    return -1;
}

int hilbert_at_infinity(const Rational& a, const Rational& b) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert oracle: zero argument");
    // A real point exists iff some nonzero (x, y) makes a x^2 + b y^2 >= 0.
    for (const auto& [x, y] : {std::pair{1, 0}, std::pair{0, 1}}) {
        if (a * x * x + b * y * y >= 0) return 1;
    }
    return -1;
}

// ---------------------------------------------------------------- determinants

NFElement leibniz_det(const MatrixNF& m) {
    const std::size_t n = m.n();
    if (n > 8) throw std::out_of_range("leibniz_det supports n <= 8");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    NFElement total = NFElement::zero(m.field());
    do {
        NFElement term = NFElement::one(m.field());
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m.at(i, perm[i]);
        if (term.is_zero()) continue;
        std::size_t inversions = 0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j] ? 1 : 0;
        }
        if (inversions % 2) {
            total -= term;
        } else {
            total += term;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

NFElement char_poly_at(const MatrixNF& m, const NFElement& t0) {
    MatrixNF shifted = MatrixNF::identity(m.field(), m.n()) * t0 - m;
    return leibniz_det(shifted);
}

Rational norm_by_multiplication_matrix(const NFElement& b) {
    const FieldPtr& field = b.field();
    const std::size_t d = field->degree();
    std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d));
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rational> basis(d, Rational(0));
        basis[j] = 1;
        const auto col = field->multiply(b.coeffs(), basis);
        for (std::size_t i = 0; i < d; ++i) a[i][j] = i < col.size() ? col[i] : Rational(0);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < d; ++c) {
        std::size_t piv = c;
        while (piv < d && a[piv][c] == 0) ++piv;
        if (piv == d) return 0;
        if (piv != c) {
            std::swap(a[piv], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < d; ++r) {
            if (a[r][c] == 0) continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < d; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

// ---------------------------------------------------------------- random inputs

Rational random_rational(std::mt19937_64& rng, long max_num, long max_den) {
    std::uniform_int_distribution<long> num(-max_num, max_num);
    std::uniform_int_distribution<long> den(1, max_den);
    return make_rational(Integer(num(rng)), Integer(den(rng)));
}

Rational random_nonzero_rational(std::mt19937_64& rng, long max_num, long max_den) {
    for (;;) {
        Rational q = random_rational(rng, max_num, max_den);
        if (q != 0) return q;
    }
}

NFElement random_element(const FieldPtr& field, std::mt19937_64& rng, long max_num, long max_den) {
    std::vector<Rational> c(field->degree());
    for (auto& q : c) q = random_rational(rng, max_num, max_den);
    return NFElement(field, std::move(c));
}

AlgElement random_alg_element(const AlgebraPtr& alg, std::mt19937_64& rng, long max_num, long max_den) {
    std::vector<NFElement> c;
    for (std::size_t i = 0; i < alg->degree(); ++i) c.push_back(random_element(alg->field(), rng, max_num, max_den));
    return AlgElement(alg, std::move(c));
}

}  // namespace divalg::oracle
