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
 * @file numberfield.hpp
 * @brief Cyclic Galois number fields K|Q with an explicit Galois generator.
 *
 * A field is Q[t]/(f) for a monic irreducible f of degree d together with
 * the image sigma(t) of the generator under a Galois automorphism sigma of
 * exact order d. Elements are residue representatives of degree < d.
 *
 * Three families are supported:
 * - quadratic(m):        f = t^2 - m,             sigma(t) = -t
 * - cyclotomic_prime(p): f = t^{p-1} + ... + 1,   sigma(t) = t^r, r the smallest primitive root mod p
 * - custom(f, s):        any data passing the root-preservation, order and irreducibility checks
 *
 * Irreducibility of f is certified by exhibiting a prime p for which f mod p
 * is irreducible over F_p (Rabin's test). Reducible f never has such a prime.
 */

#ifndef DIVALG_NUMBERFIELD_HPP
#define DIVALG_NUMBERFIELD_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "divalg/polynomial.hpp"
#include "divalg/rational.hpp"

namespace divalg {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

enum class FieldKind { quadratic, cyclotomic_prime, custom };

class NumberField {
    struct Token {};

   public:
    static FieldPtr quadratic(const Integer& m);
    static FieldPtr cyclotomic_prime(long p);
    static FieldPtr custom(const UniPoly& defining_poly, const UniPoly& sigma_image,
                           const std::string& generator_name = "t");

    NumberField(Token, FieldKind kind, Integer parameter, UniPoly defining_poly, UniPoly sigma_image,
                std::string generator_name);

    FieldKind kind() const { return kind_; }
    std::size_t degree() const { return degree_; }
    const UniPoly& defining_poly() const { return defining_poly_; }
    const UniPoly& sigma_image() const { return sigma_image_; }
    /// m for quadratic fields, p for cyclotomic ones, 0 for custom data.
    const Integer& parameter() const { return parameter_; }
    const std::string& generator_name() const { return generator_name_; }
    /// Prime p with f irreducible mod p (0 when d == 1).
    std::int64_t irreducibility_prime() const { return irreducibility_prime_; }
    std::string description() const;

    /// For d == 2: the squarefree m with K = Q(sqrt(m)).
    std::optional<Integer> quadratic_radicand() const;

    bool same_as(const NumberField& other) const;

    /// Reduce an arbitrary-length coefficient vector modulo f.
    std::vector<Rational> reduce(std::vector<Rational> coeffs) const;
    std::vector<Rational> multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const;
    /// Coefficients of sigma^k(a), k already reduced to [0, d).
    std::vector<Rational> apply_sigma_power(std::size_t k, const std::vector<Rational>& a) const;

   private:
    void precompute();

    FieldKind kind_;
    Integer parameter_;
    UniPoly defining_poly_;
    UniPoly sigma_image_;
    std::string generator_name_;
    std::size_t degree_ = 0;
    std::int64_t irreducibility_prime_ = 0;
    // t^k mod f for k in [d, 2d - 2], row k - d.
    std::vector<std::vector<Rational>> high_powers_;
    // sigma_matrices_[k][row * d + col]: column col holds sigma^k(t^col).
    std::vector<std::vector<Rational>> sigma_matrices_;
};

/// Element of a NumberField as a residue of degree < d.
class NFElement {
   public:
    /// Longer coefficient vectors are reduced mod f, shorter ones zero-padded.
    NFElement(FieldPtr field, std::vector<Rational> coeffs);

    static NFElement zero(const FieldPtr& field);
    static NFElement one(const FieldPtr& field);
    static NFElement generator(const FieldPtr& field);
    static NFElement from_rational(const FieldPtr& field, const Rational& q);

    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    std::size_t degree() const { return coeffs_.size(); }

    bool is_zero() const;
    bool is_rational() const;
    /// Throws std::domain_error unless is_rational().
    Rational rational_value() const;
    Integer height() const;

    NFElement operator-() const;
    NFElement& operator+=(const NFElement& rhs);
    NFElement& operator-=(const NFElement& rhs);
    NFElement& operator*=(const NFElement& rhs);
    NFElement& operator*=(const Rational& rhs);

    friend NFElement operator+(NFElement lhs, const NFElement& rhs) { return lhs += rhs; }
    friend NFElement operator-(NFElement lhs, const NFElement& rhs) { return lhs -= rhs; }
    friend NFElement operator*(NFElement lhs, const NFElement& rhs) { return lhs *= rhs; }
    friend NFElement operator*(NFElement lhs, const Rational& rhs) { return lhs *= rhs; }
    friend bool operator==(const NFElement& lhs, const NFElement& rhs);

    /// Inverse via the extended gcd of the representative with f.
    NFElement inverse() const;

    std::string to_string() const;

   private:
    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// Throws std::invalid_argument unless both belong to the same field.
void require_same_field(const NumberField& a, const NumberField& b);

/// sigma^k(a), k taken mod d (negative k allowed).
NFElement apply_automorphism(const NFElement& a, long k);

struct NormTrace {
    Rational norm;
    Rational trace;
};

/// Product and sum of the Galois conjugates. Throws std::domain_error when
/// either is not rational, which signals an inconsistent Galois datum.
NormTrace field_norm_trace(const NFElement& a);
Rational field_norm(const NFElement& a);
Rational field_trace(const NFElement& a);

/// N(a) as the resultant Res(f, a(t)); independent of the sigma data.
Rational norm_by_resultant(const NFElement& a);

enum class Decision { yes, no, unknown };
std::string to_string(Decision d);

struct NormResult {
    Decision decision = Decision::unknown;
    std::optional<NFElement> witness;
    std::string method;
};

/// Decides whether c lies in N(K^x). Quadratic fields are decided exactly by
/// Hilbert symbols and a witness is searched for afterwards; for d > 2 a
/// bounded-height search answers yes or unknown, never no.
NormResult is_galois_norm(const FieldPtr& field, const Rational& c, unsigned height_bound);

/// Visits nonzero elements whose coefficients all have height <= bound, in
/// shells of increasing height and lexicographic order inside each shell.
/// The visitor returns false to stop early.
void for_each_element_by_height(const FieldPtr& field, unsigned bound,
                                const std::function<bool(const NFElement&)>& visit);

/// Same enumeration over `slots` rational coordinates.
void for_each_tuple_by_height(std::size_t slots, unsigned bound,
                              const std::function<bool(const std::vector<Rational>&)>& visit);

std::optional<Rational> rational_sqrt(const Rational& q);

}  // namespace divalg

#endif  // DIVALG_NUMBERFIELD_HPP
