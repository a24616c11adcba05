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

#include "divalg/numberfield.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "divalg/arith.hpp"
#include "divalg/brauer.hpp"

namespace divalg {

namespace {

constexpr std::int64_t kIrreducibilityPrimeBound = 5000;
constexpr unsigned kConicSearchHeight = 400;
constexpr std::int64_t kSplitPrimeFloor = 1000;
constexpr std::int64_t kSplitPrimeWindow = 200000;

// ---- polynomials over F_p, ascending coefficients

using PolyFp = std::vector<std::uint64_t>;

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PolyFp mod_fp(PolyFp a, const PolyFp& f, std::uint64_t p) {
    trim(a);
    const std::size_t n = f.size() - 1;  // f monic
    while (a.size() > n) {
        std::uint64_t c = a.back();
        std::size_t shift = a.size() - 1 - n;
        for (std::size_t j = 0; j <= n; ++j) a[shift + j] = (a[shift + j] + (p - c) * f[j]) % p;
        trim(a);
    }
    return a;
}

PolyFp mulmod_fp(const PolyFp& a, const PolyFp& b, const PolyFp& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + a[i] * b[j]) % p;
    }
    return mod_fp(std::move(out), f, p);
}

PolyFp powmod_fp(PolyFp base, std::uint64_t e, const PolyFp& f, std::uint64_t p) {
    PolyFp result{1};
    result = mod_fp(result, f, p);
    while (e > 0) {
        if (e & 1U) result = mulmod_fp(result, base, f, p);
        base = mulmod_fp(base, base, f, p);
        e >>= 1U;
    }
    return result;
}

PolyFp gcd_fp(PolyFp a, PolyFp b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b with b made monic
        std::uint64_t inv = powmod(b.back(), p - 2, p);
        PolyFp bm = b;
        for (auto& c : bm) c = c * inv % p;
        a = mod_fp(a, bm, p);
        std::swap(a, b);
    }
    return a;
}

// Rabin: f of degree n is irreducible over F_p iff t^{p^n} = t mod f and
// gcd(t^{p^{n/q}} - t, f) = 1 for every prime q | n.
bool irreducible_mod_p(const PolyFp& f, std::uint64_t p) {
    const std::size_t n = f.size() - 1;
    std::vector<PolyFp> frob(n + 1);  // frob[i] = t^{p^i} mod f
    frob[0] = mod_fp(PolyFp{0, 1}, f, p);
    for (std::size_t i = 1; i <= n; ++i) frob[i] = powmod_fp(frob[i - 1], p, f, p);
    auto minus_t = [&](PolyFp a) {
        if (a.size() < 2) a.resize(2, 0);
        a[1] = (a[1] + p - 1) % p;
        trim(a);
        return a;
    };
    if (!minus_t(frob[n]).empty()) return false;
    for (const auto& [q, e] : factor(Integer(static_cast<unsigned long>(n)))) {
        auto g = gcd_fp(minus_t(frob[n / q.get_ui()]), f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::int64_t find_irreducibility_prime(const UniPoly& f) {
    Integer den_lcm = 1;
    for (const auto& c : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto p : primes_below(kIrreducibilityPrimeBound)) {
        if (mpz_divisible_ui_p(den_lcm.get_mpz_t(), static_cast<unsigned long>(p)) != 0) continue;
        PolyFp fp;
        Integer P(static_cast<long>(p));
        for (const auto& c : f.coeffs()) {
            Integer inv_den;
            mpz_invert(inv_den.get_mpz_t(), c.get_den_mpz_t(), P.get_mpz_t());
            Integer r = c.get_num() * inv_den;
            mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
            fp.push_back(r.get_ui());
        }
        if (irreducible_mod_p(fp, static_cast<std::uint64_t>(p))) return p;
    }
    return 0;
}

std::string field_name(FieldKind kind, const Integer& parameter, const UniPoly& f, const UniPoly& s,
                       const std::string& var) {
    std::ostringstream os;
    switch (kind) {
        case FieldKind::quadratic:
            os << "Q(sqrt(" << parameter.get_str() << "))";
            break;
        case FieldKind::cyclotomic_prime:
            os << "Q(zeta_" << parameter.get_str() << ")";
            break;
        case FieldKind::custom:
            os << "Q[" << var << "]/(" << f.to_string(var) << ")";
            break;
    }
    os << ", sigma(" << var << ") = " << s.to_string(var);
    return os.str();
}

}  // namespace

// ---------------------------------------------------------------- NumberField

NumberField::NumberField(Token, FieldKind kind, Integer parameter, UniPoly defining_poly, UniPoly sigma_image,
                         std::string generator_name)
    : kind_(kind),
      parameter_(std::move(parameter)),
      defining_poly_(std::move(defining_poly)),
      sigma_image_(std::move(sigma_image)),
      generator_name_(std::move(generator_name)) {
    if (defining_poly_.degree() < 1) throw std::invalid_argument("defining polynomial must have degree >= 1");
    if (!defining_poly_.is_monic()) throw std::invalid_argument("defining polynomial must be monic");
    degree_ = static_cast<std::size_t>(defining_poly_.degree());
    sigma_image_ = divmod(sigma_image_, defining_poly_).second;

    if (degree_ > 1) {
        irreducibility_prime_ = find_irreducibility_prime(defining_poly_);
        if (irreducibility_prime_ == 0) {
            throw std::invalid_argument("defining polynomial " + defining_poly_.to_string() +
                                        " has no irreducibility certificate mod p < " +
                                        std::to_string(kIrreducibilityPrimeBound));
        }
    }
    if (!compose_mod(defining_poly_, sigma_image_, defining_poly_).is_zero()) {
        throw std::invalid_argument("sigma image " + sigma_image_.to_string() + " is not a root of " +
                                    defining_poly_.to_string());
    }
    const UniPoly t = UniPoly::monomial(1, 1);
    const UniPoly t_red = divmod(t, defining_poly_).second;
    UniPoly power = t_red;
    for (std::size_t k = 1; k <= degree_; ++k) {
        power = compose_mod(power, sigma_image_, defining_poly_);
        bool identity = power == t_red;
        if (k < degree_ && identity) {
            throw std::invalid_argument("sigma has order " + std::to_string(k) + " < degree " +
                                        std::to_string(degree_));
        }
        if (k == degree_ && !identity) throw std::invalid_argument("sigma^d is not the identity");
    }
    precompute();
}

FieldPtr NumberField::quadratic(const Integer& m) {
    if (m == 0 || m == 1) throw std::invalid_argument("quadratic field: m must not be 0 or 1");
    if (!is_squarefree(m)) throw std::invalid_argument("quadratic field: m = " + m.get_str() + " is not squarefree");
    UniPoly f(std::vector<Rational>{Rational(-m), Rational(0), Rational(1)});
    UniPoly s(std::vector<Rational>{Rational(0), Rational(-1)});
    std::string var = m == -1 ? "i" : "r";
    return std::make_shared<const NumberField>(Token{}, FieldKind::quadratic, m, std::move(f), std::move(s), var);
}

FieldPtr NumberField::cyclotomic_prime(long p) {
    if (p < 3 || !is_prime(static_cast<std::int64_t>(p))) {
        throw std::invalid_argument("cyclotomic field: p = " + std::to_string(p) + " is not an odd prime");
    }
    std::vector<Rational> f(static_cast<std::size_t>(p), Rational(1));
    auto r = smallest_primitive_root(p);
    UniPoly s = UniPoly::monomial(1, static_cast<std::size_t>(r));
    return std::make_shared<const NumberField>(Token{}, FieldKind::cyclotomic_prime, Integer(p), UniPoly(std::move(f)),
                                               std::move(s), "z");
}

FieldPtr NumberField::custom(const UniPoly& defining_poly, const UniPoly& sigma_image,
                             const std::string& generator_name) {
    return std::make_shared<const NumberField>(Token{}, FieldKind::custom, Integer(0), defining_poly, sigma_image,
                                               generator_name);
}

void NumberField::precompute() {
    const std::size_t d = degree_;
    const auto& f = defining_poly_.coeffs();
    // t^d = -(f_0 + ... + f_{d-1} t^{d-1})
    high_powers_.clear();
    if (d >= 2) {
        std::vector<Rational> cur(d);
        for (std::size_t j = 0; j < d; ++j) cur[j] = -f[j];
        high_powers_.push_back(cur);
        for (std::size_t k = d + 1; k <= 2 * d - 2; ++k) {
            std::vector<Rational> next(d);
            const Rational top = cur[d - 1];
            for (std::size_t j = d - 1; j > 0; --j) next[j] = cur[j - 1];
            next[0] = 0;
            if (top != 0) {
                for (std::size_t j = 0; j < d; ++j) next[j] -= top * f[j];
            }
            high_powers_.push_back(next);
            cur = std::move(next);
        }
    }
    sigma_matrices_.assign(d, std::vector<Rational>(d * d));
    UniPoly image = divmod(UniPoly::monomial(1, 1), defining_poly_).second;  // sigma^k(t)
    for (std::size_t k = 0; k < d; ++k) {
        UniPoly col_poly = UniPoly::constant(1);
        for (std::size_t col = 0; col < d; ++col) {
            for (std::size_t row = 0; row < d; ++row) sigma_matrices_[k][row * d + col] = col_poly.coeff(row);
            col_poly = divmod(col_poly * image, defining_poly_).second;
        }
        image = compose_mod(image, sigma_image_, defining_poly_);
    }
}

std::string NumberField::description() const {
    return field_name(kind_, parameter_, defining_poly_, sigma_image_, generator_name_);
}

std::optional<Integer> NumberField::quadratic_radicand() const {
    if (degree_ != 2) return std::nullopt;
    if (kind_ == FieldKind::quadratic) return parameter_;
    const Rational b = defining_poly_.coeff(1);
    const Rational c = defining_poly_.coeff(0);
    Rational disc = b * b - 4 * c;
    return squarefree_part(disc.get_num() * disc.get_den());
}

bool NumberField::same_as(const NumberField& other) const {
    if (this == &other) return true;
    return defining_poly_ == other.defining_poly_ && sigma_image_ == other.sigma_image_;
}

std::vector<Rational> NumberField::reduce(std::vector<Rational> coeffs) const {
    const std::size_t d = degree_;
    if (coeffs.size() <= d) {
        coeffs.resize(d);
        return coeffs;
    }
    if (coeffs.size() <= 2 * d - 1) {
        std::vector<Rational> out(coeffs.begin(), coeffs.begin() + static_cast<std::ptrdiff_t>(d));
        for (std::size_t k = d; k < coeffs.size(); ++k) {
            if (coeffs[k] == 0) continue;
            const auto& row = high_powers_[k - d];
            for (std::size_t j = 0; j < d; ++j) out[j] += coeffs[k] * row[j];
        }
        return out;
    }
    auto r = divmod(UniPoly(std::move(coeffs)), defining_poly_).second.coeffs();
    r.resize(d);
    return r;
}

std::vector<Rational> NumberField::multiply(const std::vector<Rational>& a, const std::vector<Rational>& b) const {
    const std::size_t d = degree_;
    std::vector<Rational> prod(2 * d - 1);
    for (std::size_t i = 0; i < d; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (b[j] == 0) continue;
            prod[i + j] += a[i] * b[j];
        }
    }
    return reduce(std::move(prod));
}

std::vector<Rational> NumberField::apply_sigma_power(std::size_t k, const std::vector<Rational>& a) const {
    const std::size_t d = degree_;
    if (k == 0) return a;
    const auto& m = sigma_matrices_[k];
    std::vector<Rational> out(d);
    for (std::size_t col = 0; col < d; ++col) {
        if (a[col] == 0) continue;
        for (std::size_t row = 0; row < d; ++row) {
            const Rational& e = m[row * d + col];
            if (e != 0) out[row] += e * a[col];
        }
    }
    return out;
}

void require_same_field(const NumberField& a, const NumberField& b) {
    if (!a.same_as(b)) throw std::invalid_argument("field mismatch: " + a.description() + " vs " + b.description());
}

// ---------------------------------------------------------------- NFElement

NFElement::NFElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
    if (!field_) throw std::invalid_argument("NFElement requires a field");
    coeffs_ = field_->reduce(std::move(coeffs));
}

NFElement NFElement::zero(const FieldPtr& field) { return NFElement(field, {}); }

NFElement NFElement::one(const FieldPtr& field) { return NFElement(field, {Rational(1)}); }

NFElement NFElement::generator(const FieldPtr& field) { return NFElement(field, {Rational(0), Rational(1)}); }

NFElement NFElement::from_rational(const FieldPtr& field, const Rational& q) { return NFElement(field, {q}); }

bool NFElement::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool NFElement::is_rational() const {
    return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

Rational NFElement::rational_value() const {
    if (!is_rational()) throw std::domain_error("element " + to_string() + " is not rational");
    return coeffs_[0];
}

Integer NFElement::height() const {
    Integer h = 0;
    for (const auto& c : coeffs_) h = std::max(h, divalg::height(c));
    return h;
}

NFElement NFElement::operator-() const {
    NFElement out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

NFElement& NFElement::operator+=(const NFElement& rhs) {
    require_same_field(*field_, *rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
    return *this;
}

NFElement& NFElement::operator-=(const NFElement& rhs) {
    require_same_field(*field_, *rhs.field_);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
    return *this;
}

NFElement& NFElement::operator*=(const NFElement& rhs) {
    require_same_field(*field_, *rhs.field_);
    coeffs_ = field_->multiply(coeffs_, rhs.coeffs_);
    return *this;
}

NFElement& NFElement::operator*=(const Rational& rhs) {
    for (auto& c : coeffs_) c *= rhs;
    return *this;
}

bool operator==(const NFElement& lhs, const NFElement& rhs) {
    return lhs.field_->same_as(*rhs.field_) && lhs.coeffs_ == rhs.coeffs_;
}

NFElement NFElement::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero in " + field_->description());
    auto eg = extended_gcd(UniPoly(coeffs_), field_->defining_poly());
    if (eg.g.degree() != 0) {
        throw std::domain_error("element " + to_string() + " shares a factor with the defining polynomial");
    }
    return NFElement(field_, eg.s.coeffs());
}

std::string NFElement::to_string() const { return UniPoly(coeffs_).to_string(field_->generator_name()); }

// ---------------------------------------------------------------- Galois data

NFElement apply_automorphism(const NFElement& a, long k) {
    const auto d = static_cast<long>(a.field()->degree());
    long r = ((k % d) + d) % d;
    return NFElement(a.field(), a.field()->apply_sigma_power(static_cast<std::size_t>(r), a.coeffs()));
}

NormTrace field_norm_trace(const NFElement& a) {
    const std::size_t d = a.field()->degree();
    NFElement prod = a;
    NFElement sum = a;
    for (std::size_t k = 1; k < d; ++k) {
        NFElement conj = apply_automorphism(a, static_cast<long>(k));
        prod *= conj;
        sum += conj;
    }
    if (!prod.is_rational() || !sum.is_rational()) {
        throw std::domain_error("norm or trace of " + a.to_string() + " is not rational in " +
                                a.field()->description());
    }
    return {prod.rational_value(), sum.rational_value()};
}

Rational field_norm(const NFElement& a) { return field_norm_trace(a).norm; }

Rational field_trace(const NFElement& a) { return field_norm_trace(a).trace; }

Rational norm_by_resultant(const NFElement& a) {
    return resultant(a.field()->defining_poly(), UniPoly(a.coeffs()));
}

std::string to_string(Decision d) {
    switch (d) {
        case Decision::yes:
            return "yes";
        case Decision::no:
            return "no";
        case Decision::unknown:
            return "unknown";
    }
    return "unknown";
}

std::optional<Rational> rational_sqrt(const Rational& q) {
    if (sgn(q) < 0) return std::nullopt;
    if (mpz_perfect_square_p(q.get_num_mpz_t()) == 0 || mpz_perfect_square_p(q.get_den_mpz_t()) == 0) {
        return std::nullopt;
    }
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), q.get_num_mpz_t());
    mpz_sqrt(d.get_mpz_t(), q.get_den_mpz_t());
    return make_rational(n, d);
}

namespace {

// Walks index tuples into the height-ordered value list, shell by shell.
// shell_ends[h-1] is the number of values of height <= h.
bool for_each_index_tuple(std::size_t slots, const std::vector<std::size_t>& shell_ends,
                          const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    std::size_t prev_count = 0;
    for (std::size_t count : shell_ends) {
        std::vector<std::size_t> idx(slots, 0);
        auto advance = [&] {
            for (std::size_t pos = slots; pos-- > 0;) {
                if (++idx[pos] < count) return true;
                idx[pos] = 0;
            }
            return false;
        };
        do {
            bool in_shell = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= prev_count; });
            bool nonzero = std::any_of(idx.begin(), idx.end(), [](std::size_t i) { return i != 0; });
            if (in_shell && nonzero && !visit(idx)) return false;
        } while (advance());
        prev_count = count;
    }
    return true;
}

std::vector<std::size_t> shell_ends(const std::vector<Rational>& values, unsigned bound) {
    std::vector<std::size_t> ends;
    std::size_t count = 0;
    for (unsigned h = 1; h <= bound; ++h) {
        while (count < values.size() && divalg::height(values[count]) <= h) ++count;
        ends.push_back(count);
    }
    return ends;
}

}  // namespace

void for_each_tuple_by_height(std::size_t slots, unsigned bound,
                              const std::function<bool(const std::vector<Rational>&)>& visit) {
    if (slots == 0) return;
    const auto values = rationals_up_to_height(bound);
    std::vector<Rational> tuple(slots);
    for_each_index_tuple(slots, shell_ends(values, bound), [&](const std::vector<std::size_t>& idx) {
        for (std::size_t s = 0; s < slots; ++s) tuple[s] = values[idx[s]];
        return visit(tuple);
    });
}

void for_each_element_by_height(const FieldPtr& field, unsigned bound,
                                const std::function<bool(const NFElement&)>& visit) {
    for_each_tuple_by_height(field->degree(), bound,
                             [&](const std::vector<Rational>& t) { return visit(NFElement(field, t)); });
}

namespace {

// Residue of q mod p; p must not divide the denominator.
std::uint64_t residue(const Rational& q, std::uint64_t p) {
    Integer P(static_cast<unsigned long>(p));
    Integer num = q.get_num();
    Integer inv_den;
    mpz_invert(inv_den.get_mpz_t(), q.get_den_mpz_t(), P.get_mpz_t());
    Integer r = num * inv_den;
    mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), P.get_mpz_t());
    return r.get_ui();
}

struct SplitPrime {
    std::uint64_t p = 0;
    std::vector<std::uint64_t> roots;
};

// A prime p > floor at which f splits into distinct linear factors and which
// divides no denominator in f or c. Then N(b) = prod b(r) mod p for every
// p-integral b, which makes a cheap exact filter.
std::optional<SplitPrime> find_split_prime(const UniPoly& f, const Rational& c, std::int64_t floor) {
    Integer den_lcm = c.get_den();
    for (const auto& q : f.coeffs()) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
    const std::size_t n = static_cast<std::size_t>(f.degree());
    for (auto p64 : primes_below(floor + kSplitPrimeWindow)) {
        if (p64 <= floor) continue;
        const auto p = static_cast<std::uint64_t>(p64);
        if (mpz_divisible_ui_p(den_lcm.get_mpz_t(), static_cast<unsigned long>(p)) != 0) continue;
        PolyFp fp;
        for (const auto& q : f.coeffs()) fp.push_back(residue(q, p));
        PolyFp t = mod_fp(PolyFp{0, 1}, fp, p);
        PolyFp frob = powmod_fp(t, p, fp, p);
        trim(t);
        if (frob != t) continue;
        SplitPrime sp{p, {}};
        for (std::uint64_t x = 0; x < p && sp.roots.size() < n; ++x) {
            std::uint64_t v = 0;
            for (std::size_t k = fp.size(); k-- > 0;) v = (v * x + fp[k]) % p;
            if (v == 0) sp.roots.push_back(x);
        }
        if (sp.roots.size() == n) return sp;
    }
    return std::nullopt;
}

std::optional<NFElement> search_norm_witness(const FieldPtr& field, const Rational& c, unsigned height_bound) {
    const std::size_t n = field->degree();
    const auto values = rationals_up_to_height(height_bound);
    const auto ends = shell_ends(values, height_bound);
    std::vector<Rational> tuple(n);
    auto exact = [&](const std::vector<std::size_t>& idx) {
        for (std::size_t s = 0; s < n; ++s) tuple[s] = values[idx[s]];
        NFElement b(field, tuple);
        return norm_by_resultant(b) == c ? std::optional<NFElement>(b) : std::nullopt;
    };
    std::optional<NFElement> found;
    auto split = find_split_prime(field->defining_poly(), c, std::max<std::int64_t>(kSplitPrimeFloor, height_bound));
    if (!split) {
        for_each_index_tuple(n, ends, [&](const std::vector<std::size_t>& idx) {
            found = exact(idx);
            return !found;
        });
        return found;
    }
    const std::uint64_t p = split->p;
    const std::uint64_t target = residue(c, p);
    std::vector<std::uint64_t> value_res;
    for (const auto& v : values) value_res.push_back(residue(v, p));
    // powers[k][j] = r_k^j mod p
    std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(n, 1));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t j = 1; j < n; ++j) powers[k][j] = powers[k][j - 1] * split->roots[k] % p;
    for_each_index_tuple(n, ends, [&](const std::vector<std::size_t>& idx) {
        std::uint64_t norm = 1;
        for (std::size_t k = 0; k < n && norm != 0; ++k) {
            std::uint64_t v = 0;
            for (std::size_t j = 0; j < n; ++j) v = (v + value_res[idx[j]] * powers[k][j]) % p;
            norm = norm * v % p;
        }
        if (norm != target) return true;
        found = exact(idx);
        return !found;
    });
    return found;
}

// x + y*sqrt(m) with x^2 - m*y^2 = c, searching y by height.
std::optional<NFElement> conic_norm_witness(const FieldPtr& field, const Integer& m, const Rational& c) {
    // sqrt(m) = (2t + b) / s where f = t^2 + b t + c0 and disc = m s^2.
    const Rational b = field->defining_poly().coeff(1);
    const Rational c0 = field->defining_poly().coeff(0);
    const Rational disc = b * b - 4 * c0;
    auto s = rational_sqrt(disc / Rational(m));
    if (!s) return std::nullopt;
    const NFElement root_m = NFElement(field, {b / *s, Rational(2) / *s});
    for (const auto& y : rationals_up_to_height(kConicSearchHeight)) {
        auto x = rational_sqrt(c + Rational(m) * y * y);
        if (x) return NFElement::from_rational(field, *x) + root_m * y;
    }
    return std::nullopt;
}

}  // namespace

NormResult is_galois_norm(const FieldPtr& field, const Rational& c, unsigned height_bound) {
    if (c == 0) throw std::invalid_argument("is_galois_norm: c must be nonzero");
    if (c == 1) return {Decision::yes, NFElement::one(field), "trivial"};
    if (auto m = field->quadratic_radicand()) {
        std::set<Integer> primes{Integer(2)};
        for (const auto& p : prime_divisors(c.get_num())) primes.insert(p);
        for (const auto& p : prime_divisors(c.get_den())) primes.insert(p);
        for (const auto& p : prime_divisors(*m)) primes.insert(p);
        bool local_everywhere = hilbert_symbol(c, Rational(*m), Place::infinity()) == 1;
        for (const auto& p : primes) local_everywhere = local_everywhere && hilbert_symbol(c, Rational(*m), Place::prime(p)) == 1;
        if (!local_everywhere) return {Decision::no, std::nullopt, "hilbert symbols"};
        auto w = search_norm_witness(field, c, height_bound);
        if (!w) w = conic_norm_witness(field, *m, c);
        if (w && field_norm(*w) != c) throw std::logic_error("norm witness " + w->to_string() + " does not verify");
        return {Decision::yes, w, "hilbert symbols"};
    }
    auto w = search_norm_witness(field, c, height_bound);
    if (w) return {Decision::yes, w, "bounded search"};
    return {Decision::unknown, std::nullopt, "bounded search"};
}

}  // namespace divalg
