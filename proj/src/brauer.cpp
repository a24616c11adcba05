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

#include "divalg/brauer.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "divalg/cyclicalg.hpp"

namespace divalg {

Place Place::prime(const Integer& p) {
    if (p < 2 || !is_prime(p)) throw std::invalid_argument("place: " + p.get_str() + " is not prime");
    return Place(p);
}

Place Place::parse(const std::string& text) {
    if (text == "inf" || text == "infinity" || text == "oo") return infinity();
    Integer p;
    if (p.set_str(text, 10) != 0) throw std::invalid_argument("place: cannot parse '" + text + "'");
    return prime(p);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : p_.get_str(); }

bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() || b.is_infinite()) return !a.is_infinite() && b.is_infinite();
    return a.p_ < b.p_;
}

namespace {

// Integer in the same square class as q.
Integer square_class_rep(const Rational& q) { return q.get_num() * q.get_den(); }

// n = p^alpha * u with p not dividing u.
std::pair<int, Integer> split_off(const Integer& n, const Integer& p) {
    int alpha = 0;
    Integer u = n;
    while (mpz_divisible_p(u.get_mpz_t(), p.get_mpz_t())) {
        mpz_divexact(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t());
        ++alpha;
    }
    return {alpha, u};
}

// u mod 8 for a 2-adic unit u, in {1, 3, 5, 7}.
unsigned long mod8(const Integer& u) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), u.get_mpz_t(), 8);
    return r.get_ui();
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, const Place& v) {
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol of zero");
    if (v.is_infinite()) return (sgn(a) < 0 && sgn(b) < 0) ? -1 : 1;
    const Integer& p = v.p();
    auto [alpha, u] = split_off(square_class_rep(a), p);
    auto [beta, w] = split_off(square_class_rep(b), p);
    int exponent = 0;
    if (p == 2) {
        const unsigned long u8 = mod8(u), w8 = mod8(w);
        const unsigned long eps_u = ((u8 - 1) / 2) & 1U, eps_w = ((w8 - 1) / 2) & 1U;
        const unsigned long om_u = ((u8 * u8 - 1) / 8) & 1U, om_w = ((w8 * w8 - 1) / 8) & 1U;
        exponent = static_cast<int>((eps_u * eps_w + static_cast<unsigned long>(alpha) * om_w +
                                     static_cast<unsigned long>(beta) * om_u) &
                                    1U);
        return exponent ? -1 : 1;
    }
    int sign = 1;
    const Integer half = (p - 1) / 2;
    if ((alpha * beta) % 2 != 0 && mpz_odd_p(half.get_mpz_t())) sign = -sign;
    if (beta % 2 != 0) sign *= mpz_legendre(u.get_mpz_t(), p.get_mpz_t());
    if (alpha % 2 != 0) sign *= mpz_legendre(w.get_mpz_t(), p.get_mpz_t());
    return sign;
}

std::vector<Place> relevant_places(const Rational& a, const Rational& b) {
    std::set<Integer> primes{Integer(2)};
    for (const Integer* n : {&a.get_num(), &a.get_den(), &b.get_num(), &b.get_den()}) {
        if (abs(*n) > 1) {
            for (const auto& p : prime_divisors(*n)) primes.insert(p);
        }
    }
    std::vector<Place> out;
    for (const auto& p : primes) out.push_back(Place::prime(p));
    out.push_back(Place::infinity());
    return out;
}

// ---------------------------------------------------------------- invariants

namespace {

Rational frac_part(const Rational& q) {
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    Rational r = q - Rational(fl);
    r.canonicalize();
    return r;
}

}  // namespace

InvariantVector::InvariantVector(const std::map<Place, Rational>& entries) {
    for (const auto& [v, q] : entries) set(v, q);
}

void InvariantVector::set(const Place& v, const Rational& value) {
    Rational r = frac_part(value);
    if (r == 0) {
        entries_.erase(v);
    } else {
        entries_.insert_or_assign(v, r);
    }
}

Rational InvariantVector::at(const Place& v) const {
    auto it = entries_.find(v);
    return it == entries_.end() ? Rational(0) : it->second;
}

std::string InvariantVector::to_string() const {
    std::ostringstream os;
    os << "{";
    bool first = true;
    for (const auto& [v, q] : entries_) {
        os << (first ? "" : ", ") << v.to_string() << ": " << divalg::to_string(q);
        first = false;
    }
    os << "}";
    return os.str();
}

InvariantVector quaternion_invariants(const CyclicAlgebra& alg) {
    if (alg.degree() != 2) throw std::invalid_argument("quaternion invariants need a degree-2 algebra");
    const auto m = alg.field()->quadratic_radicand();
    if (!m) throw std::logic_error("degree-2 field without a radicand");
    InvariantVector out;
    const Rational mq(*m);
    for (const auto& v : relevant_places(alg.a(), mq)) {
        if (hilbert_symbol(alg.a(), mq, v) == -1) out.set(v, Rational(1, 2));
    }
    return out;
}

InvariantChecks invariant_checks(const InvariantVector& v) {
    InvariantChecks out;
    Rational sum = 0;
    for (const auto& [place, q] : v.entries()) {
        sum += q;
        mpz_lcm(out.index.get_mpz_t(), out.index.get_mpz_t(), q.get_den_mpz_t());
    }
    out.sum_zero = frac_part(sum) == 0;
    return out;
}

// ---------------------------------------------------------------- roots of unity

std::int64_t multiplicative_order(std::int64_t p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("multiplicative_order: modulus must be positive");
    const std::int64_t base = ((p % n) + n) % n;
    if (std::gcd(base, n) != 1 && n != 1) {
        throw std::invalid_argument("multiplicative_order: " + std::to_string(p) + " and " + std::to_string(n) +
                                    " are not coprime");
    }
    if (n == 1) return 1;
    std::int64_t k = 1;
    auto x = static_cast<std::uint64_t>(base);
    while (x != 1) {
        x = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * static_cast<std::uint64_t>(base)) %
                                       static_cast<std::uint64_t>(n));
        ++k;
    }
    return k;
}

RootOfUnityReport root_of_unity_report(long d, std::int64_t prime_bound) {
    if (d <= 2) throw std::invalid_argument("root_of_unity_report needs d > 2");
    RootOfUnityReport rep;
    rep.d = d;
    rep.r = (d % 2 == 1) ? d : 2 * d;
    rep.phi_r = static_cast<long>(euler_phi(rep.r));
    const auto r_str = std::to_string(rep.r);
    rep.trace.push_back("an element of order " + r_str + " generates Q(zeta_" + r_str + "), a subfield of degree phi(" +
                        r_str + ") = " + std::to_string(rep.phi_r));
    rep.trace.push_back("a subfield of a degree-" + std::to_string(d) + " division algebra has degree dividing " +
                        std::to_string(d));
    if (d % rep.phi_r != 0) {
        rep.excluded = true;
        rep.branch = RootBranch::degree;
        rep.reason = "degree obstruction: phi(" + r_str + ") = " + std::to_string(rep.phi_r) + " does not divide " +
                     std::to_string(d);
        if (d % 2 == 1) {
            rep.trace.push_back("d is odd and phi(r) is even for r > 2");
        } else {
            rep.trace.push_back("d = 2^e * m with odd m > 1, so 2^(e+1) divides phi(2d) but not d");
        }
        return rep;
    }
    if ((d & (d - 1)) != 0) throw std::logic_error("root_of_unity_report: phi(r) | d outside the 2-power case");

    rep.branch = RootBranch::local_degree;
    rep.trace.push_back("d is a power of 2 and phi(2d) = d, so Q(zeta_" + r_str + ") would be a maximal subfield");
    rep.trace.push_back("then D_p splits over Q_p(zeta_" + r_str + ") and the local index divides its degree");
    rep.trace.push_back("degree-d division algebras over Q with d = 2^e > 2 are division at some odd prime p");

    // Exponent of (Z/2dZ)^x, computed over all odd residues.
    rep.group_exponent = 1;
    for (long u = 1; u < rep.r; u += 2) {
        rep.group_exponent = std::lcm(rep.group_exponent, static_cast<long>(multiplicative_order(u, rep.r)));
    }
    rep.trace.push_back("(Z/" + r_str + "Z)^x has exponent " + std::to_string(rep.group_exponent) +
                        ", so [Q_p(zeta_" + r_str + "):Q_p] < " + std::to_string(d) + " for every odd p");

    rep.prime_bound = prime_bound;
    for (std::int64_t p : primes_below(prime_bound)) {
        if (p == 2) continue;
        ++rep.primes_checked;
        const std::int64_t ord = multiplicative_order(p, rep.r);
        rep.max_order_seen = std::max(rep.max_order_seen, ord);
        if (ord >= d && !rep.counterexample) rep.counterexample = p;
    }
    rep.trace.push_back("checked " + std::to_string(rep.primes_checked) + " odd primes below " +
                        std::to_string(prime_bound) + ", largest order " + std::to_string(rep.max_order_seen));

    rep.excluded = rep.group_exponent < d && !rep.counterexample;
    rep.reason = rep.excluded ? "local degree obstruction: every odd p has order < " + std::to_string(d) +
                                    " in (Z/" + r_str + "Z)^x"
                              : "local degree argument failed";
    return rep;
}

}  // namespace divalg
