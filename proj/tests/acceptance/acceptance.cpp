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

// Release gate: eleven criteria, one PASS/FAIL line each, exit status 1 if
// any criterion fails. All comparisons are exact except the d = 10^6
// harmonic sum, which must land within 1e-2 of ln 2.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "divalg/verify/suites.hpp"

using divalg::verify::CheckResult;
using divalg::verify::Rng;

namespace {

struct Criterion {
    int id;
    std::string title;
    double time_limit_s;
    std::function<std::vector<CheckResult>(Rng&)> run;
};

}  // namespace

int main() {
    namespace v = divalg::verify;
    const std::vector<Criterion> criteria{
        {1, "reduced norm of x^i is (-1)^{i(d-1)} a^i, d in {2,3,4,6}, 100 values of a", 60,
         [](Rng& rng) { return std::vector{v::check_nrd_formula({2, 3, 4, 6}, 100, rng)}; }},
        {2, "reduced char poly has rational coefficients, d in {2,3,4}, 200 elements each", 60,
         [](Rng& rng) { return std::vector{v::check_char_poly_rational({2, 3, 4}, 200, rng)}; }},
        {3, "cycle matrix min poly is T^k - prod(a_i), k <= 8, 50 cases", 60,
         [](Rng& rng) { return std::vector{v::check_cycle_min_poly(8, 50, rng)}; }},
        {4, "partition census equals S_d enumeration, d <= 8, four predicates", 60,
         [](Rng&) { return std::vector{v::check_census_oracle(8)}; }},
        {5, "big-cycle closed form equals census for d <= 60; d = 10, 100, 10^4, 10^6", 60,
         [](Rng&) { return std::vector{v::check_big_fraction(60)}; }},
        {6, "Hilbert symbols match solvability for |a|,|b| <= 30 at inf,2,3,5,7; product formula on 200 pairs", 60,
         [](Rng& rng) {
             return std::vector{v::check_hilbert_oracle(30, {2, 3, 5, 7}), v::check_product_formula(200, rng)};
         }},
        {7, "Hamilton invariants, index 2, division, W_SL1 = {1, phi(sigma)}; Q(i), a = -3 gives {1}", 60,
         [](Rng&) { return std::vector{v::check_hamilton()}; }},
        {8, "root-of-unity obstruction for d = 3..12; odd p < 10^4 have order < d mod 2d for d = 4, 8", 60,
         [](Rng&) { return std::vector{v::check_root_obstruction(3, 12, 10000)}; }},
        {9, "phi image has order d and homogeneous cycle types (quadratic, cubic, cyclotomic-5)", 60,
         [](Rng&) { return std::vector{v::check_phi_structure()}; }},
        {10, "Hamilton stabilizer search to height 3 finds only single-term elements", 300,
         [](Rng&) { return std::vector{v::check_stabilizer(3)}; }},
        {11, "no cycle type both excluded and realized, d = 3..12", 600,
         [](Rng&) { return std::vector{v::check_consistency(3, 12)}; }},
    };

    int failed = 0;
    Rng rng(20260416);
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        const auto results = c.run(rng);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool ok = seconds <= c.time_limit_s;
        std::size_t cases = 0;
        for (const auto& r : results) {
            ok = ok && r.passed;
            cases += r.cases;
        }
        char timing[64];
        std::snprintf(timing, sizeof timing, "%.2fs", seconds);
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " [" << cases
                  << " cases, " << timing << "]\n";
        for (const auto& r : results) {
            for (const auto& f : r.failures) std::cout << "    failure: " << f << "\n";
            for (const auto& i : r.info) std::cout << "    " << i << "\n";
        }
        if (seconds > c.time_limit_s) std::cout << "    over the time limit\n";
        std::cout.flush();
        if (!ok) ++failed;
    }
    std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " criteria FAILED") << "\n";
    return failed == 0 ? 0 : 1;
}
