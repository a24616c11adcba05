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

#include "divalg/cli/dispatch.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>

#include "divalg/brauer.hpp"
#include "divalg/cli/report.hpp"
#include "divalg/cli/spec_file.hpp"
#include "divalg/verify/suites.hpp"
#include "divalg/weyl.hpp"

namespace divalg::cli {

namespace {

// Exact fractions are printed up to this degree; beyond it only the numeric sum.
constexpr long kExactFractionLimit = 20000;

std::string join(const std::vector<std::string>& args) {
    std::string s;
    for (const auto& a : args) s += (s.empty() ? "" : " ") + a;
    return s;
}

std::string tags_text(const std::vector<ExclusionTag>& tags) {
    std::string s;
    for (const auto& t : tags) s += (s.empty() ? "" : ", ") + to_string(t);
    return s;
}

// ---------------------------------------------------------------- census / fraction

void run_census(Report& rep, int d, const std::string& predicate) {
    const CensusPredicate p = parse_census_predicate(predicate);
    const CensusResult res = census(d, p, true);
    rep.add("d", std::to_string(d));
    rep.add("predicate", to_string(p));
    rep.add("count", res.count.get_str());
    rep.add("total", res.total.get_str());
    rep.add_with_decimal("fraction", res.fraction);
    rep.open("contributions");
    for (const auto& [ct, n] : res.contributions) rep.add(ct.to_string(), n.get_str());
    rep.close();
}

void run_fraction(Report& rep, long d) {
    rep.add("d", std::to_string(d));
    rep.add("formula", "sum of 1/k over floor(d/2) < k < d");
    double value = 0;
    if (d <= kExactFractionLimit) {
        const Rational f = big_cycle_fraction_exact(d);
        rep.add_with_decimal("fraction", f);
        value = f.get_d();
    } else {
        const long double f = big_cycle_fraction_numeric(d);
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.10Lf", f);
        rep.add("fraction", std::string("≈ ") + buf + " (floating-point sum)");
        value = static_cast<double>(f);
    }
    rep.add("limit", "ln 2 ≈ 0.6931471806");
    rep.add("reaches 70%", value >= 0.7 ? "yes" : "no");
    if (value < 0.7) rep.add("note", "below the 70% figure; the fraction stays under ln 2 for every d");
}

// ---------------------------------------------------------------- algebra

void algebra_header(Report& rep, const AlgebraPtr& alg, const AlgebraSpec& spec) {
    const auto& field = alg->field();
    rep.open("algebra");
    rep.add("field", field->description());
    rep.add("degree", std::to_string(alg->degree()));
    rep.add("defining polynomial", field->defining_poly().to_string(field->generator_name()));
    rep.add("sigma(" + field->generator_name() + ")", field->sigma_image().to_string(field->generator_name()));
    rep.add("a", alg->a());
    rep.add("height bound", std::to_string(spec.height));
    rep.close();
}

void run_info(Report& rep, const AlgebraPtr& alg, const AlgebraSpec& spec) {
    algebra_header(rep, alg, spec);
    const auto& field = alg->field();
    if (field->irreducibility_prime() > 0) {
        rep.add("irreducible mod", std::to_string(field->irreducibility_prime()));
    }
    const DivisionResult div = is_division(alg, spec.height);
    rep.open("division");
    rep.add("decision", to_string(div.decision));
    rep.add("method", div.method);
    if (div.witness) rep.add("witness", div.witness->to_string() + " with norm a^" + std::to_string(div.power));
    rep.close();
    if (alg->degree() == 2) {
        const InvariantVector inv = quaternion_invariants(*alg);
        const InvariantChecks chk = invariant_checks(inv);
        rep.open("local invariants");
        rep.add("invariants", inv.to_string());
        rep.add("sum zero", chk.sum_zero ? "yes" : "no");
        rep.add("index", chk.index.get_str());
        rep.close();
    }
    rep.open("reduced norms of basis elements");
    for (long i = 0; i < static_cast<long>(alg->degree()); ++i) {
        rep.add("Nrd(x^" + std::to_string(i) + ")", reduced_norm(AlgElement::x_power(alg, i)));
    }
    rep.close();
    rep.open("reduced characteristic polynomials");
    for (long i = 0; i < static_cast<long>(alg->degree()); ++i) {
        rep.add("x^" + std::to_string(i), reduced_char_poly(AlgElement::x_power(alg, i)).to_string("T"));
    }
    rep.close();
}

void add_group(Report& rep, const std::string& name, const WeylSubgroup& w) {
    rep.open(name);
    rep.add("order", std::to_string(w.elements.size()));
    for (const auto& g : w.elements) {
        rep.add(w.labels.at(g), g.to_string() + " type " + cycle_type_of(g).to_string());
    }
    rep.close();
}

void run_weyl(Report& rep, const AlgebraPtr& alg, const AlgebraSpec& spec) {
    algebra_header(rep, alg, spec);
    const WeylSubgroup dx = weyl_subgroup_Dx(*alg);
    add_group(rep, "W_Dx", dx);
    const SL1Subgroup sl1 = weyl_subgroup_SL1(alg, spec.height);
    add_group(rep, "W_SL1", sl1.group);
    rep.add("W_SL1", sl1.group.to_string());
    rep.add("W_SL1 exact", sl1.exact ? "yes" : "no");
    for (const auto& w : sl1.warnings) rep.add("warning", w);
    rep.open("representable in SL1");
    for (long i = 0; i < static_cast<long>(alg->degree()); ++i) {
        const SL1Representability r = representable_in_SL1(alg, i, spec.height);
        std::string text = "target " + to_string(r.target) + ": " + to_string(r.decision);
        if (r.element) text += ", element " + r.element->to_string() + " has reduced norm 1";
        rep.add(i == 0 ? std::string("1") : dx.labels.at(phi(*alg, i)), text);
    }
    rep.close();
    rep.add("affine", affine_summary(alg, spec.height));
}

void add_coset_report(Report& rep, const RepresentabilityReport& r) {
    rep.open("cosets for " + to_string(r.group));
    for (const auto& v : r.verdicts) {
        std::string text = to_string(v.kind);
        if (v.kind == VerdictKind::excluded) text += "(" + tags_text(v.tags) + ")";
        if (v.kind == VerdictKind::representable_fundamental) text += "(" + v.witness + ")";
        rep.add(v.type.to_string(), text);
    }
    for (const auto& n : r.notes) rep.add("note", n);
    rep.close();
}

void add_root_report(Report& rep, long d) {
    const RootOfUnityReport r = root_of_unity_report(d);
    rep.open("roots of unity");
    rep.add("r", std::to_string(r.r));
    rep.add("phi(r)", std::to_string(r.phi_r));
    rep.add("verdict", r.excluded ? "Excluded" : "not excluded");
    rep.add("reason", r.reason);
    for (const auto& t : r.trace) rep.add("step", t);
    rep.close();
}

void run_report(Report& rep, const AlgebraPtr& alg, const AlgebraSpec& spec) {
    algebra_header(rep, alg, spec);
    const int d = static_cast<int>(alg->degree());
    add_coset_report(rep, coset_report(d, WeylGroupKind::Dx, alg, spec.height));
    add_coset_report(rep, coset_report(d, WeylGroupKind::SL1, alg, spec.height));
    if (d > 2) add_root_report(rep, d);
}

void run_search(Report& rep, const AlgebraPtr& alg, const AlgebraSpec& spec, unsigned height) {
    algebra_header(rep, alg, spec);
    const auto hits = stabilizer_search(alg, height);
    rep.add("search height", std::to_string(height));
    rep.add("monomial elements", std::to_string(hits.size()));
    rep.add("multi-term counterexamples", "0");
    rep.open("elements");
    for (const auto& h : hits) {
        std::string scalars;
        for (const auto& s : h.data.scalars) scalars += (scalars.empty() ? "" : ", ") + s.to_string();
        rep.add(h.element.to_string(), "perm " + h.data.perm.to_string() + ", scalars (" + scalars + ")");
    }
    rep.close();
}

// ---------------------------------------------------------------- hilbert / norm / verify

void run_hilbert(Report& rep, const std::string& a_text, const std::string& b_text, const std::string& place) {
    const Rational a = parse_rational(a_text);
    const Rational b = parse_rational(b_text);
    if (a == 0 || b == 0) throw std::invalid_argument("hilbert symbol arguments must be nonzero");
    rep.add("a", a);
    rep.add("b", b);
    if (!place.empty()) {
        const Place v = Place::parse(place);
        rep.add("(a,b)_" + v.to_string(), std::to_string(hilbert_symbol(a, b, v)));
        return;
    }
    int product = 1;
    rep.open("symbols");
    for (const auto& v : relevant_places(a, b)) {
        const int s = hilbert_symbol(a, b, v);
        product *= s;
        rep.add(v.to_string(), std::to_string(s));
    }
    rep.close();
    rep.add("product", std::to_string(product));
    rep.add("other places", "1");
}

void run_norm(Report& rep, const std::string& field_arg, const std::string& c_text, unsigned height) {
    const FieldPtr field = build_field(parse_field_argument(field_arg));
    const Rational c = parse_rational(c_text);
    if (c == 0) throw std::invalid_argument("c must be nonzero");
    rep.add("field", field->description());
    rep.add("c", c);
    rep.add("height bound", std::to_string(height));
    const NormResult r = is_galois_norm(field, c, height);
    rep.add("decision", to_string(r.decision));
    rep.add("method", r.method);
    if (r.witness) {
        rep.add("witness", r.witness->to_string());
        rep.add("N(witness)", field_norm(*r.witness));
    }
}

bool run_verify(Report& rep, const std::string& suite, std::uint64_t seed) {
    const std::vector<std::string> names =
        suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
    rep.add("seed", std::to_string(seed));
    bool ok = true;
    for (const auto& name : names) {
        const verify::SuiteResult s = verify::run_suite(name, seed);
        rep.open("suite " + name);
        for (const auto& c : s.checks) {
            rep.add(c.passed ? "PASS" : "FAIL", c.name + " (" + std::to_string(c.cases) + " cases)");
            for (const auto& f : c.failures) rep.add("  failure", f);
            for (const auto& i : c.info) rep.add("  info", i);
        }
        rep.close();
        ok = ok && s.passed();
    }
    rep.add("result", ok ? "PASS" : "FAIL");
    return ok;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with cyclic division algebras over Q", "divalg"};
    app.require_subcommand(1);

    int census_d = 0;
    std::string predicate = "any";
    auto* census_cmd = app.add_subcommand("census", "Count permutations of S_d by cycle-type predicate");
    census_cmd->add_option("--d", census_d, "degree, 1..60")->required();
    census_cmd->add_option("--predicate", predicate, "lonely | big | unique-smallest | any")
        ->check(CLI::IsMember({"lonely", "big", "unique-smallest", "any"}));

    long fraction_d = 0;
    auto* fraction_cmd = app.add_subcommand("fraction", "Fraction of S_d with a cycle of length in (d/2, d)");
    fraction_cmd->add_option("--d", fraction_d, "degree")->required()->check(CLI::PositiveNumber);

    std::string spec_path;
    unsigned search_height = 0;
    auto* algebra_cmd = app.add_subcommand("algebra", "Inspect a cyclic algebra given by a spec file");
    algebra_cmd->add_option("--spec", spec_path, "algebra spec file")->required();
    algebra_cmd->require_subcommand(1);
    auto* info_cmd = algebra_cmd->add_subcommand("info", "field data, division test, reduced norms");
    auto* weyl_cmd = algebra_cmd->add_subcommand("weyl", "Weyl subgroups of D^x and SL_1(D)");
    auto* report_cmd = algebra_cmd->add_subcommand("report", "per-cycle-type representability");
    auto* search_cmd = algebra_cmd->add_subcommand("search", "stabilizer search over small elements");
    search_cmd->add_option("--height", search_height, "coefficient height bound")->required();

    std::string hilbert_a, hilbert_b, hilbert_place;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert symbol (a, b)_v");
    hilbert_cmd->add_option("--a", hilbert_a, "rational")->required();
    hilbert_cmd->add_option("--b", hilbert_b, "rational")->required();
    hilbert_cmd->add_option("--place", hilbert_place, "prime or inf; all relevant places if omitted");

    std::string norm_field, norm_c;
    unsigned norm_height = kDefaultHeight;
    auto* norm_cmd = app.add_subcommand("norm", "Is c a norm from K?");
    norm_cmd->add_option("--field", norm_field, "quadratic:M | cyclotomic:P | custom:POLY;SIGMA | FILE")->required();
    norm_cmd->add_option("--c", norm_c, "rational")->required();
    norm_cmd->add_option("--height", norm_height, "search height bound");

    std::string suite;
    std::uint64_t seed = 20260101;
    auto* verify_cmd = app.add_subcommand("verify", "Run a property suite against brute-force oracles");
    std::vector<std::string> suite_choices = verify::suite_names();
    suite_choices.push_back("all");
    verify_cmd->add_option("--suite", suite, "suite name")->required()->check(CLI::IsMember(suite_choices));
    verify_cmd->add_option("--seed", seed, "random seed");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsageError;
    }

    Report rep;
    rep.add("command", join(args));
    bool verified = true;
    try {
        if (*census_cmd) {
            run_census(rep, census_d, predicate);
        } else if (*fraction_cmd) {
            run_fraction(rep, fraction_d);
        } else if (*algebra_cmd) {
            const AlgebraSpec spec = load_algebra_spec(spec_path);
            const AlgebraPtr alg = build_algebra(spec);
            if (*info_cmd) run_info(rep, alg, spec);
            if (*weyl_cmd) run_weyl(rep, alg, spec);
            if (*report_cmd) run_report(rep, alg, spec);
            if (*search_cmd) run_search(rep, alg, spec, search_height);
        } else if (*hilbert_cmd) {
            run_hilbert(rep, hilbert_a, hilbert_b, hilbert_place);
        } else if (*norm_cmd) {
            run_norm(rep, norm_field, norm_c, norm_height);
        } else if (*verify_cmd) {
            verified = run_verify(rep, suite, seed);
        }
    } catch (const SpecError& e) {
        err << "divalg: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        err << "divalg: " << e.what() << "\n";
        return kUsageError;
    } catch (const std::out_of_range& e) {
        err << "divalg: " << e.what() << "\n";
        return kUsageError;
    }
    out << rep.str();
    return verified ? kSuccess : kVerificationFailure;
}

}  // namespace divalg::cli
