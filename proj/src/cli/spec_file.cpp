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

#include "divalg/cli/spec_file.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <boost/algorithm/string.hpp>

namespace divalg::cli {

namespace {

using KeyValues = std::map<std::string, std::string>;

KeyValues parse_key_values(std::string_view text) {
    KeyValues kv;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = boost::algorithm::trim_copy(raw);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw SpecError("line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = boost::algorithm::trim_copy(line.substr(0, eq));
        std::string value = boost::algorithm::trim_copy(line.substr(eq + 1));
        if (key.empty() || value.empty()) throw SpecError("line " + std::to_string(line_no) + ": empty key or value");
        if (!kv.emplace(key, value).second) throw SpecError("duplicate key '" + key + "'");
    }
    return kv;
}

const std::string& require(const KeyValues& kv, const std::string& key) {
    auto it = kv.find(key);
    if (it == kv.end()) throw SpecError("missing key '" + key + "'");
    return it->second;
}

Rational parse_q(const std::string& text, const std::string& what) {
    try {
        return parse_rational(text);
    } catch (const std::exception&) {
        throw SpecError(what + ": cannot parse rational '" + text + "'");
    }
}

Integer parse_int(const std::string& text, const std::string& what) {
    const Rational q = parse_q(text, what);
    if (q.get_den() != 1) throw SpecError(what + " must be an integer");
    return q.get_num();
}

UniPoly parse_coefficients(const std::string& text, const std::string& what) {
    std::vector<std::string> tokens;
    boost::algorithm::split(tokens, text, boost::algorithm::is_any_of(" ,\t"), boost::algorithm::token_compress_on);
    std::vector<Rational> coeffs;
    for (const auto& t : tokens) {
        if (!t.empty()) coeffs.push_back(parse_q(t, what));
    }
    if (coeffs.empty()) throw SpecError(what + ": no coefficients");
    return UniPoly(std::move(coeffs));
}

FieldSpec field_from(const KeyValues& kv) {
    FieldSpec spec;
    const std::string& kind = require(kv, "field");
    if (kind == "quadratic") {
        spec.kind = FieldKind::quadratic;
        spec.m = parse_int(require(kv, "m"), "m");
    } else if (kind == "cyclotomic_prime" || kind == "cyclotomic") {
        spec.kind = FieldKind::cyclotomic_prime;
        spec.p = parse_int(require(kv, "p"), "p").get_si();
    } else if (kind == "custom") {
        spec.kind = FieldKind::custom;
        spec.poly = parse_coefficients(require(kv, "poly"), "poly");
        spec.sigma = parse_coefficients(require(kv, "sigma"), "sigma");
    } else {
        throw SpecError("unknown field kind '" + kind + "'");
    }
    return spec;
}

void reject_unknown(const KeyValues& kv, std::initializer_list<const char*> allowed) {
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (const char* a : allowed) ok = ok || key == a;
        if (!ok) throw SpecError("unknown key '" + key + "'");
    }
}

}  // namespace

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SpecError("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

FieldPtr build_field(const FieldSpec& spec) {
    try {
        switch (spec.kind) {
            case FieldKind::quadratic:
                return NumberField::quadratic(spec.m);
            case FieldKind::cyclotomic_prime:
                return NumberField::cyclotomic_prime(spec.p);
            case FieldKind::custom:
                return NumberField::custom(spec.poly, spec.sigma);
        }
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("invalid field: ") + e.what());
    } catch (const std::domain_error& e) {
        throw SpecError(std::string("invalid field: ") + e.what());
    }
    throw SpecError("invalid field kind");
}

AlgebraPtr build_algebra(const AlgebraSpec& spec) {
    FieldPtr field = build_field(spec.field);
    try {
        return CyclicAlgebra::create(std::move(field), spec.a);
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string("invalid algebra: ") + e.what());
    }
}

FieldSpec parse_field_spec(std::string_view text) {
    const KeyValues kv = parse_key_values(text);
    reject_unknown(kv, {"field", "m", "p", "poly", "sigma", "height"});
    return field_from(kv);
}

AlgebraSpec parse_algebra_spec(std::string_view text) {
    const KeyValues kv = parse_key_values(text);
    reject_unknown(kv, {"field", "m", "p", "poly", "sigma", "a", "height"});
    AlgebraSpec spec;
    spec.field = field_from(kv);
    spec.a = parse_q(require(kv, "a"), "a");
    if (spec.a == 0) throw SpecError("a must be nonzero");
    if (auto it = kv.find("height"); it != kv.end()) {
        const Integer h = parse_int(it->second, "height");
        if (h < 0 || h > 100) throw SpecError("height must lie in 0..100");
        spec.height = static_cast<unsigned>(h.get_ui());
    }
    return spec;
}

AlgebraSpec load_algebra_spec(const std::string& path) { return parse_algebra_spec(read_file(path)); }

FieldSpec parse_field_argument(const std::string& arg) {
    const auto colon = arg.find(':');
    if (colon == std::string::npos) return parse_field_spec(read_file(arg));
    const std::string kind = arg.substr(0, colon);
    const std::string rest = arg.substr(colon + 1);
    FieldSpec spec;
    if (kind == "quadratic") {
        spec.kind = FieldKind::quadratic;
        spec.m = parse_int(rest, "m");
    } else if (kind == "cyclotomic" || kind == "cyclotomic_prime") {
        spec.kind = FieldKind::cyclotomic_prime;
        spec.p = parse_int(rest, "p").get_si();
    } else if (kind == "custom") {
        const auto semi = rest.find(';');
        if (semi == std::string::npos) throw SpecError("custom field needs 'POLY;SIGMA'");
        spec.kind = FieldKind::custom;
        spec.poly = parse_coefficients(rest.substr(0, semi), "poly");
        spec.sigma = parse_coefficients(rest.substr(semi + 1), "sigma");
    } else {
        throw SpecError("unknown field kind '" + kind + "'");
    }
    return spec;
}

}  // namespace divalg::cli
