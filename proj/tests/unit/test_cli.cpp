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

#include <doctest.h>

#include <sstream>

#include "divalg/cli/dispatch.hpp"
#include "divalg/cli/spec_file.hpp"

using namespace divalg;
using namespace divalg::cli;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = dispatch(args, out, err);
    return {code, out.str(), err.str()};
}

std::string spec_path(const std::string& name) { return std::string(DIVALG_SPEC_DIR) + "/" + name; }

}  // namespace

TEST_CASE("spec parsing") {
    auto s = parse_algebra_spec("# comment\nfield = quadratic\nm = -1\na = -1\n");
    CHECK(s.field.kind == FieldKind::quadratic);
    CHECK(s.field.m == -1);
    CHECK(s.a == -1);
    CHECK(s.height == kDefaultHeight);

    auto c = parse_algebra_spec("field = custom\npoly = -1 -2 1 1\nsigma = -2 0 1\na = 2\nheight = 1\n");
    CHECK(c.field.poly == UniPoly{-1, -2, 1, 1});
    CHECK(c.height == 1);
    CHECK(build_algebra(c)->degree() == 3);

    auto f = parse_field_argument("cyclotomic:7");
    CHECK(f.kind == FieldKind::cyclotomic_prime);
    CHECK(f.p == 7);
}

TEST_CASE("spec errors") {
    CHECK_THROWS_AS(parse_algebra_spec("field = quadratic\nm = -1\n"), SpecError);
    CHECK_THROWS_AS(parse_algebra_spec("field = quadratic\nm = -1\na = -1\ncolour = red\n"), SpecError);
    CHECK_THROWS_AS(parse_algebra_spec("field = sextic\na = 1\n"), SpecError);
    CHECK_THROWS_AS(parse_algebra_spec("field = quadratic\nm = -1\na = 0\n"), SpecError);
    CHECK_THROWS_AS(load_algebra_spec("/nonexistent/file.spec"), SpecError);
}

TEST_CASE("fraction and census commands") {
    auto r = run({"fraction", "--d", "10"});
    CHECK(r.code == kSuccess);
    CHECK(r.out.find("275/504") != std::string::npos);
    auto c = run({"census", "--d", "7", "--predicate", "lonely"});
    CHECK(c.code == kSuccess);
    CHECK(c.out.find("{3,2,2}: 210") != std::string::npos);
}

TEST_CASE("algebra commands") {
    auto info = run({"algebra", "--spec", spec_path("hamilton.spec"), "info"});
    CHECK(info.code == kSuccess);
    CHECK(info.out.find("{2: 1/2, inf: 1/2}") != std::string::npos);
    auto weyl = run({"algebra", "--spec", spec_path("gaussian_minus3.spec"), "weyl"});
    CHECK(weyl.code == kSuccess);
    CHECK(weyl.out.find("W_SL1: {1}") != std::string::npos);
}

TEST_CASE("norm and hilbert commands") {
    CHECK(run({"norm", "--field", "quadratic:-1", "--c", "2"}).out.find("yes") != std::string::npos);
    CHECK(run({"norm", "--field", "quadratic:-1", "--c", "3"}).out.find("no") != std::string::npos);
    auto h = run({"hilbert", "--a", "-1", "--b", "-1", "--place", "2"});
    CHECK(h.code == kSuccess);
    CHECK(h.out.find("-1") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({}).code == kUsageError);
    CHECK(run({"frobnicate"}).code == kUsageError);
    CHECK(run({"census", "--d", "0"}).code == kUsageError);
    CHECK(run({"census", "--d", "61"}).code == kUsageError);
    CHECK(run({"algebra", "--spec", "/nonexistent.spec", "info"}).code == kUsageError);
    CHECK(run({"norm", "--field", "quadratic:4", "--c", "2"}).code == kUsageError);
    CHECK(run({"verify", "--suite", "bogus"}).code == kUsageError);
}
