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
 * @file spec_file.hpp
 * @brief Algebra and field specifications as "key = value" text.
 *
 *     # lines starting with '#' are comments
 *     field  = quadratic | cyclotomic_prime | custom
 *     m      = -1                 (quadratic)
 *     p      = 5                  (cyclotomic_prime)
 *     poly   = -1 -2 1 1          (custom, ascending coefficients)
 *     sigma  = -2 0 1             (custom, image of the generator, ascending)
 *     a      = -1/1               (algebra files only)
 *     height = 4                  (optional search bound, default 4)
 *
 * Coefficients are rationals "n" or "n/d" separated by spaces or commas.
 */

#ifndef DIVALG_CLI_SPEC_FILE_HPP
#define DIVALG_CLI_SPEC_FILE_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include "divalg/cyclicalg.hpp"

namespace divalg::cli {

class SpecError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

constexpr unsigned kDefaultHeight = 4;

struct FieldSpec {
    FieldKind kind = FieldKind::quadratic;
    Integer m = 0;
    long p = 0;
    UniPoly poly;
    UniPoly sigma;
};

struct AlgebraSpec {
    FieldSpec field;
    Rational a;
    unsigned height = kDefaultHeight;
};

/// Field validation failures are rethrown as SpecError.
FieldPtr build_field(const FieldSpec& spec);
AlgebraPtr build_algebra(const AlgebraSpec& spec);

FieldSpec parse_field_spec(std::string_view text);
AlgebraSpec parse_algebra_spec(std::string_view text);
AlgebraSpec load_algebra_spec(const std::string& path);

/// "quadratic:M", "cyclotomic:P", "custom:POLY;SIGMA" (comma-separated
/// coefficients), or the path of a field spec file.
FieldSpec parse_field_argument(const std::string& arg);

std::string read_file(const std::string& path);

}  // namespace divalg::cli

#endif  // DIVALG_CLI_SPEC_FILE_HPP
