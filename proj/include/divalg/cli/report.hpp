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

#ifndef DIVALG_CLI_REPORT_HPP
#define DIVALG_CLI_REPORT_HPP

#include <string>
#include <vector>

#include "divalg/rational.hpp"

namespace divalg::cli {

/// Indented "key: value" text. Output depends only on the calls made.
class Report {
   public:
    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, const Rational& value);
    /// "num/den ≈ 0.1234567890"
    void add_with_decimal(const std::string& key, const Rational& value);
    void line(const std::string& text);
    void open(const std::string& section);
    void close();

    std::string str() const;

   private:
    std::vector<std::string> lines_;
    int depth_ = 0;
};

std::string with_decimal(const Rational& q);

}  // namespace divalg::cli

#endif  // DIVALG_CLI_REPORT_HPP
