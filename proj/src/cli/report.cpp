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

#include "divalg/cli/report.hpp"

#include <stdexcept>

namespace divalg::cli {

std::string with_decimal(const Rational& q) { return to_string(q) + " ≈ " + to_decimal(q); }

void Report::add(const std::string& key, const std::string& value) {
    lines_.push_back(std::string(static_cast<std::size_t>(2 * depth_), ' ') + key + ": " + value);
}

void Report::add(const std::string& key, const Rational& value) { add(key, to_string(value)); }

void Report::add_with_decimal(const std::string& key, const Rational& value) { add(key, with_decimal(value)); }

void Report::line(const std::string& text) {
    lines_.push_back(std::string(static_cast<std::size_t>(2 * depth_), ' ') + text);
}

void Report::open(const std::string& section) {
    line(section + ":");
    ++depth_;
}

void Report::close() {
    if (depth_ == 0) throw std::logic_error("report: unbalanced close");
    --depth_;
}

std::string Report::str() const {
    std::string out;
    for (const auto& l : lines_) out += l + "\n";
    return out;
}

}  // namespace divalg::cli
