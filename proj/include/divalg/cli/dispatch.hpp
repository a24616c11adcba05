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

#ifndef DIVALG_CLI_DISPATCH_HPP
#define DIVALG_CLI_DISPATCH_HPP

#include <ostream>
#include <string>
#include <vector>

namespace divalg::cli {

enum ExitCode : int { kSuccess = 0, kUsageError = 1, kVerificationFailure = 2 };

/// Runs one command. args excludes the program name. Reports go to out,
/// diagnostics and usage text to err.
int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace divalg::cli

#endif  // DIVALG_CLI_DISPATCH_HPP
