// Copyright 2026 The dgsp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef DGSP_TOOLS_CLI_H
#define DGSP_TOOLS_CLI_H

#include <ostream>
#include <string>
#include <vector>

namespace dgsp::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kPromise = 2,    // promise or feasibility violation
    kInexact = 3,    // exactness failure
};

/// Runs one command line (args excludes the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "4..8", "4,5,7" or "6".
std::vector<int> parse_int_list(const std::string& text);

}  // namespace dgsp::cli

#endif
