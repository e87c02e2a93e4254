// Copyright 2026 The lingsteg Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LINGSTEG_TOOLS_CLI_H_
#define LINGSTEG_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace lingsteg::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kInsufficientBand = 3,
  kSteganizationFailure = 4,
};

// Runs the lingsteg command line. args[0] is the program name.
int Run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace lingsteg::cli

#endif  // LINGSTEG_TOOLS_CLI_H_
