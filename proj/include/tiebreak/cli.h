// Copyright 2026 The Tiebreak Authors
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

#ifndef TIEBREAK_CLI_H_
#define TIEBREAK_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace tiebreak::cli {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitIndifferent = 2;

// Runs one command. `args` excludes the program name. Results go to `out`
// as TSV (or space-aligned columns when `align` is set); diagnostics go to
// `err`. Returns kExitOk, kExitUsage or kExitIndifferent.
int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err, bool align = false);

}  // namespace tiebreak::cli

#endif  // TIEBREAK_CLI_H_
