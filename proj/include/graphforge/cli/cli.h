// Copyright 2026 The Graphforge Authors
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

#ifndef GRAPHFORGE_CLI_CLI_H
#define GRAPHFORGE_CLI_CLI_H

#include <iosfwd>
#include <string>
#include <vector>

namespace graphforge::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitBadInput = 2;

/// Runs one command line (without the program name). Results go to --out or
/// `out`; diagnostics go to `err`. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace graphforge::cli

#endif
