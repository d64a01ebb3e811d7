// Copyright 2026 The qtransport Authors
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

#ifndef QTRANSPORT_CLI_H
#define QTRANSPORT_CLI_H

#include <iosfwd>

namespace qtransport::cli {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kParse = 2,
    kInvariant = 3,
    kCapacity = 4,
    kPredicate = 5,
};

/// Runs the `qtransport` command line. Results go to `--out` when given,
/// otherwise to `out`; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

}  // namespace qtransport::cli

#endif
