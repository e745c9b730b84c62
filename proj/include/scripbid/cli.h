// Copyright 2026 The Scripbid Authors
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

#ifndef SCRIPBID_CLI_H_
#define SCRIPBID_CLI_H_

#include <ostream>
#include <string>
#include <vector>

namespace scripbid {

enum ExitCode { kExitOk = 0, kExitAuditFailed = 1, kExitUsage = 2, kExitInvalidInput = 3 };

// Runs one command line (without the program name). Data goes to `out` or
// the --out file, diagnostics to `err`.
int RunCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace scripbid

#endif  // SCRIPBID_CLI_H_
