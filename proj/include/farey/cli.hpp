// Copyright 2026 The farey-rank Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#ifndef FAREY_CLI_HPP_
#define FAREY_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace farey::cli {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kInvalidInput = 2,
  kInternal = 3,
};

// args[0] is the program name. The answer goes to `out`, diagnostics to
// `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

enum class SelftestScale { kSmall, kMedium };

// Oracle-equivalence suites on seeded random inputs. Prints one PASS/FAIL
// line per suite and a summary; returns kOk or kInternal.
int run_selftest(std::uint64_t seed, SelftestScale scale, std::ostream& out);

}  // namespace farey::cli

#endif  // FAREY_CLI_HPP_
