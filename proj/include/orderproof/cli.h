// Copyright 2026 The orderproof Authors
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


// The orderproof command line, callable in-process.
//
//   orderproof solve FILE... [--theory partial|linear] [--cert OUT]
//       [--gprf OUT] [--model OUT] [--algorithm naive|fw]
//       [--format text|json]
//   orderproof check CERT --goal FILE [--kernel structured|replay]
//       [--theory partial|linear]
//   orderproof selftest [--max-len N] [--random N] [--seed S]
//
// Exit codes: 0 success, 2 usage or parse error, 3 certificate rejected,
// 4 internal invariant violation.

#ifndef ORDERPROOF_CLI_H_
#define ORDERPROOF_CLI_H_

#include <ostream>
#include <string>
#include <vector>

#include "orderproof/input.h"
#include "orderproof/model.h"

namespace orderproof {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitRejected = 3;
inline constexpr int kExitInvariant = 4;

// `args` includes the program name, as in argv.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// Three lines: carrier, assignment, relation; all in ascending order.
std::string format_model(const Model& m, const SymbolTable& symbols);

}  // namespace orderproof

#endif  // ORDERPROOF_CLI_H_
