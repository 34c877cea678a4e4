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


// Brute-force ground truth for tests. Deliberately naive, and independent of
// the closure and model code: it only enumerates relations and valuations and
// runs the evaluator.

#ifndef ORDERPROOF_ORACLE_H_
#define ORDERPROOF_ORACLE_H_

#include <vector>

#include "orderproof/core.h"

namespace orderproof {

// All partial orders on {0..k-1}, 1 <= k <= 4, ordered by the bitmask of
// their off-diagonal pairs. Throws Error for k out of range.
const std::vector<Relation>& enumerate_posets(int k);

// Satisfiability by exhaustive search over carriers of size |vars| (at least
// one). Partial: every poset from enumerate_posets and every valuation.
// Linear: every valuation into the numeric chain. Throws Error if
// |vars| > 4 or some variable of `phi` is missing from `vars`.
bool brute_sat(const Formula& phi, Theory theory,
               const std::vector<VarId>& vars);
bool brute_sat(const Formula& phi, Theory theory);

}  // namespace orderproof

#endif  // ORDERPROOF_ORACLE_H_
