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


// Cross-checking harness: drives decide against the brute-force oracle and
// both kernels. Used by `orderproof selftest` and the acceptance suite.

#ifndef ORDERPROOF_HARNESS_H_
#define ORDERPROOF_HARNESS_H_

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "orderproof/closure.h"
#include "orderproof/core.h"

namespace orderproof {

// Every literal over variables 0..nvars-1: 3 kinds, 2 polarities, nvars^2
// ordered pairs.
std::vector<Literal> all_literals(int nvars);

// Calls `f` for each literal multiset of size 1..max_len over `nvars`
// variables that is the smallest of its orbit under variable renaming.
// Returns the number of calls.
std::size_t for_each_canonical_sequence(
    int nvars, int max_len,
    const std::function<void(const std::vector<Literal>&)>& f);

// Random formula over variables 0..nvars-1 with all four connectives.
Formula random_formula(std::mt19937_64& rng, int max_depth, int nvars);
Literal random_literal(std::mt19937_64& rng, int nvars);

enum class FailureKind {
  kNone,
  kDisagreement,  // decide and brute_sat differ
  kStructured,    // the structured kernel rejected an unsat certificate
  kReplay,        // the replay kernel rejected the exported certificate
  kModel,         // a sat model is not an order of the theory satisfying phi
  kException,     // decide threw
};

struct CaseOutcome {
  bool unsat = false;
  FailureKind kind = FailureKind::kNone;
  // Empty when every check passed.
  std::string failure;
};

// Decides `phi`, compares with brute_sat, and re-checks the evidence: unsat
// certificates go through the structured kernel and, exported, through the
// replay kernel; sat models must be orders of the right theory satisfying
// `phi`.
CaseOutcome check_case(const Formula& phi, Theory theory,
                       ClosureAlgorithm alg = ClosureAlgorithm::kNaive);

struct SuiteStats {
  std::uint64_t cases = 0;
  std::uint64_t unsat = 0;
  std::uint64_t sat = 0;
  std::uint64_t failures = 0;
  std::uint64_t disagreements = 0;
  std::uint64_t certificate_failures = 0;
  std::uint64_t model_failures = 0;
  std::uint64_t exceptions = 0;
  // The first few failure messages.
  std::vector<std::string> examples;

  void add(const CaseOutcome& o, const Formula& phi, Theory theory);
  void merge(const SuiteStats& other);
};

// The exhaustive agreement suite over literal conjunctions.
SuiteStats run_exhaustive_suite(int nvars, int max_len, Theory theory,
                                ClosureAlgorithm alg = ClosureAlgorithm::kNaive);

// `count` random formulas from a fixed seed.
SuiteStats run_random_suite(std::uint64_t seed, int count, int max_depth,
                            int nvars, Theory theory,
                            ClosureAlgorithm alg = ClosureAlgorithm::kNaive);

}  // namespace orderproof

#endif  // ORDERPROOF_HARNESS_H_
