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

// The trusted checker for structured certificates. Depends on core types and
// the proof-term data types only; nothing in here knows about the solver.

#ifndef ORDERPROOF_KERNEL_H_
#define ORDERPROOF_KERNEL_H_

#include <set>
#include <string>
#include <vector>

#include "orderproof/core.h"
#include "orderproof/proof_terms.h"

namespace orderproof {

// A conversion rule did not match the formula it was applied to.
class ConversionError : public Error {
 public:
  ConversionError(ConvProof::Rule rule, const Formula& at);
  ConvProof::Rule rule() const { return rule_; }

 private:
  ConvProof::Rule rule_;
};

class CheckError : public Error {
 public:
  enum class Kind {
    kMissingAssumption,  // an assumed literal/formula is not in the context
    kVariableMismatch,   // premises do not chain (e.g. x<=y, z<=w in TransP)
    kPolarityMismatch,   // a rule received a literal of the wrong polarity
    kRuleShape,          // a premise proves the wrong kind of atom
    kBranchMismatch,     // DisjE branches prove different formulas
    kConversion,         // a conversion step does not apply
    kTheory,             // a linear-only rule used under the partial theory
    kNotFalse,           // the certificate does not conclude Fls
  };

  CheckError(Kind kind, std::string where, const std::string& what);

  Kind kind() const { return kind_; }
  // Slash-separated rule path from the certificate root, e.g.
  // "conv/conv/disje/2/lift/contr.1/trans.2".
  const std::string& where() const { return where_; }

 private:
  Kind kind_;
  std::string where_;
};

std::string_view to_string(CheckError::Kind k);

// Returns the literal `p` proves under `assumptions`.
Literal check_atom_proof(const std::set<Literal>& assumptions,
                         const CertProof& p);

// Rewrites `f` by `c`. All rules are accepted here; theory gating happens in
// check_prop_proof. Throws ConversionError on a shape mismatch.
Formula apply_conv(const ConvProof& c, const Formula& f);

// True if `c` uses a rule that is sound only over linear orders.
bool uses_linear_only_rule(const ConvProof& c);

// Returns the formula `p` proves under `context`. Conversions that are only
// sound over linear orders are rejected when `theory` is kPartial.
Formula check_prop_proof(const std::vector<Formula>& context,
                         const PropProof& p, Theory theory);

// Convenience: checks that `p` refutes `goal` (concludes Fls from {goal}).
// Throws CheckError otherwise.
void check_refutation(const Formula& goal, const PropProof& p, Theory theory);

}  // namespace orderproof

#endif  // ORDERPROOF_KERNEL_H_
