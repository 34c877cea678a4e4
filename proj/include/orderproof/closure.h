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

// The decision core: proof-carrying transitive closure of the <= edges
// induced by a clause, contradiction search over clauses, and the
// end-to-end `decide` pipeline.

#ifndef ORDERPROOF_CLOSURE_H_
#define ORDERPROOF_CLOSURE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "orderproof/core.h"
#include "orderproof/model.h"
#include "orderproof/proof_terms.h"

namespace orderproof {

// Ordered map from (x, y) to a proof of x <= y. Inserts never overwrite.
class ProofMap {
 public:
  using Entries = std::map<VarPair, CertProof>;

  // Returns false (and keeps the old proof) if the key is present.
  bool insert(VarPair key, CertProof proof);
  const CertProof* find(VarPair key) const;
  bool contains(VarPair key) const { return entries_.contains(key); }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  std::set<VarPair> keys() const;
  const Entries& entries() const { return entries_; }

 private:
  Entries entries_;
};

enum class ClosureAlgorithm { kNaive, kFloydWarshall };

std::vector<std::pair<VarPair, CertProof>> leq1_member_list(const Literal& l);
ProofMap leq1_mapping(const std::vector<Literal>& assumptions);

// Transitive closure by accumulating n-fold compositions, n = |keys(m)|,
// stopping early once an iteration adds nothing.
ProofMap trancl_mapping(const ProofMap& m);
// Same contract via Floyd-Warshall over the variables of m.
ProofMap trancl_floyd_warshall(const ProofMap& m);
ProofMap trancl(const ProofMap& m, ClosureAlgorithm alg);

std::optional<CertProof> is_in_leq(const ProofMap& leqm, VarId x, VarId y);
std::optional<CertProof> is_in_eq(const ProofMap& leqm, VarId x, VarId y);

std::optional<PropProof> contr1_list(const ProofMap& leqm, const Literal& l);
std::optional<PropProof> contr_list(
    const std::vector<Literal>& assumptions,
    ClosureAlgorithm alg = ClosureAlgorithm::kNaive);

// Turns a refutation of the atoms of clause `phi` into one of `phi` itself.
PropProof from_conj_prf(const PropProof& p, const Formula& phi);

// Refutes a negation-free DNF formula, or returns nullopt if some clause is
// consistent.
std::optional<PropProof> contr_fm_prf(
    const Formula& phi, ClosureAlgorithm alg = ClosureAlgorithm::kNaive);

struct Unsat {
  PropProof certificate;
};

struct Sat {
  Model model;
  // Position of the witnessing clause in the DNF, left to right.
  std::size_t clause_index = 0;
};

using Verdict = std::variant<Unsat, Sat>;

struct DecideOptions {
  ClosureAlgorithm algorithm = ClosureAlgorithm::kNaive;
};

// Full pipeline. Every certificate is re-checked by the kernel and every
// model re-verified against the input; failures throw InvariantError.
Verdict decide(const Formula& phi, Theory theory, DecideOptions opts = {});

}  // namespace orderproof

#endif  // ORDERPROOF_CLOSURE_H_
