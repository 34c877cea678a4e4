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

// Witness models for consistent clauses.
//
// Partial orders: quotient the <= preorder of the clause by its symmetric
// factor. Each variable maps to the smallest variable of its class; the
// relation is the image of the preorder plus the diagonal of the carrier.
//
// Linear orders: topologically sort that partial order (smallest id first
// among the ready elements) and take the induced chain.

#ifndef ORDERPROOF_MODEL_H_
#define ORDERPROOF_MODEL_H_

#include <map>
#include <set>
#include <vector>

#include "orderproof/core.h"

namespace orderproof {

struct Model {
  Relation relation;
  Valuation assignment;
  Theory theory = Theory::kPartial;

  friend bool operator==(const Model&, const Model&) = default;
};

// Class representative (minimum id) of every variable in `vars` under the
// symmetric factor of `leq_keys` (the diagonal is implicit).
std::map<VarId, VarId> sym_classes(const std::set<VarPair>& leq_keys,
                                   const std::vector<VarId>& vars);

// Model of a strict-free clause without contradiction. `extra_vars` are
// added to the carrier as unconstrained variables so the assignment can
// cover a larger formula. Throws InvariantError on a precondition failure.
Model build_partial_model(const std::vector<Literal>& clause,
                          const std::vector<VarId>& extra_vars = {});

// Linear order on the same carrier containing `r`. Throws Error if `r` is
// not a partial order.
Relation linear_extension(const Relation& r);

// Requires a clause free of strict atoms and of negative <= literals.
Model build_linear_model(const std::vector<Literal>& clause,
                         const std::vector<VarId>& extra_vars = {});

// Relation has the properties `m.theory` demands and every literal holds.
bool verify_model(const Model& m, const std::vector<Literal>& clause);

}  // namespace orderproof

#endif  // ORDERPROOF_MODEL_H_
