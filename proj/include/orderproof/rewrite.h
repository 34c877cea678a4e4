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

// Certified preprocessing: strict-literal elimination, negation pushing and
// DNF conversion. Every formula transformation here has a companion that
// returns a ConvProof; apply_conv(proof, input) reproduces the output.

#ifndef ORDERPROOF_REWRITE_H_
#define ORDERPROOF_REWRITE_H_

#include <functional>
#include <utility>
#include <vector>

#include "orderproof/core.h"
#include "orderproof/proof_terms.h"

namespace orderproof {

using LiteralRewrite = std::function<Formula(const Literal&)>;
using LiteralRewriteProof = std::function<ConvProof(const Literal&)>;

// Partial orders: x < y becomes x <= y & x != y; ~(x < y) becomes
// ~(x <= y) | x = y. Other literals are left alone.
Formula deless_partial(const Literal& l);
ConvProof deless_partial_prf(const Literal& l);

// Linear orders additionally turn ~(x <= y) into x != y & y <= x and
// ~(x < y) into y <= x, so no negative <= or strict literal survives.
Formula deless_linear(const Literal& l);
ConvProof deless_linear_prf(const Literal& l);

LiteralRewrite deless_for(Theory t);
LiteralRewriteProof deless_prf_for(Theory t);

Formula amap_fm(const LiteralRewrite& f, const Formula& phi);
ConvProof amap_fm_prf(const LiteralRewriteProof& ap, const Formula& phi);

// Negation normal form: negations pushed into atom polarities, so the
// result has no Neg node.
std::pair<Formula, ConvProof> to_nnf(const Formula& phi);

// Negation normal form followed by distribution of And over Or. The result
// has no Neg node and no Or below an And.
std::pair<Formula, ConvProof> to_dnf(const Formula& phi);

bool is_dnf(const Formula& phi);
// True for a pure conjunction of atoms (no Or, no Neg).
bool is_clause(const Formula& phi);

// Atom leaves of a clause, left to right. Throws StructureError otherwise.
std::vector<Literal> conj_list(const Formula& phi);

// Maximal non-Or subtrees, left to right.
std::vector<Formula> disj_clauses(const Formula& phi);

}  // namespace orderproof

#endif  // ORDERPROOF_REWRITE_H_
