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

#include "orderproof/closure.h"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "orderproof/kernel.h"
#include "orderproof/rewrite.h"

namespace orderproof {

bool ProofMap::insert(VarPair key, CertProof proof) {
  return entries_.try_emplace(key, std::move(proof)).second;
}

const CertProof* ProofMap::find(VarPair key) const {
  auto it = entries_.find(key);
  return it == entries_.end() ? nullptr : &it->second;
}

std::set<VarPair> ProofMap::keys() const {
  std::set<VarPair> out;
  for (const auto& [k, p] : entries_) out.insert(k);
  return out;
}

std::vector<std::pair<VarPair, CertProof>> leq1_member_list(const Literal& l) {
  if (!l.positive) return {};
  const VarId x = l.atom.lhs, y = l.atom.rhs;
  switch (l.atom.kind) {
    case AtomKind::kLe: return {{{x, y}, CertProof::assm(l)}};
    case AtomKind::kEq:
      return {{{x, y}, CertProof::eqe1(l)}, {{y, x}, CertProof::eqe2(l)}};
    case AtomKind::kLt: return {};
  }
  return {};
}

ProofMap leq1_mapping(const std::vector<Literal>& assumptions) {
  ProofMap m;
  for (const Literal& l : assumptions) {
    for (auto& [key, proof] : leq1_member_list(l)) m.insert(key, proof);
  }
  return m;
}

ProofMap trancl_mapping(const ProofMap& m) {
  // Successor lists of the base relation, in key order.
  std::map<VarId, std::vector<std::pair<VarId, const CertProof*>>> succ;
  for (const auto& [key, proof] : m.entries()) {
    succ[key.first].emplace_back(key.second, &proof);
  }

  ProofMap result = m;
  // Entries of the current power: pairs joined by a path of exactly i edges.
  ProofMap::Entries power = m.entries();
  const std::size_t n = m.size();
  for (std::size_t i = 1; i < n; ++i) {
    ProofMap::Entries next;
    for (const auto& [key, proof] : power) {
      auto it = succ.find(key.second);
      if (it == succ.end()) continue;
      for (const auto& [z, step] : it->second) {
        next.try_emplace({key.first, z}, CertProof::trans(proof, *step));
      }
    }
    bool added = false;
    for (const auto& [key, proof] : next) added |= result.insert(key, proof);
    if (!added) break;
    power = std::move(next);
  }
  return result;
}

ProofMap trancl_floyd_warshall(const ProofMap& m) {
  std::vector<VarId> vars;
  for (const auto& [key, proof] : m.entries()) {
    vars.push_back(key.first);
    vars.push_back(key.second);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  const std::size_t v = vars.size();
  auto index = [&](VarId x) {
    return static_cast<std::size_t>(
        std::lower_bound(vars.begin(), vars.end(), x) - vars.begin());
  };

  std::vector<std::optional<CertProof>> dist(v * v);
  for (const auto& [key, proof] : m.entries()) {
    dist[index(key.first) * v + index(key.second)] = proof;
  }
  for (std::size_t k = 0; k < v; ++k) {
    for (std::size_t i = 0; i < v; ++i) {
      const auto& ik = dist[i * v + k];
      if (!ik) continue;
      for (std::size_t j = 0; j < v; ++j) {
        const auto& kj = dist[k * v + j];
        auto& ij = dist[i * v + j];
        if (kj && !ij) ij = CertProof::trans(*ik, *kj);
      }
    }
  }

  ProofMap result = m;
  for (std::size_t i = 0; i < v; ++i) {
    for (std::size_t j = 0; j < v; ++j) {
      if (const auto& p = dist[i * v + j]) result.insert({vars[i], vars[j]}, *p);
    }
  }
  return result;
}

ProofMap trancl(const ProofMap& m, ClosureAlgorithm alg) {
  return alg == ClosureAlgorithm::kNaive ? trancl_mapping(m)
                                         : trancl_floyd_warshall(m);
}

std::optional<CertProof> is_in_leq(const ProofMap& leqm, VarId x, VarId y) {
  if (x == y) return CertProof::refl(x);
  if (const CertProof* p = leqm.find({x, y})) return *p;
  return std::nullopt;
}

std::optional<CertProof> is_in_eq(const ProofMap& leqm, VarId x, VarId y) {
  auto p1 = is_in_leq(leqm, x, y);
  if (!p1) return std::nullopt;
  auto p2 = is_in_leq(leqm, y, x);
  if (!p2) return std::nullopt;
  return CertProof::antisym(*p1, *p2);
}

std::optional<PropProof> contr1_list(const ProofMap& leqm, const Literal& l) {
  if (l.positive) return std::nullopt;
  std::optional<CertProof> p;
  switch (l.atom.kind) {
    case AtomKind::kLe: p = is_in_leq(leqm, l.atom.lhs, l.atom.rhs); break;
    case AtomKind::kEq: p = is_in_eq(leqm, l.atom.lhs, l.atom.rhs); break;
    case AtomKind::kLt: return std::nullopt;
  }
  if (!p) return std::nullopt;
  return PropProof::lift(CertProof::contr(l, *p));
}

std::optional<PropProof> contr_list(const std::vector<Literal>& assumptions,
                                    ClosureAlgorithm alg) {
  const ProofMap leqm = trancl(leq1_mapping(assumptions), alg);
  for (const Literal& l : assumptions) {
    if (auto p = contr1_list(leqm, l)) return p;
  }
  return std::nullopt;
}

PropProof from_conj_prf(const PropProof& p, const Formula& phi) {
  if (phi.is_atom()) return p;
  if (!phi.is_and()) {
    throw StructureError("from_conj_prf on a non-clause: " + to_string(phi));
  }
  return PropProof::conj_e(
      phi.left(), phi.right(),
      from_conj_prf(from_conj_prf(p, phi.right()), phi.left()));
}

std::optional<PropProof> contr_fm_prf(const Formula& phi,
                                      ClosureAlgorithm alg) {
  switch (phi.kind()) {
    case Formula::Kind::kOr: {
      auto p1 = contr_fm_prf(phi.left(), alg);
      if (!p1) return std::nullopt;
      auto p2 = contr_fm_prf(phi.right(), alg);
      if (!p2) return std::nullopt;
      return PropProof::disj_e(phi.left(), phi.right(), *p1, *p2);
    }
    case Formula::Kind::kAnd: {
      auto p = contr_list(conj_list(phi), alg);
      if (!p) return std::nullopt;
      return from_conj_prf(*p, phi);
    }
    case Formula::Kind::kAtom: return contr_list({phi.literal()}, alg);
    case Formula::Kind::kNeg: break;
  }
  throw StructureError("contr_fm_prf expects a negation-free DNF");
}

namespace {

// True if `c` is built from AllConv leaves only, so it rewrites nothing.
bool is_identity(const ConvProof& c) {
  switch (c.rule()) {
    case ConvProof::Rule::kAllConv: return true;
    case ConvProof::Rule::kAtomConv:
    case ConvProof::Rule::kArgConv: return is_identity(c.first());
    case ConvProof::Rule::kBinopConv:
    case ConvProof::Rule::kThenConv:
      return is_identity(c.first()) && is_identity(c.second());
    default: return false;
  }
}

// Wraps `body` in a conversion step unless the step is the identity.
PropProof conv_step(const Formula& source, const ConvProof& c,
                    PropProof body) {
  if (is_identity(c)) return body;
  return PropProof::conv(source, c, std::move(body));
}

}  // namespace

Verdict decide(const Formula& phi, Theory theory, DecideOptions opts) {
  // Negations first, so strict-literal elimination sees final polarities.
  auto [nnf, c_nnf] = to_nnf(phi);
  const Formula desugared = amap_fm(deless_for(theory), nnf);
  const ConvProof c_deless = amap_fm_prf(deless_prf_for(theory), nnf);
  auto [dnf, c_dnf] = to_dnf(desugared);

  if (auto p = contr_fm_prf(dnf, opts.algorithm)) {
    PropProof cert =
        conv_step(phi, c_nnf,
                  conv_step(nnf, c_deless, conv_step(desugared, c_dnf, *p)));
    try {
      check_refutation(phi, cert, theory);
    } catch (const Error& e) {
      throw InvariantError(std::string("kernel rejected own certificate: ") +
                           e.what());
    }
    return Unsat{std::move(cert)};
  }

  const std::vector<VarId> vars = vars_of(phi);
  const std::vector<Formula> clauses = disj_clauses(dnf);
  for (std::size_t i = 0; i < clauses.size(); ++i) {
    const std::vector<Literal> lits = conj_list(clauses[i]);
    if (contr_list(lits, opts.algorithm)) continue;
    Model model = theory == Theory::kPartial ? build_partial_model(lits, vars)
                                             : build_linear_model(lits, vars);
    if (!verify_model(model, lits) ||
        !eval_formula(model.relation, model.assignment, phi)) {
      throw InvariantError("model for clause " + std::to_string(i) +
                           " does not satisfy " + to_string(phi));
    }
    return Sat{std::move(model), i};
  }
  throw InvariantError("refutation failed but every clause is contradictory");
}

}  // namespace orderproof
