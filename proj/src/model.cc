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

#include "orderproof/model.h"

#include <algorithm>

#include "orderproof/closure.h"

namespace orderproof {

std::map<VarId, VarId> sym_classes(const std::set<VarPair>& leq_keys,
                                   const std::vector<VarId>& vars) {
  std::map<VarId, VarId> rep;
  for (VarId x : vars) {
    VarId best = x;
    for (VarId y : vars) {
      if (y < best && leq_keys.contains({x, y}) && leq_keys.contains({y, x})) {
        best = y;
      }
    }
    rep[x] = best;
  }
  return rep;
}

namespace {

std::vector<VarId> clause_vars(const std::vector<Literal>& clause,
                               const std::vector<VarId>& extra) {
  std::vector<VarId> vars = extra;
  for (const Literal& l : clause) {
    vars.push_back(l.atom.lhs);
    vars.push_back(l.atom.rhs);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

}  // namespace

Model build_partial_model(const std::vector<Literal>& clause,
                          const std::vector<VarId>& extra_vars) {
  for (const Literal& l : clause) {
    if (l.atom.kind == AtomKind::kLt) {
      throw InvariantError("partial model needs a strict-free clause, got " +
                           to_string(l));
    }
  }
  if (contr_list(clause)) {
    throw InvariantError("partial model requested for a contradictory clause");
  }

  const std::vector<VarId> vars = clause_vars(clause, extra_vars);
  const std::set<VarPair> leq = trancl_mapping(leq1_mapping(clause)).keys();
  const std::map<VarId, VarId> cls = sym_classes(leq, vars);

  std::set<Element> carrier;
  std::set<ElementPair> pairs;
  Valuation assignment;
  for (VarId x : vars) {
    const Element e = cls.at(x).value;
    carrier.insert(e);
    pairs.insert({e, e});
    assignment.set(x, e);
  }
  for (const auto& [x, y] : leq) {
    auto cx = cls.find(x);
    auto cy = cls.find(y);
    if (cx == cls.end() || cy == cls.end()) continue;
    pairs.insert({cx->second.value, cy->second.value});
  }

  Model m{Relation(std::move(carrier), std::move(pairs)), std::move(assignment),
          Theory::kPartial};
  if (!verify_model(m, clause)) {
    throw InvariantError("quotient model fails its own clause");
  }
  return m;
}

Relation linear_extension(const Relation& r) {
  if (!is_partial_order(r)) {
    throw Error("linear_extension needs a partial order");
  }
  const std::vector<Element>& carrier = r.carrier();
  std::map<Element, std::size_t> indegree;
  for (Element e : carrier) indegree[e] = 0;
  for (const auto& [a, b] : r.pairs()) {
    if (a != b) ++indegree[b];
  }

  // Kahn's algorithm; the ready set is ordered so the smallest id goes first.
  std::set<Element> ready;
  for (const auto& [e, d] : indegree) {
    if (d == 0) ready.insert(e);
  }
  std::vector<Element> order;
  while (!ready.empty()) {
    const Element e = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(e);
    for (const auto& [a, b] : r.pairs()) {
      if (a == e && b != e && --indegree[b] == 0) ready.insert(b);
    }
  }
  if (order.size() != carrier.size()) {
    throw InvariantError("cycle in a relation that passed the order check");
  }

  std::set<ElementPair> chain;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i; j < order.size(); ++j) {
      chain.insert({order[i], order[j]});
    }
  }
  return Relation(std::set<Element>(carrier.begin(), carrier.end()),
                  std::move(chain));
}

Model build_linear_model(const std::vector<Literal>& clause,
                         const std::vector<VarId>& extra_vars) {
  for (const Literal& l : clause) {
    if (l.atom.kind == AtomKind::kLt ||
        (!l.positive && l.atom.kind == AtomKind::kLe)) {
      throw InvariantError("linear model needs a clause without strict or "
                           "negated <= literals, got " + to_string(l));
    }
  }
  Model partial = build_partial_model(clause, extra_vars);
  Model m{linear_extension(partial.relation), std::move(partial.assignment),
          Theory::kLinear};
  if (!verify_model(m, clause)) {
    throw InvariantError("linear extension fails its own clause");
  }
  return m;
}

bool verify_model(const Model& m, const std::vector<Literal>& clause) {
  const RelationProps p = relation_props(m.relation);
  if (!p.refl || !p.trans || !p.antisym) return false;
  if (m.theory == Theory::kLinear && !p.total) return false;
  try {
    for (const Literal& l : clause) {
      const Element x = m.assignment.at(l.atom.lhs);
      const Element y = m.assignment.at(l.atom.rhs);
      if (!m.relation.in_carrier(x) || !m.relation.in_carrier(y)) return false;
      if (!eval_literal(m.relation, m.assignment, l)) return false;
    }
  } catch (const EvalError&) {
    return false;
  }
  return true;
}

}  // namespace orderproof
