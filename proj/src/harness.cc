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


#include "orderproof/harness.h"

#include <algorithm>
#include <numeric>

#include "orderproof/kernel.h"
#include "orderproof/oracle.h"
#include "orderproof/replay.h"

namespace orderproof {

std::vector<Literal> all_literals(int nvars) {
  std::vector<Literal> out;
  for (AtomKind k : {AtomKind::kLe, AtomKind::kLt, AtomKind::kEq}) {
    for (bool positive : {true, false}) {
      for (int x = 0; x < nvars; ++x) {
        for (int y = 0; y < nvars; ++y) {
          out.push_back({positive, OrderAtom{k, VarId(x), VarId(y)}});
        }
      }
    }
  }
  return out;
}

std::size_t for_each_canonical_sequence(
    int nvars, int max_len,
    const std::function<void(const std::vector<Literal>&)>& f) {
  const std::vector<Literal> lits = all_literals(nvars);
  const int n = static_cast<int>(lits.size());
  const int pairs = nvars * nvars;

  // rename[p][i]: index of literal i after applying permutation p.
  std::vector<int> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> rename;
  do {
    std::vector<int> r(n);
    for (int i = 0; i < n; ++i) {
      const int block = i / pairs;
      const int x = (i % pairs) / nvars;
      const int y = i % nvars;
      r[i] = block * pairs + perm[x] * nvars + perm[y];
    }
    rename.push_back(std::move(r));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::size_t calls = 0;
  std::vector<int> idx;
  std::vector<int> image;
  std::vector<Literal> seq;
  auto canonical = [&] {
    for (const auto& r : rename) {
      image.clear();
      for (int i : idx) image.push_back(r[i]);
      std::sort(image.begin(), image.end());
      if (image < idx) return false;
    }
    return true;
  };
  std::function<void(int)> extend = [&](int start) {
    if (!idx.empty() && canonical()) {
      seq.clear();
      for (int i : idx) seq.push_back(lits[i]);
      f(seq);
      ++calls;
    }
    if (static_cast<int>(idx.size()) == max_len) return;
    for (int i = start; i < n; ++i) {
      idx.push_back(i);
      extend(i);
      idx.pop_back();
    }
  };
  extend(0);
  return calls;
}

Literal random_literal(std::mt19937_64& rng, int nvars) {
  std::uniform_int_distribution<int> var(0, nvars - 1);
  std::uniform_int_distribution<int> kind(0, 2);
  std::bernoulli_distribution coin(0.5);
  const auto k = static_cast<AtomKind>(kind(rng));
  const VarId x(var(rng));
  const VarId y(var(rng));
  return {coin(rng), OrderAtom{k, x, y}};
}

Formula random_formula(std::mt19937_64& rng, int max_depth, int nvars) {
  std::bernoulli_distribution leaf(0.3);
  if (max_depth == 0 || leaf(rng)) {
    return Formula::atom(random_literal(rng, nvars));
  }
  std::uniform_int_distribution<int> op(0, 4);
  switch (op(rng)) {
    case 0:
    case 1:
      return Formula::conj(random_formula(rng, max_depth - 1, nvars),
                           random_formula(rng, max_depth - 1, nvars));
    case 2:
    case 3:
      return Formula::disj(random_formula(rng, max_depth - 1, nvars),
                           random_formula(rng, max_depth - 1, nvars));
    default: return Formula::neg(random_formula(rng, max_depth - 1, nvars));
  }
}

namespace {

std::string check_model(const Formula& phi, Theory theory, const Model& m) {
  if (m.theory != theory) return "model has the wrong theory";
  const RelationProps p = relation_props(m.relation);
  if (!p.refl || !p.trans || !p.antisym) return "model relation is not a partial order";
  if (theory == Theory::kLinear && !p.total) return "model relation is not total";
  try {
    for (VarId x : vars_of(phi)) {
      if (!m.relation.in_carrier(m.assignment.at(x))) {
        return "variable mapped outside the carrier";
      }
    }
    if (!eval_formula(m.relation, m.assignment, phi)) {
      return "model does not satisfy the formula";
    }
  } catch (const EvalError& e) {
    return std::string("model evaluation failed: ") + e.what();
  }
  return "";
}

}  // namespace

CaseOutcome check_case(const Formula& phi, Theory theory, ClosureAlgorithm alg) {
  CaseOutcome out;
  auto fail = [&](FailureKind k, std::string what) {
    out.kind = k;
    out.failure = std::move(what);
    return out;
  };
  const bool expected_sat = brute_sat(phi, theory);
  try {
    Verdict v = decide(phi, theory, {alg});
    if (auto* u = std::get_if<Unsat>(&v)) {
      out.unsat = true;
      if (expected_sat) {
        return fail(FailureKind::kDisagreement, "decide says unsat, oracle says sat");
      }
      try {
        check_refutation(phi, u->certificate, theory);
      } catch (const Error& e) {
        return fail(FailureKind::kStructured,
                    std::string("structured kernel rejected: ") + e.what());
      }
      try {
        check_replay(phi, export_proof(u->certificate).proof, theory);
      } catch (const Error& e) {
        return fail(FailureKind::kReplay,
                    std::string("replay kernel rejected: ") + e.what());
      }
    } else {
      const Sat& s = std::get<Sat>(v);
      if (!expected_sat) {
        return fail(FailureKind::kDisagreement, "decide says sat, oracle says unsat");
      }
      std::string why = check_model(phi, theory, s.model);
      if (!why.empty()) return fail(FailureKind::kModel, std::move(why));
    }
  } catch (const Error& e) {
    return fail(FailureKind::kException, std::string("decide threw: ") + e.what());
  }
  return out;
}

void SuiteStats::add(const CaseOutcome& o, const Formula& phi, Theory theory) {
  ++cases;
  ++(o.unsat ? unsat : sat);
  if (o.kind == FailureKind::kNone) return;
  ++failures;
  switch (o.kind) {
    case FailureKind::kDisagreement: ++disagreements; break;
    case FailureKind::kStructured:
    case FailureKind::kReplay: ++certificate_failures; break;
    case FailureKind::kModel: ++model_failures; break;
    case FailureKind::kException: ++exceptions; break;
    case FailureKind::kNone: break;
  }
  if (examples.size() < 5) {
    examples.push_back(to_string(theory) + " " + to_string(phi) + ": " + o.failure);
  }
}

void SuiteStats::merge(const SuiteStats& o) {
  cases += o.cases;
  unsat += o.unsat;
  sat += o.sat;
  failures += o.failures;
  disagreements += o.disagreements;
  certificate_failures += o.certificate_failures;
  model_failures += o.model_failures;
  exceptions += o.exceptions;
  for (const std::string& e : o.examples) {
    if (examples.size() < 5) examples.push_back(e);
  }
}

SuiteStats run_exhaustive_suite(int nvars, int max_len, Theory theory,
                                ClosureAlgorithm alg) {
  SuiteStats stats;
  for_each_canonical_sequence(nvars, max_len, [&](const std::vector<Literal>& seq) {
    const Formula phi = conjunction_of(seq);
    stats.add(check_case(phi, theory, alg), phi, theory);
  });
  return stats;
}

SuiteStats run_random_suite(std::uint64_t seed, int count, int max_depth,
                            int nvars, Theory theory, ClosureAlgorithm alg) {
  std::mt19937_64 rng(seed);
  SuiteStats stats;
  for (int i = 0; i < count; ++i) {
    const Formula phi = random_formula(rng, max_depth, nvars);
    stats.add(check_case(phi, theory, alg), phi, theory);
  }
  return stats;
}

}  // namespace orderproof
