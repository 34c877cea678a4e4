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

#include <gtest/gtest.h>

#include <random>

#include "orderproof/harness.h"
#include "orderproof/kernel.h"
#include "orderproof/oracle.h"
#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

std::set<VarPair> pairs(std::initializer_list<std::pair<int, int>> ps) {
  std::set<VarPair> out;
  for (auto [a, b] : ps) out.insert({v(a), v(b)});
  return out;
}

TEST(Leq1, MembersPerLiteral) {
  EXPECT_EQ(leq1_member_list(le(0, 1)).size(), 1u);
  const auto eqs = leq1_member_list(eq(0, 1));
  ASSERT_EQ(eqs.size(), 2u);
  EXPECT_EQ(eqs[0].first, (VarPair{v(0), v(1)}));
  EXPECT_EQ(eqs[1].second, CertProof::eqe2(eq(0, 1)));
  EXPECT_TRUE(leq1_member_list(lt(0, 1)).empty());
  EXPECT_TRUE(leq1_member_list(nle(0, 1)).empty());
  EXPECT_TRUE(leq1_member_list(neq(0, 1)).empty());
}

TEST(Leq1, FirstProofWins) {
  const ProofMap m = leq1_mapping({le(0, 1), eq(0, 1)});
  EXPECT_EQ(m.keys(), pairs({{0, 1}, {1, 0}}));
  EXPECT_EQ(*m.find({v(0), v(1)}), CertProof::assm(le(0, 1)));
}

TEST(Trancl, ChainAndCycle) {
  const ProofMap m = leq1_mapping({le(0, 1), le(1, 2), le(2, 3)});
  const auto expected = pairs({{0, 1}, {1, 2}, {2, 3}, {0, 2}, {1, 3}, {0, 3}});
  EXPECT_EQ(trancl_mapping(m).keys(), expected);
  EXPECT_EQ(trancl_floyd_warshall(m).keys(), expected);

  const ProofMap cyc = leq1_mapping({le(0, 1), le(1, 0)});
  EXPECT_EQ(trancl_mapping(cyc).keys(), pairs({{0, 1}, {1, 0}, {0, 0}, {1, 1}}));
  EXPECT_EQ(trancl_floyd_warshall(cyc).keys(), trancl_mapping(cyc).keys());
  EXPECT_TRUE(trancl_mapping(ProofMap{}).empty());
}

TEST(Trancl, StoredProofsProveTheirKey) {
  const std::vector<Literal> hyps{le(0, 1), eq(1, 2), le(2, 3), le(3, 0), le(4, 2)};
  const std::set<Literal> hs(hyps.begin(), hyps.end());
  for (ClosureAlgorithm alg : {ClosureAlgorithm::kNaive, ClosureAlgorithm::kFloydWarshall}) {
    const ProofMap c = trancl(leq1_mapping(hyps), alg);
    for (const auto& [key, proof] : c.entries()) {
      EXPECT_EQ(check_atom_proof(hs, proof),
                Literal::pos(OrderAtom::le(key.first, key.second)));
    }
  }
}

TEST(Membership, ReflexiveAndEquality) {
  const ProofMap c = trancl_mapping(leq1_mapping({le(0, 1), le(1, 0)}));
  EXPECT_EQ(is_in_leq(c, v(5), v(5)), CertProof::refl(v(5)));
  EXPECT_TRUE(is_in_leq(c, v(0), v(1)));
  EXPECT_FALSE(is_in_leq(c, v(0), v(2)));
  EXPECT_TRUE(is_in_eq(c, v(1), v(0)));
  EXPECT_FALSE(is_in_eq(trancl_mapping(leq1_mapping({le(0, 1)})), v(0), v(1)));
}

TEST(Contr, FindsTheFirstContradiction) {
  EXPECT_FALSE(contr_list({le(0, 1), le(1, 2), nle(2, 0)}));
  EXPECT_TRUE(contr_list({le(0, 1), le(1, 2), nle(0, 2)}));
  EXPECT_TRUE(contr_list({neq(3, 3)}));
  EXPECT_TRUE(contr_list({nle(3, 3)}));
  EXPECT_TRUE(contr_list({le(0, 1), le(1, 0), neq(1, 0)}));
  // Strict literals are invisible here; they are removed upstream.
  EXPECT_FALSE(contr_list({lt(0, 1), lt(1, 0)}));
  const Formula clause = And(And(A(le(0, 1)), A(le(1, 2))), A(nle(0, 2)));
  auto p = contr_fm_prf(clause);
  ASSERT_TRUE(p);
  EXPECT_NO_THROW(check_refutation(clause, *p, Theory::kPartial));
  EXPECT_THROW(contr_fm_prf(Not(A(le(0, 1)))), StructureError);
}

TEST(Contr, DisjunctionNeedsEveryClause) {
  const Formula bad = And(A(le(0, 1)), A(nle(0, 1)));
  const Formula good = A(le(0, 1));
  EXPECT_FALSE(contr_fm_prf(Or(bad, good)));
  auto p = contr_fm_prf(Or(bad, A(neq(2, 2))));
  ASSERT_TRUE(p);
  EXPECT_EQ(p->rule(), PropProof::Rule::kDisjE);
}

TEST(Decide, MotivatingExample) {
  // ~(x < y) & x = y & ~(x <= y)
  const Formula phi = And(And(A(nlt(0, 1)), A(eq(0, 1))), A(nle(0, 1)));
  for (Theory t : {Theory::kPartial, Theory::kLinear}) {
    Verdict v = decide(phi, t);
    ASSERT_TRUE(std::holds_alternative<Unsat>(v));
    EXPECT_NO_THROW(check_refutation(phi, std::get<Unsat>(v).certificate, t));
  }
  const Formula weaker = And(A(nlt(0, 1)), A(eq(0, 1)));
  Verdict v = decide(weaker, Theory::kPartial);
  ASSERT_TRUE(std::holds_alternative<Sat>(v));
  EXPECT_TRUE(eval_formula(std::get<Sat>(v).model.relation,
                           std::get<Sat>(v).model.assignment, weaker));
}

TEST(Decide, TheoriesDiffer) {
  // Incomparable elements exist only in partial orders.
  const Formula phi = And(A(nle(0, 1)), A(nle(1, 0)));
  EXPECT_TRUE(std::holds_alternative<Sat>(decide(phi, Theory::kPartial)));
  Verdict v = decide(phi, Theory::kLinear);
  ASSERT_TRUE(std::holds_alternative<Unsat>(v));
  EXPECT_THROW(check_refutation(phi, std::get<Unsat>(v).certificate, Theory::kPartial),
               CheckError);
}

TEST(Decide, NegatedStrictUnderLinearNeedsNnfFirst) {
  // ~(x <= y) reaches the literal rewrite only after negations are pushed.
  const Formula phi = And(Not(A(le(0, 1))), Not(A(le(1, 0))));
  EXPECT_TRUE(std::holds_alternative<Unsat>(decide(phi, Theory::kLinear)));
  const Formula psi = Not(Or(A(lt(0, 1)), Or(A(eq(0, 1)), A(lt(1, 0)))));
  EXPECT_TRUE(std::holds_alternative<Unsat>(decide(psi, Theory::kLinear)));
  EXPECT_TRUE(std::holds_alternative<Sat>(decide(psi, Theory::kPartial)));
}

TEST(Decide, SatReportsTheWitnessClause) {
  const Formula phi = Or(And(A(le(0, 1)), A(nle(0, 1))), A(lt(1, 0)));
  Verdict v = decide(phi, Theory::kPartial);
  ASSERT_TRUE(std::holds_alternative<Sat>(v));
  EXPECT_EQ(std::get<Sat>(v).clause_index, 1u);
}

TEST(Decide, AlgorithmsAgreeOnRandomFormulas) {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 300; ++i) {
    const Formula phi = random_formula(rng, 4, 4);
    for (Theory t : {Theory::kPartial, Theory::kLinear}) {
      const bool a = std::holds_alternative<Unsat>(decide(phi, t));
      const bool b = std::holds_alternative<Unsat>(
          decide(phi, t, {ClosureAlgorithm::kFloydWarshall}));
      ASSERT_EQ(a, b) << to_string(phi);
      ASSERT_EQ(a, !brute_sat(phi, t)) << to_string(phi);
    }
  }
}

}  // namespace
}  // namespace orderproof
