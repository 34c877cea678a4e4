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

#include <gtest/gtest.h>

#include "orderproof/closure.h"
#include "orderproof/harness.h"
#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

TEST(SymClasses, MinimumRepresentative) {
  const std::set<VarPair> keys{{v(2), v(1)}, {v(1), v(2)}, {v(0), v(1)}};
  const auto cls = sym_classes(keys, {v(0), v(1), v(2), v(3)});
  EXPECT_EQ(cls.at(v(0)), v(0));
  EXPECT_EQ(cls.at(v(1)), v(1));
  EXPECT_EQ(cls.at(v(2)), v(1));
  EXPECT_EQ(cls.at(v(3)), v(3));
}

TEST(PartialModel, QuotientOfPreorder) {
  const std::vector<Literal> clause{le(0, 1), le(1, 0), le(1, 2), nle(2, 0)};
  const Model m = build_partial_model(clause);
  EXPECT_EQ(m.theory, Theory::kPartial);
  EXPECT_EQ(m.assignment.at(v(0)), 0u);
  EXPECT_EQ(m.assignment.at(v(1)), 0u);
  EXPECT_EQ(m.assignment.at(v(2)), 2u);
  EXPECT_EQ(m.relation, Relation({0, 2}, {{0, 0}, {2, 2}, {0, 2}}));
  EXPECT_TRUE(verify_model(m, clause));
}

TEST(PartialModel, ExtraVariablesAreUnconstrained) {
  const Model m = build_partial_model({le(0, 1)}, {v(0), v(1), v(5)});
  EXPECT_EQ(m.assignment.at(v(5)), 5u);
  EXPECT_EQ(m.relation.carrier().size(), 3u);
}

TEST(PartialModel, Preconditions) {
  EXPECT_THROW(build_partial_model({lt(0, 1)}), InvariantError);
  EXPECT_THROW(build_partial_model({le(0, 1), nle(0, 1)}), InvariantError);
  EXPECT_THROW(build_linear_model({nle(0, 1)}), InvariantError);
}

TEST(LinearExtension, SmallestReadyFirst) {
  // 2 < 0 and an unrelated 1: order 1, 2, 0.
  const Relation r({0, 1, 2}, {{0, 0}, {1, 1}, {2, 2}, {2, 0}});
  const Relation l = linear_extension(r);
  EXPECT_TRUE(is_linear_order(l));
  EXPECT_TRUE(l.contains(1, 2));
  EXPECT_TRUE(l.contains(2, 0));
  EXPECT_FALSE(l.contains(0, 1));
  EXPECT_THROW(linear_extension(Relation({0, 1}, {{0, 0}, {1, 1}, {0, 1}, {1, 0}})),
               Error);
}

TEST(LinearModel, TotalAndSatisfying) {
  const std::vector<Literal> clause{le(2, 0), neq(0, 1), eq(3, 0)};
  const Model m = build_linear_model(clause);
  EXPECT_EQ(m.theory, Theory::kLinear);
  EXPECT_TRUE(is_linear_order(m.relation));
  EXPECT_TRUE(verify_model(m, clause));
}

TEST(VerifyModel, RejectsBadModels) {
  Valuation val;
  val.set(v(0), 0);
  val.set(v(1), 1);
  const Model antichain{Relation({0, 1}, {{0, 0}, {1, 1}}), val, Theory::kLinear};
  EXPECT_FALSE(verify_model(antichain, {neq(0, 1)}));
  const Model partial{antichain.relation, val, Theory::kPartial};
  EXPECT_TRUE(verify_model(partial, {neq(0, 1)}));
  EXPECT_FALSE(verify_model(partial, {le(0, 1)}));
  EXPECT_FALSE(verify_model(partial, {le(0, 2)}));
}

// Property: every consistent strict-free clause over three variables gets a
// verified model in each theory it qualifies for.
TEST(Models, ExhaustiveConsistentClauses) {
  int built = 0;
  for_each_canonical_sequence(3, 3, [&](const std::vector<Literal>& seq) {
    for (const Literal& l : seq) {
      if (l.atom.kind == AtomKind::kLt) return;
    }
    if (contr_list(seq)) return;
    const Model p = build_partial_model(seq);
    ASSERT_TRUE(verify_model(p, seq));
    ++built;
    for (const Literal& l : seq) {
      if (!l.positive && l.atom.kind == AtomKind::kLe) return;
    }
    ASSERT_TRUE(verify_model(build_linear_model(seq), seq));
  });
  EXPECT_GT(built, 100);
}

}  // namespace
}  // namespace orderproof
