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


#include "orderproof/rewrite.h"

#include <gtest/gtest.h>

#include <random>

#include "orderproof/harness.h"
#include "orderproof/kernel.h"
#include "orderproof/oracle.h"
#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

bool has_neg(const Formula& f) {
  if (f.is_atom()) return false;
  if (f.is_neg()) return true;
  return has_neg(f.left()) || has_neg(f.right());
}

bool has_atom(const Formula& f, bool (*pred)(const Literal&)) {
  if (f.is_atom()) return pred(f.literal());
  if (f.is_neg()) return has_atom(f.left(), pred);
  return has_atom(f.left(), pred) || has_atom(f.right(), pred);
}

TEST(Deless, Partial) {
  EXPECT_EQ(deless_partial(lt(0, 1)), And(A(le(0, 1)), A(neq(0, 1))));
  EXPECT_EQ(deless_partial(nlt(0, 1)), Or(A(nle(0, 1)), A(eq(0, 1))));
  EXPECT_EQ(deless_partial(nle(0, 1)), A(nle(0, 1)));
  EXPECT_EQ(deless_partial(eq(0, 1)), A(eq(0, 1)));
  EXPECT_EQ(deless_partial_prf(le(0, 1)), ConvProof::all_conv());
}

TEST(Deless, Linear) {
  EXPECT_EQ(deless_linear(lt(0, 1)), And(A(le(0, 1)), A(neq(0, 1))));
  EXPECT_EQ(deless_linear(nlt(0, 1)), A(le(1, 0)));
  EXPECT_EQ(deless_linear(nle(0, 1)), And(A(neq(0, 1)), A(le(1, 0))));
  EXPECT_EQ(deless_linear(neq(0, 1)), A(neq(0, 1)));
}

TEST(Deless, ProofsReproduceTheRewrite) {
  for (const Literal& l : all_literals(2)) {
    EXPECT_EQ(apply_conv(ConvProof::atom_conv(deless_partial_prf(l)), A(l)),
              deless_partial(l));
    EXPECT_EQ(apply_conv(ConvProof::atom_conv(deless_linear_prf(l)), A(l)),
              deless_linear(l));
  }
}

TEST(Amap, RewritesEveryLeaf) {
  const Formula phi = Or(A(lt(0, 1)), Not(And(A(nlt(1, 2)), A(le(2, 0)))));
  const Formula out = amap_fm(deless_partial, phi);
  EXPECT_EQ(out, Or(And(A(le(0, 1)), A(neq(0, 1))),
                    Not(And(Or(A(nle(1, 2)), A(eq(1, 2))), A(le(2, 0))))));
  EXPECT_EQ(apply_conv(amap_fm_prf(deless_partial_prf, phi), phi), out);
}

TEST(Nnf, PushesNegations) {
  const Formula phi = Not(Or(A(le(0, 1)), Not(And(A(eq(1, 2)), Not(A(lt(2, 0)))))));
  auto [nnf, c] = to_nnf(phi);
  EXPECT_EQ(nnf, And(A(nle(0, 1)), And(A(eq(1, 2)), A(nlt(2, 0)))));
  EXPECT_EQ(apply_conv(c, phi), nnf);
}

TEST(Dnf, Distributes) {
  const Formula a = A(le(0, 1)), b = A(le(1, 2)), c = A(le(2, 3)), d = A(le(3, 0));
  auto [dnf, cp] = to_dnf(And(Or(a, b), Or(c, d)));
  EXPECT_TRUE(is_dnf(dnf));
  EXPECT_EQ(apply_conv(cp, And(Or(a, b), Or(c, d))), dnf);
  EXPECT_EQ(disj_clauses(dnf).size(), 4u);
  EXPECT_EQ(conj_list(disj_clauses(dnf)[0]), (std::vector<Literal>{le(0, 1), le(2, 3)}));
  EXPECT_EQ(conj_list(disj_clauses(dnf)[3]), (std::vector<Literal>{le(1, 2), le(3, 0)}));
}

TEST(Dnf, ShapePredicates) {
  const Formula a = A(le(0, 1)), b = A(le(1, 2));
  EXPECT_TRUE(is_clause(And(a, And(b, a))));
  EXPECT_FALSE(is_clause(And(a, Or(a, b))));
  EXPECT_TRUE(is_dnf(Or(And(a, b), a)));
  EXPECT_FALSE(is_dnf(Not(a)));
  EXPECT_THROW(conj_list(Or(a, b)), StructureError);
  EXPECT_EQ(disj_clauses(Or(Or(a, b), And(a, b))).size(), 3u);
}

// Property: each certified transformation reproduces its output under the
// kernel and preserves satisfiability in both theories.
TEST(Rewrite, RandomFormulasStayEquisatisfiable) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 400; ++i) {
    const Formula phi = random_formula(rng, 4, 3);
    auto [nnf, c_nnf] = to_nnf(phi);
    ASSERT_EQ(apply_conv(c_nnf, phi), nnf);
    ASSERT_FALSE(has_neg(nnf));
    for (Theory t : {Theory::kPartial, Theory::kLinear}) {
      const Formula d = amap_fm(deless_for(t), nnf);
      ASSERT_EQ(apply_conv(amap_fm_prf(deless_prf_for(t), nnf), nnf), d);
      auto [dnf, c_dnf] = to_dnf(d);
      ASSERT_EQ(apply_conv(c_dnf, d), dnf);
      ASSERT_TRUE(is_dnf(dnf));
      ASSERT_FALSE(has_atom(dnf, [](const Literal& l) {
        return l.atom.kind == AtomKind::kLt;
      }));
      if (t == Theory::kLinear) {
        ASSERT_FALSE(has_atom(dnf, [](const Literal& l) {
          return !l.positive && l.atom.kind == AtomKind::kLe;
        }));
      }
      const std::vector<VarId> vars = vars_of(phi);
      ASSERT_EQ(brute_sat(phi, t, vars), brute_sat(dnf, t, vars)) << to_string(phi);
    }
  }
}

// Property: conversions are equivalences model by model, not just
// equisatisfiable. Over every poset on three elements (chains for the
// linear-only rules) and every valuation.
TEST(Rewrite, ConversionsPreserveTruthInEveryModel) {
  std::mt19937_64 rng(17);
  const std::vector<Relation>& posets = enumerate_posets(3);
  for (int i = 0; i < 60; ++i) {
    const Formula phi = random_formula(rng, 3, 3);
    auto [nnf, c1] = to_nnf(phi);
    for (Theory t : {Theory::kPartial, Theory::kLinear}) {
      const Formula d = amap_fm(deless_for(t), nnf);
      auto [dnf, c2] = to_dnf(d);
      for (const Relation& r : posets) {
        if (t == Theory::kLinear && !is_linear_order(r)) continue;
        for (int code = 0; code < 27; ++code) {
          Valuation val;
          val.set(VarId(0), code % 3);
          val.set(VarId(1), code / 3 % 3);
          val.set(VarId(2), code / 9);
          const bool truth = eval_formula(r, val, phi);
          ASSERT_EQ(eval_formula(r, val, nnf), truth) << to_string(phi);
          ASSERT_EQ(eval_formula(r, val, dnf), truth) << to_string(phi);
        }
      }
    }
  }
}

}  // namespace
}  // namespace orderproof
