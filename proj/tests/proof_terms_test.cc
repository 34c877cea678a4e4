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


#include "orderproof/proof_terms.h"

#include <gtest/gtest.h>

#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

TEST(CertProof, AccessorsAndSize) {
  const CertProof a = CertProof::assm(le(0, 1));
  const CertProof b = CertProof::eqe1(eq(1, 2));
  const CertProof t = CertProof::trans(a, b);
  EXPECT_EQ(t.rule(), CertProof::Rule::kTrans);
  EXPECT_EQ(t.first(), a);
  EXPECT_EQ(t.second(), b);
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(CertProof::refl(v(4)).var(), v(4));
  const CertProof c = CertProof::contr(nle(0, 2), t);
  EXPECT_EQ(c.literal(), nle(0, 2));
  EXPECT_EQ(c.size(), 4u);
}

TEST(CertProof, SharedSubtermsCountEachTime) {
  CertProof p = CertProof::refl(v(0));
  for (int i = 0; i < 20; ++i) p = CertProof::trans(p, p);
  EXPECT_EQ(p.size(), (1u << 21) - 1);
}

TEST(ConvProof, LeavesAndCombinators) {
  const ConvProof c = ConvProof::then_conv(
      ConvProof::atom_conv(ConvProof::less_le()),
      ConvProof::binop_conv(ConvProof::all_conv(), ConvProof::all_conv()));
  EXPECT_EQ(c.rule(), ConvProof::Rule::kThenConv);
  EXPECT_FALSE(c.is_leaf());
  EXPECT_TRUE(c.first().first().is_leaf());
  EXPECT_EQ(c.size(), 6u);
  EXPECT_TRUE(is_linear_only(ConvProof::Rule::kNleConv));
  EXPECT_TRUE(is_linear_only(ConvProof::Rule::kNlessConv));
  EXPECT_FALSE(is_linear_only(ConvProof::Rule::kLessLe));
  EXPECT_FALSE(is_linear_only(ConvProof::Rule::kNegNegConv));
  EXPECT_TRUE(is_leaf_rule(ConvProof::Rule::kAndOrLConv));
  EXPECT_FALSE(is_leaf_rule(ConvProof::Rule::kArgConv));
}

TEST(PropProof, Accessors) {
  const Formula c = A(le(0, 1));
  const Formula d = A(nle(0, 1));
  const PropProof body = PropProof::lift(
      CertProof::contr(nle(0, 1), CertProof::assm(le(0, 1))));
  const PropProof ce = PropProof::conj_e(c, d, body);
  EXPECT_EQ(ce.lhs(), c);
  EXPECT_EQ(ce.rhs(), d);
  EXPECT_EQ(ce.body(), body);
  const PropProof de = PropProof::disj_e(c, d, body, body);
  EXPECT_EQ(de.body2(), body);
  const PropProof cv = PropProof::conv(c, ConvProof::all_conv(), body);
  EXPECT_EQ(cv.conversion(), ConvProof::all_conv());
  EXPECT_EQ(cv.lhs(), c);
  EXPECT_NE(ce, de);
}

TEST(PropProof, RuleNames) {
  EXPECT_EQ(rule_name(PropProof::Rule::kDisjE), "DisjE");
  EXPECT_EQ(rule_name(CertProof::Rule::kAntisym), "AntisymP");
  EXPECT_EQ(rule_name(ConvProof::Rule::kNlessLe), "NlessLe");
}

}  // namespace
}  // namespace orderproof
