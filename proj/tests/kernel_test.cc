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


#include "orderproof/kernel.h"

#include <gtest/gtest.h>

#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

using Kind = CheckError::Kind;

Kind refutation_error(const Formula& goal, const PropProof& p,
                      Theory t = Theory::kPartial) {
  try {
    check_refutation(goal, p, t);
  } catch (const CheckError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "certificate was accepted";
  return Kind::kNotFalse;
}

TEST(AtomProof, Rules) {
  const std::set<Literal> hyps{le(0, 1), le(1, 2), eq(2, 3)};
  EXPECT_EQ(check_atom_proof(hyps, CertProof::assm(le(0, 1))), le(0, 1));
  EXPECT_EQ(check_atom_proof(hyps, CertProof::refl(v(7))), le(7, 7));
  EXPECT_EQ(check_atom_proof(hyps, CertProof::eqe1(eq(2, 3))), le(2, 3));
  EXPECT_EQ(check_atom_proof(hyps, CertProof::eqe2(eq(2, 3))), le(3, 2));
  const CertProof chain = CertProof::trans(
      CertProof::trans(CertProof::assm(le(0, 1)), CertProof::assm(le(1, 2))),
      CertProof::eqe1(eq(2, 3)));
  EXPECT_EQ(check_atom_proof(hyps, chain), le(0, 3));
  const CertProof back =
      CertProof::trans(CertProof::eqe2(eq(2, 3)), CertProof::refl(v(2)));
  EXPECT_EQ(check_atom_proof(hyps, CertProof::antisym(CertProof::eqe1(eq(2, 3)), back)),
            eq(2, 3));
}

TEST(AtomProof, Failures) {
  const std::set<Literal> hyps{le(0, 1), le(2, 3), nle(1, 0)};
  auto kind_of = [&](const CertProof& p) {
    try {
      check_atom_proof(hyps, p);
    } catch (const CheckError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "accepted";
    return Kind::kNotFalse;
  };
  EXPECT_EQ(kind_of(CertProof::assm(le(1, 0))), Kind::kMissingAssumption);
  EXPECT_EQ(kind_of(CertProof::assm(eq(0, 1))), Kind::kRuleShape);
  EXPECT_EQ(kind_of(CertProof::trans(CertProof::assm(le(0, 1)), CertProof::assm(le(2, 3)))),
            Kind::kVariableMismatch);
  EXPECT_EQ(kind_of(CertProof::eqe1(neq(0, 1))), Kind::kPolarityMismatch);
  EXPECT_EQ(kind_of(CertProof::eqe1(le(0, 1))), Kind::kRuleShape);
  EXPECT_EQ(kind_of(CertProof::contr(le(0, 1), CertProof::assm(le(0, 1)))),
            Kind::kPolarityMismatch);
  EXPECT_EQ(kind_of(CertProof::contr(nle(1, 0), CertProof::assm(le(0, 1)))),
            Kind::kRuleShape);
}

TEST(AtomProof, ContradictionYieldsFalse) {
  const std::set<Literal> hyps{le(0, 1), le(1, 0), neq(0, 1)};
  const CertProof p = CertProof::contr(
      neq(0, 1),
      CertProof::antisym(CertProof::assm(le(0, 1)), CertProof::assm(le(1, 0))));
  EXPECT_EQ(check_atom_proof(hyps, p), kFls);
}

TEST(ApplyConv, AtomRules) {
  EXPECT_EQ(apply_conv(ConvProof::less_le(), A(lt(0, 1))),
            And(A(le(0, 1)), A(neq(0, 1))));
  EXPECT_EQ(apply_conv(ConvProof::nless_le(), A(nlt(0, 1))),
            Or(A(nle(0, 1)), A(eq(0, 1))));
  EXPECT_EQ(apply_conv(ConvProof::nle_conv(), A(nle(0, 1))),
            And(A(neq(0, 1)), A(le(1, 0))));
  EXPECT_EQ(apply_conv(ConvProof::nless_conv(), A(nlt(0, 1))), A(le(1, 0)));
  EXPECT_EQ(apply_conv(ConvProof::all_conv(), A(nlt(0, 1))), A(nlt(0, 1)));
  EXPECT_THROW(apply_conv(ConvProof::less_le(), A(le(0, 1))), ConversionError);
}

TEST(ApplyConv, StructuralRules) {
  using R = ConvProof::Rule;
  const Formula a = A(le(0, 1)), b = A(eq(1, 2)), c = A(nle(2, 0));
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kNegAtomConv), Not(a)), A(nle(0, 1)));
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kNegNegConv), Not(Not(a))), a);
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kNegAndConv), Not(And(a, b))),
            Or(Not(a), Not(b)));
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kNegOrConv), Not(Or(a, b))),
            And(Not(a), Not(b)));
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kAndOrLConv), And(Or(a, b), c)),
            Or(And(a, c), And(b, c)));
  EXPECT_EQ(apply_conv(ConvProof::leaf(R::kAndOrRConv), And(a, Or(b, c))),
            Or(And(a, b), And(a, c)));
  EXPECT_EQ(apply_conv(ConvProof::arg_conv(ConvProof::leaf(R::kNegNegConv)),
                       Not(Not(Not(a)))),
            Not(a));
  EXPECT_EQ(apply_conv(ConvProof::binop_conv(ConvProof::all_conv(),
                                             ConvProof::atom_conv(ConvProof::less_le())),
                       Or(a, A(lt(3, 4)))),
            Or(a, And(A(le(3, 4)), A(neq(3, 4)))));
  EXPECT_THROW(apply_conv(ConvProof::leaf(R::kNegOrConv), Not(And(a, b))),
               ConversionError);
}

TEST(Refutation, ConjunctionWithContradiction) {
  // x <= y & ~(x <= y)
  const Formula goal = And(A(le(0, 1)), A(nle(0, 1)));
  const PropProof p = PropProof::conj_e(
      A(le(0, 1)), A(nle(0, 1)),
      PropProof::lift(CertProof::contr(nle(0, 1), CertProof::assm(le(0, 1)))));
  EXPECT_NO_THROW(check_refutation(goal, p, Theory::kPartial));
  EXPECT_EQ(refutation_error(And(A(le(0, 1)), A(le(1, 0))), p),
            Kind::kMissingAssumption);
}

TEST(Refutation, DisjunctionNeedsBothBranches) {
  const Formula l = A(neq(0, 0));
  const Formula r = A(nle(1, 1));
  const PropProof pl = PropProof::lift(
      CertProof::contr(neq(0, 0), CertProof::antisym(CertProof::refl(v(0)),
                                                      CertProof::refl(v(0)))));
  const PropProof pr =
      PropProof::lift(CertProof::contr(nle(1, 1), CertProof::refl(v(1))));
  EXPECT_NO_THROW(check_refutation(Or(l, r), PropProof::disj_e(l, r, pl, pr),
                                   Theory::kPartial));
  // Using the left proof in the right branch needs ~(v0 = v0) there.
  EXPECT_EQ(refutation_error(Or(l, r), PropProof::disj_e(l, r, pl, pl)),
            Kind::kMissingAssumption);
}

TEST(Refutation, BranchMismatchAndNotFalse) {
  const Formula l = A(le(0, 1));
  const Formula r = A(le(1, 2));
  EXPECT_EQ(refutation_error(Or(l, r), PropProof::disj_e(
                                           l, r, PropProof::lift(CertProof::assm(le(0, 1))),
                                           PropProof::lift(CertProof::assm(le(1, 2))))),
            Kind::kBranchMismatch);
  EXPECT_EQ(refutation_error(l, PropProof::lift(CertProof::assm(le(0, 1)))),
            Kind::kNotFalse);
}

TEST(Refutation, ConversionAndTheoryGate) {
  // ~(x <= y) & ~(y <= x) is unsat only over linear orders.
  const Formula goal = And(A(nle(0, 1)), A(nle(1, 0)));
  const ConvProof c = ConvProof::binop_conv(ConvProof::atom_conv(ConvProof::nle_conv()),
                                            ConvProof::all_conv());
  const Formula converted = And(And(A(neq(0, 1)), A(le(1, 0))), A(nle(1, 0)));
  const PropProof body = PropProof::conj_e(
      And(A(neq(0, 1)), A(le(1, 0))), A(nle(1, 0)),
      PropProof::conj_e(A(neq(0, 1)), A(le(1, 0)),
                        PropProof::lift(CertProof::contr(
                            nle(1, 0), CertProof::assm(le(1, 0))))));
  const PropProof p = PropProof::conv(goal, c, body);
  EXPECT_EQ(apply_conv(c, goal), converted);
  EXPECT_NO_THROW(check_refutation(goal, p, Theory::kLinear));
  EXPECT_EQ(refutation_error(goal, p, Theory::kPartial), Kind::kTheory);
  EXPECT_EQ(refutation_error(goal, PropProof::conv(goal, ConvProof::less_le(), body),
                             Theory::kLinear),
            Kind::kConversion);
}

TEST(Refutation, ErrorPathNamesTheFailingNode) {
  const Formula goal = And(A(le(0, 1)), A(nle(0, 1)));
  const PropProof p = PropProof::conj_e(
      A(le(0, 1)), A(nle(0, 1)),
      PropProof::lift(CertProof::contr(
          nle(0, 1), CertProof::trans(CertProof::assm(le(0, 1)),
                                      CertProof::assm(le(1, 1))))));
  try {
    check_refutation(goal, p, Theory::kPartial);
    FAIL() << "accepted";
  } catch (const CheckError& e) {
    EXPECT_EQ(e.where(), "conje/lift/contr.1/trans.2/assm");
  }
}

}  // namespace
}  // namespace orderproof
