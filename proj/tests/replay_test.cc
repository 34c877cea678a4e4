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


#include "orderproof/replay.h"

#include <gtest/gtest.h>

#include <functional>
#include <random>

#include "orderproof/closure.h"
#include "orderproof/harness.h"
#include "orderproof/kernel.h"
#include "orderproof/oracle.h"
#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

GTrm c(const char* name) { return GTrm::constant(name); }
GTrm app(GTrm f, GTrm x) { return GTrm::app(std::move(f), std::move(x)); }
GTrm var(std::uint32_t i) { return GTrm::var(v(i)); }

ReplayError::Kind replay_error(const Formula& goal, const GPrf& p,
                               Theory t = Theory::kPartial) {
  try {
    check_replay(goal, p, t);
  } catch (const ReplayError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "proof term was accepted";
  return ReplayError::Kind::kNotFalse;
}

TEST(Encoding, LiteralsAndFormulas) {
  EXPECT_EQ(encode_literal(le(0, 1)), app(app(c("le"), var(0)), var(1)));
  EXPECT_EQ(encode_literal(neq(2, 3)), app(c("not"), app(app(c("eq"), var(2)), var(3))));
  const Formula f = Or(And(A(lt(0, 1)), A(nle(1, 0))), Not(A(eq(0, 0))));
  EXPECT_EQ(decode_formula_term(encode_formula(f)), f);
  EXPECT_EQ(serialize_gtrm(encode_formula(A(le(0, 1)))), "(atom ((le v0) v1))");
  EXPECT_FALSE(decode_literal_term(app(app(c("le"), var(0)), GTrm::var(VarId(kVarBinderBase)))));
  EXPECT_FALSE(decode_formula_term(app(c("atom"), c("le"))));
}

TEST(Sigma, TheoryGating) {
  const auto& partial = sigma(Theory::kPartial);
  const auto& linear = sigma(Theory::kLinear);
  for (const char* name : {"refl", "trans", "antisym", "eqe1", "eqe2", "contr_le", "contr_eq",
                           "conje", "disje", "lessle", "nlessle"}) {
    EXPECT_TRUE(partial.contains(name)) << name;
    EXPECT_TRUE(linear.contains(name)) << name;
  }
  EXPECT_FALSE(partial.contains("nle"));
  EXPECT_FALSE(partial.contains("nless"));
  EXPECT_TRUE(linear.contains("nle"));
  EXPECT_TRUE(linear.contains("nless"));
}

TEST(Replay, TransitivityChain) {
  // x <= y, y <= z |- x <= z, by instantiating trans.
  ReplayContext gamma;
  const MetaProp xy = MetaProp::lit(le(0, 1));
  const MetaProp yz = MetaProp::lit(le(1, 2));
  gamma.emplace(xy.term(), xy);
  gamma.emplace(yz.term(), yz);
  const GPrf inst = GPrf::appt(GPrf::appt(GPrf::appt(GPrf::pthm("trans"), var(0)), var(1)), var(2));
  const GPrf p = GPrf::appp(GPrf::appp(inst, GPrf::bound(xy.term())), GPrf::bound(yz.term()));
  EXPECT_EQ(replay(gamma, p, Theory::kPartial), MetaProp::lit(le(0, 2)));
  const GPrf swapped =
      GPrf::appp(GPrf::appp(inst, GPrf::bound(yz.term())), GPrf::bound(xy.term()));
  try {
    replay(gamma, swapped, Theory::kPartial);
    FAIL();
  } catch (const ReplayError& e) {
    EXPECT_EQ(e.kind(), ReplayError::Kind::kPremiseMismatch);
  }
}

TEST(Replay, ErrorKinds) {
  const Formula goal = A(le(0, 1));
  EXPECT_EQ(replay_error(goal, GPrf::pthm("nope")), ReplayError::Kind::kUnknownConstant);
  EXPECT_EQ(replay_error(goal, GPrf::bound(encode_formula(A(le(1, 0))))),
            ReplayError::Kind::kUnbound);
  EXPECT_EQ(replay_error(goal, GPrf::bound(encode_formula(goal))),
            ReplayError::Kind::kNotFalse);
  EXPECT_EQ(replay_error(goal, GPrf::appp(GPrf::bound(encode_formula(goal)),
                                          GPrf::bound(encode_formula(goal)))),
            ReplayError::Kind::kNotImplication);
  EXPECT_EQ(replay_error(goal, GPrf::appt(GPrf::bound(encode_formula(goal)), var(0))),
            ReplayError::Kind::kNotForall);
  // A formula where a variable is expected.
  EXPECT_EQ(replay_error(goal, GPrf::appt(GPrf::pthm("refl"), encode_formula(goal))),
            ReplayError::Kind::kBadInstance);
  EXPECT_EQ(replay_error(goal, GPrf::convp(encode_formula(goal),
                                           GPrf::pthm("lessle"),
                                           GPrf::bound(encode_formula(goal)))),
            ReplayError::Kind::kConversion);
}

TEST(Replay, LinearConversionsAbsentUnderPartial) {
  const Formula goal = And(A(nle(0, 1)), A(nle(1, 0)));
  Verdict v = decide(goal, Theory::kLinear);
  ASSERT_TRUE(std::holds_alternative<Unsat>(v));
  const GPrf p = export_proof(std::get<Unsat>(v).certificate).proof;
  EXPECT_NO_THROW(check_replay(goal, p, Theory::kLinear));
  EXPECT_EQ(replay_error(goal, p, Theory::kPartial), ReplayError::Kind::kUnknownConstant);
}

TEST(Rpc, InterpretsConversions) {
  const Rewriter r = rpc(export_conv(ConvProof::binop_conv(
                             ConvProof::atom_conv(ConvProof::less_le()),
                             ConvProof::all_conv())),
                         Theory::kPartial);
  EXPECT_EQ(r(And(A(lt(0, 1)), A(le(1, 2)))),
            And(And(A(le(0, 1)), A(neq(0, 1))), A(le(1, 2))));
  EXPECT_THROW(r(Not(And(A(lt(0, 1)), A(le(1, 2))))), ReplayError);
  EXPECT_THROW(r(And(A(le(0, 1)), A(le(1, 2)))), ReplayError);
  EXPECT_THROW(rpc(GPrf::pthm("trans"), Theory::kPartial), ReplayError);
}

TEST(Export, RejectsIllFormedContradictions) {
  EXPECT_THROW(export_proof(PropProof::lift(
                   CertProof::contr(le(0, 1), CertProof::assm(le(0, 1))))),
               Error);
  EXPECT_THROW(export_proof(PropProof::lift(
                   CertProof::contr(nlt(0, 1), CertProof::assm(le(0, 1))))),
               Error);
}

TEST(Export, ConclusionMatchesStructuredKernel) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int i = 0; i < 300; ++i) {
    const Formula phi = random_formula(rng, 4, 4);
    for (Theory t : {Theory::kPartial, Theory::kLinear}) {
      Verdict v = decide(phi, t);
      const auto* u = std::get_if<Unsat>(&v);
      if (!u) continue;
      const Exported e = export_proof(u->certificate);
      EXPECT_EQ(e.conclusion, check_prop_proof({phi}, u->certificate, t));
      EXPECT_NO_THROW(check_replay(phi, e.proof, t)) << to_string(phi);
      EXPECT_EQ(parse_gprf(serialize_gprf(e.proof)), e.proof);
      ++checked;
    }
  }
  EXPECT_GT(checked, 20);
}

TEST(GPrfText, ParseErrors) {
  EXPECT_EQ(parse_gprf("(appt (pthm refl) v3)"),
            GPrf::appt(GPrf::pthm("refl"), var(3)));
  EXPECT_THROW(parse_gprf("(appt (pthm refl))"), ParseError);
  EXPECT_THROW(parse_gprf("(pthm)"), ParseError);
  EXPECT_THROW(parse_gprf("(frob x)"), ParseError);
}

// Truth of a closed meta-proposition in one model.
bool holds(const MetaProp& p, const Relation& r, const Valuation& val) {
  auto formula = [](const GTrm& t) {
    auto f = decode_formula_term(t);
    if (!f) throw Error("undecodable " + to_string(t));
    return *f;
  };
  switch (p.kind()) {
    case MetaProp::Kind::kObj: return eval_formula(r, val, formula(p.term()));
    case MetaProp::Kind::kImplies:
      return !holds(p.left(), r, val) || holds(p.right(), r, val);
    case MetaProp::Kind::kEquiv:
      return eval_formula(r, val, formula(p.term())) ==
             eval_formula(r, val, formula(p.rhs()));
    case MetaProp::Kind::kAll: break;
  }
  throw Error("open proposition " + to_string(p));
}

// Every closed instance of `axiom` with variable binders over v0..v2 and
// formula binders over a few sample formulas.
void instances(const MetaProp& axiom, const std::function<void(const MetaProp&)>& f) {
  if (axiom.kind() != MetaProp::Kind::kAll) {
    f(axiom);
    return;
  }
  const VarId b = axiom.binder();
  if (b.value >= kPropBinderBase) {
    for (const Formula& g : {A(le(0, 1)), A(neq(1, 2)), Or(A(lt(2, 0)), A(eq(0, 0)))}) {
      instances(subst(axiom.left(), b, encode_formula(g)), f);
    }
  } else {
    for (std::uint32_t i = 0; i < 3; ++i) instances(subst(axiom.left(), b, var(i)), f);
  }
}

// Valid in every model of the theory with at most three elements.
bool valid(const MetaProp& axiom, Theory t) {
  bool ok = true;
  instances(axiom, [&](const MetaProp& inst) {
    for (int k = 1; k <= 3; ++k) {
      for (const Relation& r : enumerate_posets(k)) {
        if (t == Theory::kLinear && !is_linear_order(r)) continue;
        int codes = k * k * k;
        for (int code = 0; code < codes; ++code) {
          Valuation val;
          val.set(v(0), code % k);
          val.set(v(1), code / k % k);
          val.set(v(2), code / (k * k));
          ok = ok && holds(inst, r, val);
        }
      }
    }
  });
  return ok;
}

TEST(Sigma, EveryAxiomIsValid) {
  for (const auto& [name, axiom] : sigma(Theory::kPartial)) {
    EXPECT_TRUE(valid(axiom, Theory::kPartial)) << name;
  }
  for (const auto& [name, axiom] : sigma(Theory::kLinear)) {
    EXPECT_TRUE(valid(axiom, Theory::kLinear)) << name;
  }
  // The linear-only conversions fail on some partial order.
  EXPECT_FALSE(valid(sigma(Theory::kLinear).at("nle"), Theory::kPartial));
  EXPECT_FALSE(valid(sigma(Theory::kLinear).at("nless"), Theory::kPartial));
}

TEST(Sigma, ApptMatchesDirectSubstitution) {
  for (const auto& [name, axiom] : sigma(Theory::kLinear)) {
    GPrf p = GPrf::pthm(name);
    MetaProp expected = axiom;
    std::uint32_t next = 0;
    while (expected.kind() == MetaProp::Kind::kAll) {
      const VarId b = expected.binder();
      const GTrm t = b.value >= kPropBinderBase
                         ? encode_formula(A(le(next, next + 1)))
                         : var(next);
      ++next;
      p = GPrf::appt(p, t);
      expected = subst(expected.left(), b, t);
    }
    EXPECT_EQ(replay({}, p, Theory::kLinear), expected) << name;
  }
}

}  // namespace
}  // namespace orderproof
