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


#include "orderproof/cert_io.h"

#include <gtest/gtest.h>

#include <random>

#include "orderproof/closure.h"
#include "orderproof/harness.h"
#include "support/builders.h"

namespace orderproof {
namespace {

using namespace testing;

TEST(CertIo, LiteralAndFormulaText) {
  EXPECT_EQ(serialize_literal(nlt(3, 12)), "(- lt v3 v12)");
  EXPECT_EQ(serialize_formula(And(A(le(0, 1)), Not(A(eq(1, 0))))),
            "(and (atom (+ le v0 v1)) (neg (atom (+ eq v1 v0))))");
  EXPECT_EQ(parse_formula_sexpr(" (or (atom (+ le v0 v1))\n (atom (- eq v2 v2))) "),
            Or(A(le(0, 1)), A(neq(2, 2))));
}

TEST(CertIo, CertificateText) {
  const PropProof p = PropProof::conv(
      A(lt(0, 0)), ConvProof::atom_conv(ConvProof::less_le()),
      PropProof::conj_e(A(le(0, 0)), A(neq(0, 0)),
                        PropProof::lift(CertProof::contr(
                            neq(0, 0), CertProof::antisym(CertProof::refl(v(0)),
                                                          CertProof::refl(v(0)))))));
  const std::string text = serialize_cert(p);
  EXPECT_EQ(text,
            "(conv (atom (+ lt v0 v0)) (atom lessle) (conje (atom (+ le v0 v0)) "
            "(atom (- eq v0 v0)) (lift (contr (- eq v0 v0) (antisym (refl v0) "
            "(refl v0))))))");
  EXPECT_EQ(parse_cert(text), p);
}

TEST(CertIo, RoundTripsDecidedCertificates) {
  std::mt19937_64 rng(11);
  int unsat = 0;
  for (int i = 0; i < 300; ++i) {
    const Formula phi = random_formula(rng, 4, 4);
    for (Theory t : {Theory::kPartial, Theory::kLinear}) {
      Verdict v = decide(phi, t);
      if (auto* u = std::get_if<Unsat>(&v)) {
        ++unsat;
        EXPECT_EQ(parse_cert(serialize_cert(u->certificate)), u->certificate);
      }
    }
    EXPECT_EQ(parse_formula_sexpr(serialize_formula(phi)), phi);
  }
  EXPECT_GT(unsat, 20);
}

TEST(CertIo, AllConversionNames) {
  for (const char* name : {"lessle", "nlessle", "nle", "nless", "allconv", "negatom",
                           "negneg", "negand", "negor", "andorl", "andorr"}) {
    const std::string text = std::string("(conv (atom (+ le v0 v0)) ") + name +
                             " (lift (refl v0)))";
    EXPECT_EQ(serialize_cert(parse_cert(text)), text);
  }
}

TEST(CertIo, ErrorsCarryLocation) {
  try {
    parse_cert("(lift\n  (assm (+ le v0 w1)))");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 18u);
    EXPECT_EQ(e.offset(), 23u);
  }
  EXPECT_THROW(parse_cert("(lift (assm (* le v0 v1)))"), ParseError);
  EXPECT_THROW(parse_cert("(lift (assm (+ ge v0 v1)))"), ParseError);
  EXPECT_THROW(parse_cert("(lift (refl v0) extra)"), ParseError);
  EXPECT_THROW(parse_cert("(lift (refl v0)"), ParseError);
  EXPECT_THROW(parse_cert("(lift (refl v0)) (lift (refl v0))"), ParseError);
  EXPECT_THROW(parse_cert("(frob)"), ParseError);
  EXPECT_THROW(parse_cert("(conv (atom (+ le v0 v0)) bogus (lift (refl v0)))"),
               ParseError);
}

TEST(SExpr, Reader) {
  const SExpr e = parse_sexpr("  (a (b c) d)");
  ASSERT_TRUE(e.is_list);
  EXPECT_EQ(e.items.size(), 3u);
  EXPECT_TRUE(e.is_form("a"));
  EXPECT_TRUE(e.items[1].is_form("b"));
  EXPECT_EQ(e.items[2].symbol, "d");
  EXPECT_EQ(e.offset, 2u);
  EXPECT_EQ(line_column("ab\ncd", 4), (std::pair<std::size_t, std::size_t>{2, 2}));
  EXPECT_THROW(parse_sexpr(")"), ParseError);
  EXPECT_THROW(parse_sexpr(""), ParseError);
}

}  // namespace
}  // namespace orderproof
