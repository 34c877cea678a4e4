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

// Structured certificate languages.
//
//   CertProof  derivations of order literals from a set of literal
//              assumptions (assumption, reflexivity, transitivity,
//              antisymmetry, equality elimination, contradiction).
//   ConvProof  equivalence-preserving rewrites of formulas.
//   PropProof  propositional reasoning over formula assumptions, bottoming
//              out in lifted CertProofs.
//
// All three are immutable trees with shared subterms; copying is cheap.

#ifndef ORDERPROOF_PROOF_TERMS_H_
#define ORDERPROOF_PROOF_TERMS_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>

#include "orderproof/core.h"

namespace orderproof {

struct CertNode;

class CertProof {
 public:
  enum class Rule : std::uint8_t {
    kAssm, kRefl, kTrans, kAntisym, kEqE1, kEqE2, kContr
  };

  static CertProof assm(Literal l);
  static CertProof refl(VarId x);
  static CertProof trans(CertProof xy, CertProof yz);
  static CertProof antisym(CertProof xy, CertProof yx);
  static CertProof eqe1(Literal eq);
  static CertProof eqe2(Literal eq);
  static CertProof contr(Literal negative, CertProof positive);

  Rule rule() const;
  // Assm, EqE1, EqE2, Contr.
  const Literal& literal() const;
  // Refl.
  VarId var() const;
  // Trans/Antisym: both; Contr: first only.
  const CertProof& first() const;
  const CertProof& second() const;

  // Nodes of the tree view (shared subterms counted each time).
  std::size_t size() const;

  friend bool operator==(const CertProof& a, const CertProof& b);

 private:
  explicit CertProof(std::shared_ptr<const CertNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const CertNode> node_;
};

struct CertNode {
  CertProof::Rule rule;
  Literal literal;
  VarId var;
  std::optional<CertProof> first;
  std::optional<CertProof> second;
  std::size_t size;
};

struct ConvNode;

class ConvProof {
 public:
  enum class Rule : std::uint8_t {
    // Atom-level rewrites.
    kLessLe,     // x < y      ~> x <= y & x != y
    kNlessLe,    // ~(x < y)   ~> ~(x <= y) | x = y
    kNleConv,    // ~(x <= y)  ~> x != y & y <= x        (linear only)
    kNlessConv,  // ~(x < y)   ~> y <= x                 (linear only)
    kAllConv,    // identity
    // Congruences and sequencing.
    kAtomConv,
    kArgConv,
    kBinopConv,
    kThenConv,
    // Negation normal form.
    kNegAtomConv,  // Neg(Atom l)   ~> Atom(-l)
    kNegNegConv,   // Neg(Neg a)    ~> a
    kNegAndConv,   // Neg(And a b)  ~> Or(Neg a, Neg b)
    kNegOrConv,    // Neg(Or a b)   ~> And(Neg a, Neg b)
    // Distribution.
    kAndOrLConv,   // And(Or a b, c) ~> Or(And a c, And b c)
    kAndOrRConv,   // And(a, Or b c) ~> Or(And a b, And a c)
  };

  static ConvProof leaf(Rule r);
  static ConvProof atom_conv(ConvProof p);
  static ConvProof arg_conv(ConvProof p);
  static ConvProof binop_conv(ConvProof l, ConvProof r);
  static ConvProof then_conv(ConvProof first, ConvProof second);

  static ConvProof less_le() { return leaf(Rule::kLessLe); }
  static ConvProof nless_le() { return leaf(Rule::kNlessLe); }
  static ConvProof nle_conv() { return leaf(Rule::kNleConv); }
  static ConvProof nless_conv() { return leaf(Rule::kNlessConv); }
  static ConvProof all_conv() { return leaf(Rule::kAllConv); }

  Rule rule() const;
  bool is_leaf() const;
  const ConvProof& first() const;
  const ConvProof& second() const;
  std::size_t size() const;

  friend bool operator==(const ConvProof& a, const ConvProof& b);

 private:
  explicit ConvProof(std::shared_ptr<const ConvNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ConvNode> node_;
};

struct ConvNode {
  ConvProof::Rule rule;
  std::optional<ConvProof> first;
  std::optional<ConvProof> second;
  std::size_t size;
};

// Leaf rules that rewrite one literal and are only sound over linear orders.
bool is_linear_only(ConvProof::Rule r);
// Leaf rules with no children.
bool is_leaf_rule(ConvProof::Rule r);

struct PropNode;

class PropProof {
 public:
  enum class Rule : std::uint8_t { kLift, kConjE, kDisjE, kConv };

  static PropProof lift(CertProof p);
  static PropProof conj_e(Formula c, Formula d, PropProof p);
  static PropProof disj_e(Formula c, Formula d, PropProof p1, PropProof p2);
  static PropProof conv(Formula source, ConvProof cp, PropProof p);

  Rule rule() const;
  // Lift.
  const CertProof& cert() const;
  // ConjE/DisjE: c and d.  Conv: lhs() is the source formula.
  const Formula& lhs() const;
  const Formula& rhs() const;
  // Conv.
  const ConvProof& conversion() const;
  // ConjE, Conv: body(); DisjE: body() and body2().
  const PropProof& body() const;
  const PropProof& body2() const;

  std::size_t size() const;

  friend bool operator==(const PropProof& a, const PropProof& b);

 private:
  explicit PropProof(std::shared_ptr<const PropNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const PropNode> node_;
};

struct PropNode {
  PropProof::Rule rule;
  std::optional<CertProof> cert;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::optional<ConvProof> conversion;
  std::optional<PropProof> body;
  std::optional<PropProof> body2;
  std::size_t size;
};

std::string_view rule_name(CertProof::Rule r);
std::string_view rule_name(ConvProof::Rule r);
std::string_view rule_name(PropProof::Rule r);

}  // namespace orderproof

#endif  // ORDERPROOF_PROOF_TERMS_H_
