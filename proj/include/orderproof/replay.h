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


// Generic proof terms and their replay checker.
//
// Object terms (GTrm) encode literals and formulas:
//
//   literal   (le x y), (lt x y), (eq x y), negative: (not (le x y))
//   formula   (atom lit), ((and a) b), ((or a) b), (not f)
//
// A proposition (MetaProp) is an object formula term, an implication, a
// universally closed schema, or a formula equivalence. Schema binders are
// variable ids at or above kMaxUserVar, so they never collide with user
// variables; binders in [kVarBinderBase, kPropBinderBase) range over
// variables and binders from kPropBinderBase up range over formulas.
//
// The axiom environment Sigma (see sigma()):
//
//   refl      !x. x <= x
//   trans     !x y z. x <= y ==> y <= z ==> x <= z
//   antisym   !x y. x <= y ==> y <= x ==> x = y
//   eqe1      !x y. x = y ==> x <= y
//   eqe2      !x y. x = y ==> y <= x
//   contr_le  !x y. ~(x <= y) ==> x <= y ==> Fls
//   contr_eq  !x y. ~(x = y) ==> x = y ==> Fls
//   conje     !c d P. (c & d) ==> (c ==> d ==> P) ==> P
//   disje     !c d P. (c | d) ==> (c ==> P) ==> (d ==> P) ==> P
//   lessle    !x y. x < y == x <= y & ~(x = y)
//   nlessle   !x y. ~(x < y) == ~(x <= y) | x = y
//   nle       !x y. ~(x <= y) == ~(x = y) & y <= x        (linear only)
//   nless     !x y. ~(x < y) == y <= x                    (linear only)
//
// Fls is the literal ~(v0 = v0). Conversions inside ConvP are interpreted by
// rpc, which also understands the combinators atom, arg, binop and then and
// the negation/distribution constants negatom, negneg, negand, negor,
// andorl, andorr.

#ifndef ORDERPROOF_REPLAY_H_
#define ORDERPROOF_REPLAY_H_

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>

#include "orderproof/core.h"
#include "orderproof/proof_terms.h"

namespace orderproof {

inline constexpr std::uint32_t kVarBinderBase = kMaxUserVar;
inline constexpr std::uint32_t kPropBinderBase = kMaxUserVar + (kMaxUserVar >> 1);

class GTrm {
 public:
  enum class Kind : std::uint8_t { kConst, kApp, kVar };

  static GTrm constant(std::string name);
  static GTrm app(GTrm f, GTrm x);
  static GTrm var(VarId v);

  Kind kind() const;
  // kConst only.
  const std::string& name() const;
  // kVar only.
  VarId var_id() const;
  // kApp only.
  const GTrm& fun() const;
  const GTrm& arg() const;

  std::size_t hash() const;

  friend bool operator==(const GTrm& a, const GTrm& b);

 private:
  struct Node;
  explicit GTrm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

struct GTrmHash {
  std::size_t operator()(const GTrm& t) const { return t.hash(); }
};

std::string to_string(const GTrm& t);

GTrm encode_literal(const Literal& l);
GTrm encode_formula(const Formula& f);
// Inverse encodings over user variables. Return nullopt on anything else.
std::optional<Literal> decode_literal_term(const GTrm& t);
std::optional<Formula> decode_formula_term(const GTrm& t);

class MetaProp {
 public:
  enum class Kind : std::uint8_t { kObj, kImplies, kAll, kEquiv };

  // An object formula term asserted as true.
  static MetaProp obj(GTrm t);
  static MetaProp lit(const Literal& l) { return fm(Formula::atom(l)); }
  static MetaProp fm(const Formula& f) { return obj(encode_formula(f)); }
  static MetaProp implies(MetaProp a, MetaProp b);
  static MetaProp all(VarId binder, MetaProp body);
  static MetaProp equiv(GTrm lhs, GTrm rhs);

  Kind kind() const;
  // kObj: the term; kEquiv: the left side.
  const GTrm& term() const;
  // kEquiv only.
  const GTrm& rhs() const;
  // kImplies: premise and conclusion; kAll: body is `left`.
  const MetaProp& left() const;
  const MetaProp& right() const;
  VarId binder() const;

  friend bool operator==(const MetaProp& a, const MetaProp& b);

 private:
  struct Node;
  explicit MetaProp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::string to_string(const MetaProp& p);

// Replaces every occurrence of binder `x` in `p` by `t`.
MetaProp subst(const MetaProp& p, VarId x, const GTrm& t);

class GPrf {
 public:
  enum class Kind : std::uint8_t { kPThm, kBound, kAppP, kAbsP, kAppt, kConvP };

  static GPrf pthm(std::string name);
  static GPrf bound(GTrm t);
  static GPrf appp(GPrf p, GPrf q);
  static GPrf absp(GTrm t, GPrf p);
  static GPrf appt(GPrf p, GTrm t);
  // Rewrite hypothesis `t` by conversion `c`, then continue with `p`.
  static GPrf convp(GTrm t, GPrf c, GPrf p);

  Kind kind() const;
  const std::string& name() const;
  // kBound, kAbsP, kAppt, kConvP.
  const GTrm& term() const;
  // kAppP: function and argument; kAbsP, kAppt: body is `first`;
  // kConvP: conversion is `first`, continuation is `second`.
  const GPrf& first() const;
  const GPrf& second() const;

  std::size_t size() const;

  friend bool operator==(const GPrf& a, const GPrf& b);

 private:
  struct Node;
  explicit GPrf(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Text format, in the certificate S-expression style:
//   prf := (pthm name) | (bound trm) | (appp prf prf) | (absp trm prf)
//        | (appt prf trm) | (convp trm prf prf)
//   trm := v<digits> | name | (trm trm)
std::string serialize_gprf(const GPrf& p);
std::string serialize_gtrm(const GTrm& t);
GPrf parse_gprf(std::string_view text);

class ReplayError : public Error {
 public:
  enum class Kind {
    kUnknownConstant,
    kUnbound,
    kNotImplication,
    kPremiseMismatch,
    kNotForall,
    kBadInstance,
    kConversion,
    kNotFalse,
  };

  ReplayError(Kind kind, const std::string& what);
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

std::string_view to_string(ReplayError::Kind k);

// The axiom table. Conversion constants valid only over linear orders are
// present only for Theory::kLinear.
const std::map<std::string, MetaProp>& sigma(Theory theory);

using Rewriter = std::function<Formula(const Formula&)>;

// Interprets a conversion proof term. Throws ReplayError (kUnknownConstant)
// for anything that is not a conversion; the returned rewriter throws
// ReplayError (kConversion) when a rule does not match.
Rewriter rpc(const GPrf& cp, Theory theory);

using ReplayContext = std::unordered_map<GTrm, MetaProp, GTrmHash>;

MetaProp replay(const ReplayContext& gamma, const GPrf& p, Theory theory);

// Replays `p` under the single hypothesis `goal` and requires Fls.
void check_replay(const Formula& goal, const GPrf& p, Theory theory);

struct Exported {
  GPrf proof;
  // What the exported proof establishes (an object formula).
  Formula conclusion;
};

// Compiles a structured certificate into Sigma applications. Throws Error if
// `p` is malformed beyond what the replay checker could ever accept (e.g. a
// contradiction on a positive literal).
Exported export_proof(const PropProof& p);
GPrf export_conv(const ConvProof& c);

}  // namespace orderproof

#endif  // ORDERPROOF_REPLAY_H_
