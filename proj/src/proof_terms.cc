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

#include <string>

namespace orderproof {

namespace {

template <typename T>
std::size_t size_of(const std::optional<T>& t) {
  return t ? t->size() : 0;
}

// Saturating add; shared DAG nodes can make tree sizes astronomically large.
std::size_t add(std::size_t a, std::size_t b) {
  const std::size_t s = a + b;
  return s < a ? static_cast<std::size_t>(-1) : s;
}

}  // namespace

// ---------------------------------------------------------------------------
// CertProof

CertProof CertProof::assm(Literal l) {
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kAssm, l, {}, std::nullopt, std::nullopt, 1}));
}

CertProof CertProof::refl(VarId x) {
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kRefl, {}, x, std::nullopt, std::nullopt, 1}));
}

CertProof CertProof::trans(CertProof xy, CertProof yz) {
  const std::size_t n = add(add(1, xy.size()), yz.size());
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kTrans, {}, {}, std::move(xy), std::move(yz), n}));
}

CertProof CertProof::antisym(CertProof xy, CertProof yx) {
  const std::size_t n = add(add(1, xy.size()), yx.size());
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kAntisym, {}, {}, std::move(xy), std::move(yx), n}));
}

CertProof CertProof::eqe1(Literal eq) {
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kEqE1, eq, {}, std::nullopt, std::nullopt, 1}));
}

CertProof CertProof::eqe2(Literal eq) {
  return CertProof(std::make_shared<const CertNode>(
      CertNode{Rule::kEqE2, eq, {}, std::nullopt, std::nullopt, 1}));
}

CertProof CertProof::contr(Literal negative, CertProof positive) {
  const std::size_t n = add(1, positive.size());
  return CertProof(std::make_shared<const CertNode>(CertNode{
      Rule::kContr, negative, {}, std::move(positive), std::nullopt, n}));
}

CertProof::Rule CertProof::rule() const { return node_->rule; }

const Literal& CertProof::literal() const {
  switch (rule()) {
    case Rule::kAssm:
    case Rule::kEqE1:
    case Rule::kEqE2:
    case Rule::kContr: return node_->literal;
    default: throw StructureError("rule carries no literal");
  }
}

VarId CertProof::var() const {
  if (rule() != Rule::kRefl) throw StructureError("rule carries no variable");
  return node_->var;
}

const CertProof& CertProof::first() const {
  if (!node_->first) throw StructureError("rule has no premise");
  return *node_->first;
}

const CertProof& CertProof::second() const {
  if (!node_->second) throw StructureError("rule has no second premise");
  return *node_->second;
}

std::size_t CertProof::size() const { return node_->size; }

bool operator==(const CertProof& a, const CertProof& b) {
  if (a.node_ == b.node_) return true;
  const CertNode& x = *a.node_;
  const CertNode& y = *b.node_;
  if (x.rule != y.rule || x.size != y.size) return false;
  switch (x.rule) {
    case CertProof::Rule::kAssm:
    case CertProof::Rule::kEqE1:
    case CertProof::Rule::kEqE2: return x.literal == y.literal;
    case CertProof::Rule::kRefl: return x.var == y.var;
    case CertProof::Rule::kContr:
      return x.literal == y.literal && *x.first == *y.first;
    case CertProof::Rule::kTrans:
    case CertProof::Rule::kAntisym:
      return *x.first == *y.first && *x.second == *y.second;
  }
  return false;
}

// ---------------------------------------------------------------------------
// ConvProof

bool is_linear_only(ConvProof::Rule r) {
  return r == ConvProof::Rule::kNleConv || r == ConvProof::Rule::kNlessConv;
}

bool is_leaf_rule(ConvProof::Rule r) {
  switch (r) {
    case ConvProof::Rule::kAtomConv:
    case ConvProof::Rule::kArgConv:
    case ConvProof::Rule::kBinopConv:
    case ConvProof::Rule::kThenConv: return false;
    default: return true;
  }
}

ConvProof ConvProof::leaf(Rule r) {
  if (!is_leaf_rule(r)) {
    throw StructureError(std::string(rule_name(r)) + " needs premises");
  }
  return ConvProof(std::make_shared<const ConvNode>(
      ConvNode{r, std::nullopt, std::nullopt, 1}));
}

ConvProof ConvProof::atom_conv(ConvProof p) {
  const std::size_t n = add(1, p.size());
  return ConvProof(std::make_shared<const ConvNode>(
      ConvNode{Rule::kAtomConv, std::move(p), std::nullopt, n}));
}

ConvProof ConvProof::arg_conv(ConvProof p) {
  const std::size_t n = add(1, p.size());
  return ConvProof(std::make_shared<const ConvNode>(
      ConvNode{Rule::kArgConv, std::move(p), std::nullopt, n}));
}

ConvProof ConvProof::binop_conv(ConvProof l, ConvProof r) {
  const std::size_t n = add(add(1, l.size()), r.size());
  return ConvProof(std::make_shared<const ConvNode>(
      ConvNode{Rule::kBinopConv, std::move(l), std::move(r), n}));
}

ConvProof ConvProof::then_conv(ConvProof first, ConvProof second) {
  const std::size_t n = add(add(1, first.size()), second.size());
  return ConvProof(std::make_shared<const ConvNode>(
      ConvNode{Rule::kThenConv, std::move(first), std::move(second), n}));
}

ConvProof::Rule ConvProof::rule() const { return node_->rule; }
bool ConvProof::is_leaf() const { return is_leaf_rule(rule()); }

const ConvProof& ConvProof::first() const {
  if (!node_->first) throw StructureError("conversion has no premise");
  return *node_->first;
}

const ConvProof& ConvProof::second() const {
  if (!node_->second) throw StructureError("conversion has no second premise");
  return *node_->second;
}

std::size_t ConvProof::size() const { return node_->size; }

bool operator==(const ConvProof& a, const ConvProof& b) {
  if (a.node_ == b.node_) return true;
  if (a.rule() != b.rule() || a.size() != b.size()) return false;
  if (a.node_->first && !(*a.node_->first == *b.node_->first)) return false;
  if (a.node_->second && !(*a.node_->second == *b.node_->second)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// PropProof

PropProof PropProof::lift(CertProof p) {
  const std::size_t n = add(1, p.size());
  PropNode node{Rule::kLift, std::move(p), {}, {}, {}, {}, {}, n};
  return PropProof(std::make_shared<const PropNode>(std::move(node)));
}

PropProof PropProof::conj_e(Formula c, Formula d, PropProof p) {
  const std::size_t n = add(1, p.size());
  PropNode node{Rule::kConjE, {}, std::move(c), std::move(d), {},
                std::move(p), {}, n};
  return PropProof(std::make_shared<const PropNode>(std::move(node)));
}

PropProof PropProof::disj_e(Formula c, Formula d, PropProof p1, PropProof p2) {
  const std::size_t n = add(add(1, p1.size()), p2.size());
  PropNode node{Rule::kDisjE, {}, std::move(c), std::move(d), {},
                std::move(p1), std::move(p2), n};
  return PropProof(std::make_shared<const PropNode>(std::move(node)));
}

PropProof PropProof::conv(Formula source, ConvProof cp, PropProof p) {
  const std::size_t n = add(add(1, cp.size()), p.size());
  PropNode node{Rule::kConv, {}, std::move(source), {}, std::move(cp),
                std::move(p), {}, n};
  return PropProof(std::make_shared<const PropNode>(std::move(node)));
}

PropProof::Rule PropProof::rule() const { return node_->rule; }

const CertProof& PropProof::cert() const {
  if (!node_->cert) throw StructureError("not a lifted proof");
  return *node_->cert;
}

const Formula& PropProof::lhs() const {
  if (!node_->lhs) throw StructureError("rule carries no formula");
  return *node_->lhs;
}

const Formula& PropProof::rhs() const {
  if (!node_->rhs) throw StructureError("rule carries no second formula");
  return *node_->rhs;
}

const ConvProof& PropProof::conversion() const {
  if (!node_->conversion) throw StructureError("rule carries no conversion");
  return *node_->conversion;
}

const PropProof& PropProof::body() const {
  if (!node_->body) throw StructureError("rule has no subproof");
  return *node_->body;
}

const PropProof& PropProof::body2() const {
  if (!node_->body2) throw StructureError("rule has no second subproof");
  return *node_->body2;
}

std::size_t PropProof::size() const { return node_->size; }

bool operator==(const PropProof& a, const PropProof& b) {
  if (a.node_ == b.node_) return true;
  const PropNode& x = *a.node_;
  const PropNode& y = *b.node_;
  return x.rule == y.rule && x.size == y.size && x.cert == y.cert &&
         x.lhs == y.lhs && x.rhs == y.rhs && x.conversion == y.conversion &&
         x.body == y.body && x.body2 == y.body2;
}

// ---------------------------------------------------------------------------

std::string_view rule_name(CertProof::Rule r) {
  switch (r) {
    case CertProof::Rule::kAssm: return "AssmP";
    case CertProof::Rule::kRefl: return "ReflP";
    case CertProof::Rule::kTrans: return "TransP";
    case CertProof::Rule::kAntisym: return "AntisymP";
    case CertProof::Rule::kEqE1: return "EQE1P";
    case CertProof::Rule::kEqE2: return "EQE2P";
    case CertProof::Rule::kContr: return "ContrP";
  }
  return "?";
}

std::string_view rule_name(ConvProof::Rule r) {
  switch (r) {
    case ConvProof::Rule::kLessLe: return "LessLe";
    case ConvProof::Rule::kNlessLe: return "NlessLe";
    case ConvProof::Rule::kNleConv: return "NleConv";
    case ConvProof::Rule::kNlessConv: return "NlessConv";
    case ConvProof::Rule::kAllConv: return "AllConv";
    case ConvProof::Rule::kAtomConv: return "AtomConv";
    case ConvProof::Rule::kArgConv: return "ArgConv";
    case ConvProof::Rule::kBinopConv: return "BinopConv";
    case ConvProof::Rule::kThenConv: return "ThenConv";
    case ConvProof::Rule::kNegAtomConv: return "NegAtomConv";
    case ConvProof::Rule::kNegNegConv: return "NegNegConv";
    case ConvProof::Rule::kNegAndConv: return "NegAndConv";
    case ConvProof::Rule::kNegOrConv: return "NegOrConv";
    case ConvProof::Rule::kAndOrLConv: return "AndOrLConv";
    case ConvProof::Rule::kAndOrRConv: return "AndOrRConv";
  }
  return "?";
}

std::string_view rule_name(PropProof::Rule r) {
  switch (r) {
    case PropProof::Rule::kLift: return "Lift";
    case PropProof::Rule::kConjE: return "ConjE";
    case PropProof::Rule::kDisjE: return "DisjE";
    case PropProof::Rule::kConv: return "ConvRule";
  }
  return "?";
}

}  // namespace orderproof
