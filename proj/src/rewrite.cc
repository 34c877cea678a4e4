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

namespace orderproof {

namespace {

Formula lit(bool positive, AtomKind k, VarId x, VarId y) {
  return Formula::atom(Literal{positive, OrderAtom{k, x, y}});
}

bool is_all(const ConvProof& c) {
  return c.rule() == ConvProof::Rule::kAllConv;
}

// Sequencing and congruence with AllConv elided.
ConvProof then(ConvProof a, ConvProof b) {
  if (is_all(a)) return b;
  if (is_all(b)) return a;
  return ConvProof::then_conv(std::move(a), std::move(b));
}

ConvProof binop(ConvProof a, ConvProof b) {
  if (is_all(a) && is_all(b)) return ConvProof::all_conv();
  return ConvProof::binop_conv(std::move(a), std::move(b));
}

ConvProof arg(ConvProof a) {
  if (is_all(a)) return a;
  return ConvProof::arg_conv(std::move(a));
}

}  // namespace

Formula deless_partial(const Literal& l) {
  const VarId x = l.atom.lhs, y = l.atom.rhs;
  if (l.atom.kind == AtomKind::kLt) {
    if (l.positive) {
      return Formula::conj(lit(true, AtomKind::kLe, x, y),
                           lit(false, AtomKind::kEq, x, y));
    }
    return Formula::disj(lit(false, AtomKind::kLe, x, y),
                         lit(true, AtomKind::kEq, x, y));
  }
  return Formula::atom(l);
}

ConvProof deless_partial_prf(const Literal& l) {
  if (l.atom.kind == AtomKind::kLt) {
    return l.positive ? ConvProof::less_le() : ConvProof::nless_le();
  }
  return ConvProof::all_conv();
}

Formula deless_linear(const Literal& l) {
  const VarId x = l.atom.lhs, y = l.atom.rhs;
  if (l.positive && l.atom.kind == AtomKind::kLt) {
    return Formula::conj(lit(true, AtomKind::kLe, x, y),
                         lit(false, AtomKind::kEq, x, y));
  }
  if (!l.positive && l.atom.kind == AtomKind::kLe) {
    return Formula::conj(lit(false, AtomKind::kEq, x, y),
                         lit(true, AtomKind::kLe, y, x));
  }
  if (!l.positive && l.atom.kind == AtomKind::kLt) {
    return lit(true, AtomKind::kLe, y, x);
  }
  return Formula::atom(l);
}

ConvProof deless_linear_prf(const Literal& l) {
  if (l.positive && l.atom.kind == AtomKind::kLt) return ConvProof::less_le();
  if (!l.positive && l.atom.kind == AtomKind::kLe) return ConvProof::nle_conv();
  if (!l.positive && l.atom.kind == AtomKind::kLt) {
    return ConvProof::nless_conv();
  }
  return ConvProof::all_conv();
}

LiteralRewrite deless_for(Theory t) {
  return t == Theory::kPartial ? LiteralRewrite(deless_partial)
                               : LiteralRewrite(deless_linear);
}

LiteralRewriteProof deless_prf_for(Theory t) {
  return t == Theory::kPartial ? LiteralRewriteProof(deless_partial_prf)
                               : LiteralRewriteProof(deless_linear_prf);
}

Formula amap_fm(const LiteralRewrite& f, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::kAtom: return f(phi.literal());
    case Formula::Kind::kAnd:
      return Formula::conj(amap_fm(f, phi.left()), amap_fm(f, phi.right()));
    case Formula::Kind::kOr:
      return Formula::disj(amap_fm(f, phi.left()), amap_fm(f, phi.right()));
    case Formula::Kind::kNeg: return Formula::neg(amap_fm(f, phi.left()));
  }
  return phi;
}

ConvProof amap_fm_prf(const LiteralRewriteProof& ap, const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::kAtom: return ConvProof::atom_conv(ap(phi.literal()));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      return ConvProof::binop_conv(amap_fm_prf(ap, phi.left()),
                                   amap_fm_prf(ap, phi.right()));
    case Formula::Kind::kNeg:
      return ConvProof::arg_conv(amap_fm_prf(ap, phi.left()));
  }
  return ConvProof::all_conv();
}

namespace {

using Step = std::pair<Formula, ConvProof>;

// Pushes a negation through a negation-free formula.
Step push_neg(const Formula& psi) {
  switch (psi.kind()) {
    case Formula::Kind::kAtom:
      return {Formula::atom(psi.literal().negated()),
              ConvProof::leaf(ConvProof::Rule::kNegAtomConv)};
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      auto [a, ca] = push_neg(psi.left());
      auto [b, cb] = push_neg(psi.right());
      const auto rule = psi.is_and() ? ConvProof::Rule::kNegAndConv
                                     : ConvProof::Rule::kNegOrConv;
      Formula out = psi.is_and() ? Formula::disj(a, b) : Formula::conj(a, b);
      return {out, then(ConvProof::leaf(rule), binop(ca, cb))};
    }
    case Formula::Kind::kNeg: break;
  }
  throw InvariantError("push_neg on a formula with negations");
}

// Innermost-first: normalize the operand, then push the outer negation.
Step nnf(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::kAtom: return {phi, ConvProof::all_conv()};
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      auto [a, ca] = nnf(phi.left());
      auto [b, cb] = nnf(phi.right());
      Formula out = phi.is_and() ? Formula::conj(a, b) : Formula::disj(a, b);
      return {out, binop(ca, cb)};
    }
    case Formula::Kind::kNeg: {
      const Formula& inner = phi.left();
      if (inner.is_neg()) {
        // ~~a: drop the pair, then normalize a.
        auto [a, ca] = nnf(inner.left());
        return {a, then(ConvProof::leaf(ConvProof::Rule::kNegNegConv), ca)};
      }
      auto [psi, cpsi] = nnf(inner);
      auto [out, cpush] = push_neg(psi);
      return {out, then(arg(cpsi), cpush)};
    }
  }
  return {phi, ConvProof::all_conv()};
}

// And(a, b) with a, b already in DNF.
Step distribute(const Formula& a, const Formula& b) {
  if (a.is_or()) {
    auto [l, cl] = distribute(a.left(), b);
    auto [r, cr] = distribute(a.right(), b);
    return {Formula::disj(l, r),
            then(ConvProof::leaf(ConvProof::Rule::kAndOrLConv), binop(cl, cr))};
  }
  if (b.is_or()) {
    auto [l, cl] = distribute(a, b.left());
    auto [r, cr] = distribute(a, b.right());
    return {Formula::disj(l, r),
            then(ConvProof::leaf(ConvProof::Rule::kAndOrRConv), binop(cl, cr))};
  }
  return {Formula::conj(a, b), ConvProof::all_conv()};
}

// DNF of a negation-free formula.
Step dnf(const Formula& phi) {
  switch (phi.kind()) {
    case Formula::Kind::kAtom: return {phi, ConvProof::all_conv()};
    case Formula::Kind::kOr: {
      auto [a, ca] = dnf(phi.left());
      auto [b, cb] = dnf(phi.right());
      return {Formula::disj(a, b), binop(ca, cb)};
    }
    case Formula::Kind::kAnd: {
      auto [a, ca] = dnf(phi.left());
      auto [b, cb] = dnf(phi.right());
      auto [out, cd] = distribute(a, b);
      return {out, then(binop(ca, cb), cd)};
    }
    case Formula::Kind::kNeg: break;
  }
  throw InvariantError("dnf on a formula with negations");
}

}  // namespace

std::pair<Formula, ConvProof> to_nnf(const Formula& phi) { return nnf(phi); }

std::pair<Formula, ConvProof> to_dnf(const Formula& phi) {
  auto [n, cn] = nnf(phi);
  auto [d, cd] = dnf(n);
  return {d, then(cn, cd)};
}

bool is_clause(const Formula& phi) {
  if (phi.is_atom()) return true;
  return phi.is_and() && is_clause(phi.left()) && is_clause(phi.right());
}

bool is_dnf(const Formula& phi) {
  if (phi.is_or()) return is_dnf(phi.left()) && is_dnf(phi.right());
  return is_clause(phi);
}

namespace {

void collect_conj(const Formula& phi, std::vector<Literal>& out) {
  if (phi.is_atom()) {
    out.push_back(phi.literal());
    return;
  }
  if (!phi.is_and()) {
    throw StructureError("not a clause: " + to_string(phi));
  }
  collect_conj(phi.left(), out);
  collect_conj(phi.right(), out);
}

void collect_disj(const Formula& phi, std::vector<Formula>& out) {
  if (!phi.is_or()) {
    out.push_back(phi);
    return;
  }
  collect_disj(phi.left(), out);
  collect_disj(phi.right(), out);
}

}  // namespace

std::vector<Literal> conj_list(const Formula& phi) {
  std::vector<Literal> out;
  collect_conj(phi, out);
  return out;
}

std::vector<Formula> disj_clauses(const Formula& phi) {
  std::vector<Formula> out;
  collect_disj(phi, out);
  return out;
}

}  // namespace orderproof
