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

#include <array>
#include <charconv>
#include <utility>

namespace orderproof {

namespace {

constexpr std::array<std::pair<ConvProof::Rule, std::string_view>, 11>
    kConvLeaves = {{
        {ConvProof::Rule::kLessLe, "lessle"},
        {ConvProof::Rule::kNlessLe, "nlessle"},
        {ConvProof::Rule::kNleConv, "nle"},
        {ConvProof::Rule::kNlessConv, "nless"},
        {ConvProof::Rule::kAllConv, "allconv"},
        {ConvProof::Rule::kNegAtomConv, "negatom"},
        {ConvProof::Rule::kNegNegConv, "negneg"},
        {ConvProof::Rule::kNegAndConv, "negand"},
        {ConvProof::Rule::kNegOrConv, "negor"},
        {ConvProof::Rule::kAndOrLConv, "andorl"},
        {ConvProof::Rule::kAndOrRConv, "andorr"},
    }};

std::string_view kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::kLe: return "le";
    case AtomKind::kLt: return "lt";
    case AtomKind::kEq: return "eq";
  }
  return "?";
}

void serialize_to(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      out += "(atom ";
      out += serialize_literal(f.literal());
      out += ')';
      return;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr:
      out += f.is_and() ? "(and " : "(or ";
      serialize_to(f.left(), out);
      out += ' ';
      serialize_to(f.right(), out);
      out += ')';
      return;
    case Formula::Kind::kNeg:
      out += "(neg ";
      serialize_to(f.left(), out);
      out += ')';
      return;
  }
}

void serialize_to(const CertProof& p, std::string& out) {
  using Rule = CertProof::Rule;
  switch (p.rule()) {
    case Rule::kAssm: out += "(assm " + serialize_literal(p.literal()) + ")"; return;
    case Rule::kRefl: out += "(refl " + serialize_var(p.var()) + ")"; return;
    case Rule::kEqE1: out += "(eqe1 " + serialize_literal(p.literal()) + ")"; return;
    case Rule::kEqE2: out += "(eqe2 " + serialize_literal(p.literal()) + ")"; return;
    case Rule::kTrans:
    case Rule::kAntisym:
      out += p.rule() == Rule::kTrans ? "(trans " : "(antisym ";
      serialize_to(p.first(), out);
      out += ' ';
      serialize_to(p.second(), out);
      out += ')';
      return;
    case Rule::kContr:
      out += "(contr " + serialize_literal(p.literal()) + " ";
      serialize_to(p.first(), out);
      out += ')';
      return;
  }
}

void serialize_to(const ConvProof& c, std::string& out) {
  using Rule = ConvProof::Rule;
  for (const auto& [rule, name] : kConvLeaves) {
    if (rule == c.rule()) {
      out += name;
      return;
    }
  }
  switch (c.rule()) {
    case Rule::kAtomConv:
    case Rule::kArgConv:
      out += c.rule() == Rule::kAtomConv ? "(atom " : "(arg ";
      serialize_to(c.first(), out);
      out += ')';
      return;
    case Rule::kBinopConv:
    case Rule::kThenConv:
      out += c.rule() == Rule::kBinopConv ? "(binop " : "(then ";
      serialize_to(c.first(), out);
      out += ' ';
      serialize_to(c.second(), out);
      out += ')';
      return;
    default: return;
  }
}

void serialize_to(const PropProof& p, std::string& out) {
  using Rule = PropProof::Rule;
  switch (p.rule()) {
    case Rule::kLift:
      out += "(lift ";
      serialize_to(p.cert(), out);
      out += ')';
      return;
    case Rule::kConjE:
    case Rule::kDisjE:
      out += p.rule() == Rule::kConjE ? "(conje " : "(disje ";
      serialize_to(p.lhs(), out);
      out += ' ';
      serialize_to(p.rhs(), out);
      out += ' ';
      serialize_to(p.body(), out);
      if (p.rule() == Rule::kDisjE) {
        out += ' ';
        serialize_to(p.body2(), out);
      }
      out += ')';
      return;
    case Rule::kConv:
      out += "(conv ";
      serialize_to(p.lhs(), out);
      out += ' ';
      serialize_to(p.conversion(), out);
      out += ' ';
      serialize_to(p.body(), out);
      out += ')';
      return;
  }
}

const SExpr& expect_list(std::string_view text, const SExpr& e,
                         std::size_t arity, std::string_view what) {
  if (!e.is_list || e.items.size() != arity + 1) {
    fail_at(text, e.offset,
            "expected " + std::string(what) + " with " +
                std::to_string(arity) + " argument(s)");
  }
  return e;
}

}  // namespace

std::string serialize_var(VarId v) { return "v" + std::to_string(v.value); }

std::string serialize_literal(const Literal& l) {
  std::string s = "(";
  s += l.positive ? '+' : '-';
  s += ' ';
  s += kind_name(l.atom.kind);
  s += ' ';
  s += serialize_var(l.atom.lhs);
  s += ' ';
  s += serialize_var(l.atom.rhs);
  s += ')';
  return s;
}

std::string serialize_formula(const Formula& f) {
  std::string out;
  serialize_to(f, out);
  return out;
}

std::string serialize_atom_proof(const CertProof& p) {
  std::string out;
  serialize_to(p, out);
  return out;
}

std::string serialize_conv(const ConvProof& c) {
  std::string out;
  serialize_to(c, out);
  return out;
}

std::string serialize_cert(const PropProof& p) {
  std::string out;
  serialize_to(p, out);
  return out;
}

VarId decode_var(std::string_view text, const SExpr& e) {
  if (e.is_list || e.symbol.size() < 2 || e.symbol[0] != 'v') {
    fail_at(text, e.offset, "expected a variable like v0");
  }
  std::uint32_t value = 0;
  const char* first = e.symbol.data() + 1;
  const char* last = e.symbol.data() + e.symbol.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || value >= kMaxUserVar) {
    fail_at(text, e.offset, "bad variable '" + e.symbol + "'");
  }
  return VarId{value};
}

Literal decode_literal(std::string_view text, const SExpr& e) {
  if (!e.is_list || e.items.size() != 4 || e.items[0].is_list ||
      e.items[1].is_list) {
    fail_at(text, e.offset, "expected a literal (pol kind var var)");
  }
  Literal l;
  const std::string& pol = e.items[0].symbol;
  if (pol == "+") {
    l.positive = true;
  } else if (pol == "-") {
    l.positive = false;
  } else {
    fail_at(text, e.items[0].offset, "polarity must be + or -");
  }
  const std::string& kind = e.items[1].symbol;
  if (kind == "le") {
    l.atom.kind = AtomKind::kLe;
  } else if (kind == "lt") {
    l.atom.kind = AtomKind::kLt;
  } else if (kind == "eq") {
    l.atom.kind = AtomKind::kEq;
  } else {
    fail_at(text, e.items[1].offset, "atom kind must be le, lt or eq");
  }
  l.atom.lhs = decode_var(text, e.items[2]);
  l.atom.rhs = decode_var(text, e.items[3]);
  return l;
}

Formula decode_formula(std::string_view text, const SExpr& e) {
  if (e.is_form("atom")) {
    expect_list(text, e, 1, "atom");
    return Formula::atom(decode_literal(text, e.items[1]));
  }
  if (e.is_form("and") || e.is_form("or")) {
    expect_list(text, e, 2, e.items[0].symbol);
    Formula a = decode_formula(text, e.items[1]);
    Formula b = decode_formula(text, e.items[2]);
    return e.is_form("and") ? Formula::conj(a, b) : Formula::disj(a, b);
  }
  if (e.is_form("neg")) {
    expect_list(text, e, 1, "neg");
    return Formula::neg(decode_formula(text, e.items[1]));
  }
  fail_at(text, e.offset, "expected a formula");
}

CertProof decode_atom_proof(std::string_view text, const SExpr& e) {
  if (e.is_form("assm")) {
    expect_list(text, e, 1, "assm");
    return CertProof::assm(decode_literal(text, e.items[1]));
  }
  if (e.is_form("refl")) {
    expect_list(text, e, 1, "refl");
    return CertProof::refl(decode_var(text, e.items[1]));
  }
  if (e.is_form("eqe1") || e.is_form("eqe2")) {
    expect_list(text, e, 1, e.items[0].symbol);
    const Literal l = decode_literal(text, e.items[1]);
    return e.is_form("eqe1") ? CertProof::eqe1(l) : CertProof::eqe2(l);
  }
  if (e.is_form("trans") || e.is_form("antisym")) {
    expect_list(text, e, 2, e.items[0].symbol);
    CertProof a = decode_atom_proof(text, e.items[1]);
    CertProof b = decode_atom_proof(text, e.items[2]);
    return e.is_form("trans") ? CertProof::trans(a, b)
                              : CertProof::antisym(a, b);
  }
  if (e.is_form("contr")) {
    expect_list(text, e, 2, "contr");
    return CertProof::contr(decode_literal(text, e.items[1]),
                            decode_atom_proof(text, e.items[2]));
  }
  fail_at(text, e.offset, "expected an atom proof");
}

ConvProof decode_conv(std::string_view text, const SExpr& e) {
  if (!e.is_list) {
    for (const auto& [rule, name] : kConvLeaves) {
      if (e.symbol == name) return ConvProof::leaf(rule);
    }
    fail_at(text, e.offset, "unknown conversion '" + e.symbol + "'");
  }
  if (e.is_form("atom") || e.is_form("arg")) {
    expect_list(text, e, 1, e.items[0].symbol);
    ConvProof c = decode_conv(text, e.items[1]);
    return e.is_form("atom") ? ConvProof::atom_conv(c) : ConvProof::arg_conv(c);
  }
  if (e.is_form("binop") || e.is_form("then")) {
    expect_list(text, e, 2, e.items[0].symbol);
    ConvProof a = decode_conv(text, e.items[1]);
    ConvProof b = decode_conv(text, e.items[2]);
    return e.is_form("binop") ? ConvProof::binop_conv(a, b)
                              : ConvProof::then_conv(a, b);
  }
  fail_at(text, e.offset, "expected a conversion");
}

PropProof decode_cert(std::string_view text, const SExpr& e) {
  if (e.is_form("lift")) {
    expect_list(text, e, 1, "lift");
    return PropProof::lift(decode_atom_proof(text, e.items[1]));
  }
  if (e.is_form("conje")) {
    expect_list(text, e, 3, "conje");
    return PropProof::conj_e(decode_formula(text, e.items[1]),
                             decode_formula(text, e.items[2]),
                             decode_cert(text, e.items[3]));
  }
  if (e.is_form("disje")) {
    expect_list(text, e, 4, "disje");
    return PropProof::disj_e(
        decode_formula(text, e.items[1]), decode_formula(text, e.items[2]),
        decode_cert(text, e.items[3]), decode_cert(text, e.items[4]));
  }
  if (e.is_form("conv")) {
    expect_list(text, e, 3, "conv");
    return PropProof::conv(decode_formula(text, e.items[1]),
                           decode_conv(text, e.items[2]),
                           decode_cert(text, e.items[3]));
  }
  fail_at(text, e.offset, "expected a certificate");
}

PropProof parse_cert(std::string_view text) {
  return decode_cert(text, parse_sexpr(text));
}

Formula parse_formula_sexpr(std::string_view text) {
  return decode_formula(text, parse_sexpr(text));
}

}  // namespace orderproof
