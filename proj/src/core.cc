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

#include "orderproof/core.h"

#include <algorithm>
#include <cassert>

namespace orderproof {

// ---------------------------------------------------------------------------
// SymbolTable

VarId SymbolTable::intern(std::string_view name) {
  if (name.empty()) throw Error("cannot intern an empty identifier");
  std::string key(name);
  if (auto it = ids_.find(key); it != ids_.end()) return VarId{it->second};
  if (names_.size() >= kMaxUserVar) throw Error("too many variables");
  const auto id = static_cast<std::uint32_t>(names_.size());
  names_.push_back(key);
  ids_.emplace(std::move(key), id);
  return VarId{id};
}

std::optional<VarId> SymbolTable::find(std::string_view name) const {
  if (auto it = ids_.find(std::string(name)); it != ids_.end()) {
    return VarId{it->second};
  }
  return std::nullopt;
}

const std::string& SymbolTable::name(VarId id) const {
  if (id.value >= names_.size()) {
    throw Error("unknown variable id " + std::to_string(id.value));
  }
  return names_[id.value];
}

// ---------------------------------------------------------------------------
// Printing

std::string to_string(VarId v) { return "v" + std::to_string(v.value); }

std::string to_string(const Literal& l) {
  const auto& a = l.atom;
  const char* op = nullptr;
  switch (a.kind) {
    case AtomKind::kLe: op = l.positive ? " <= " : " !<= "; break;
    case AtomKind::kLt: op = l.positive ? " < " : " !< "; break;
    case AtomKind::kEq: op = l.positive ? " = " : " != "; break;
  }
  return to_string(a.lhs) + op + to_string(a.rhs);
}

std::string to_string(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return to_string(f.literal());
    case Formula::Kind::kAnd:
      return "(" + to_string(f.left()) + " & " + to_string(f.right()) + ")";
    case Formula::Kind::kOr:
      return "(" + to_string(f.left()) + " | " + to_string(f.right()) + ")";
    case Formula::Kind::kNeg: return "~" + to_string(f.left());
  }
  return {};
}

std::string to_string(Theory t) {
  return t == Theory::kPartial ? "partial" : "linear";
}

// ---------------------------------------------------------------------------
// Formula

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

std::size_t literal_hash(const Literal& l) {
  std::size_t h = l.positive ? 0x51ed27u : 0x2f0b1cu;
  h = mix(h, static_cast<std::size_t>(l.atom.kind));
  h = mix(h, l.atom.lhs.value);
  return mix(h, l.atom.rhs.value);
}

}  // namespace

Formula Formula::atom(Literal l) {
  return Formula(std::make_shared<const FormulaNode>(FormulaNode{
      Kind::kAtom, l, std::nullopt, std::nullopt, literal_hash(l), 1}));
}

Formula Formula::conj(Formula a, Formula b) {
  const std::size_t h = mix(mix(0xa11du, a.hash()), b.hash());
  const std::size_t n = 1 + a.size() + b.size();
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kAnd, {}, std::move(a), std::move(b), h, n}));
}

Formula Formula::disj(Formula a, Formula b) {
  const std::size_t h = mix(mix(0x0e5u, a.hash()), b.hash());
  const std::size_t n = 1 + a.size() + b.size();
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kOr, {}, std::move(a), std::move(b), h, n}));
}

Formula Formula::neg(Formula a) {
  const std::size_t h = mix(0x9e9u, a.hash());
  const std::size_t n = 1 + a.size();
  return Formula(std::make_shared<const FormulaNode>(
      FormulaNode{Kind::kNeg, {}, std::move(a), std::nullopt, h, n}));
}

const Literal& Formula::literal() const {
  if (!is_atom()) throw StructureError("literal() on a non-atom formula");
  return node_->literal;
}

const Formula& Formula::left() const {
  if (is_atom()) throw StructureError("left() on an atom");
  return *node_->lhs;
}

const Formula& Formula::right() const {
  if (!is_and() && !is_or()) throw StructureError("right() on a unary node");
  return *node_->rhs;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size() || a.kind() != b.kind()) {
    return false;
  }
  switch (a.kind()) {
    case Formula::Kind::kAtom: return a.literal() == b.literal();
    case Formula::Kind::kNeg: return a.left() == b.left();
    default: return a.left() == b.left() && a.right() == b.right();
  }
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.kind() <=> b.kind(); c != 0) return c;
  switch (a.kind()) {
    case Formula::Kind::kAtom: return a.literal() <=> b.literal();
    case Formula::Kind::kNeg: return a.left() <=> b.left();
    default:
      if (auto c = a.left() <=> b.left(); c != 0) return c;
      return a.right() <=> b.right();
  }
}

namespace {

void collect_vars(const Formula& f, std::vector<VarId>& out) {
  if (f.is_atom()) {
    out.push_back(f.literal().atom.lhs);
    out.push_back(f.literal().atom.rhs);
    return;
  }
  collect_vars(f.left(), out);
  if (!f.is_neg()) collect_vars(f.right(), out);
}

}  // namespace

std::vector<VarId> vars_of(const Formula& f) {
  std::vector<VarId> out;
  collect_vars(f, out);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::size_t atom_count(const Formula& f) {
  if (f.is_atom()) return 1;
  if (f.is_neg()) return atom_count(f.left());
  return atom_count(f.left()) + atom_count(f.right());
}

Formula conjunction_of(const std::vector<Literal>& lits) {
  if (lits.empty()) throw StructureError("empty conjunction");
  Formula f = Formula::atom(lits.front());
  for (std::size_t i = 1; i < lits.size(); ++i) {
    f = Formula::conj(f, Formula::atom(lits[i]));
  }
  return f;
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(std::set<Element> carrier, std::set<ElementPair> pairs)
    : carrier_(carrier.begin(), carrier.end()),
      pairs_(pairs.begin(), pairs.end()) {
  for (const auto& [a, b] : pairs_) {
    if (!carrier.contains(a) || !carrier.contains(b)) {
      throw Error("relation pair (" + std::to_string(a) + "," +
                  std::to_string(b) + ") leaves the carrier");
    }
  }
  dense_ = carrier_.empty() || carrier_.back() < 64;
  if (dense_) {
    rows_.assign(carrier_.empty() ? 0 : carrier_.back() + 1, 0);
    for (const auto& [a, b] : pairs_) rows_[a] |= std::uint64_t{1} << b;
  }
}

bool Relation::in_carrier(Element e) const {
  return std::binary_search(carrier_.begin(), carrier_.end(), e);
}

bool Relation::contains(Element a, Element b) const {
  if (dense_) {
    return a < rows_.size() && b < 64 && ((rows_[a] >> b) & 1u) != 0;
  }
  return std::binary_search(pairs_.begin(), pairs_.end(), ElementPair{a, b});
}

// ---------------------------------------------------------------------------
// Valuation

void Valuation::set(VarId x, Element e) {
  if (x.value >= slots_.size()) slots_.resize(x.value + 1, kUnmapped);
  slots_[x.value] = e;
}

std::optional<Element> Valuation::get(VarId x) const {
  if (x.value >= slots_.size() || slots_[x.value] == kUnmapped) {
    return std::nullopt;
  }
  return static_cast<Element>(slots_[x.value]);
}

Element Valuation::at(VarId x) const {
  if (auto e = get(x)) return *e;
  throw EvalError("variable " + to_string(x) + " is unmapped");
}

std::vector<std::pair<VarId, Element>> Valuation::entries() const {
  std::vector<std::pair<VarId, Element>> out;
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] != kUnmapped) {
      out.emplace_back(VarId{static_cast<std::uint32_t>(i)},
                       static_cast<Element>(slots_[i]));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Semantics

bool eval_literal(const Relation& r, const Valuation& v, const Literal& l) {
  const Element x = v.at(l.atom.lhs);
  const Element y = v.at(l.atom.rhs);
  bool holds = false;
  switch (l.atom.kind) {
    case AtomKind::kLe: holds = r.contains(x, y); break;
    case AtomKind::kLt: holds = r.contains(x, y) && x != y; break;
    case AtomKind::kEq: holds = x == y; break;
  }
  return l.positive == holds;
}

bool eval_formula(const Relation& r, const Valuation& v, const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return eval_literal(r, v, f.literal());
    case Formula::Kind::kAnd:
      return eval_formula(r, v, f.left()) && eval_formula(r, v, f.right());
    case Formula::Kind::kOr:
      return eval_formula(r, v, f.left()) || eval_formula(r, v, f.right());
    case Formula::Kind::kNeg: return !eval_formula(r, v, f.left());
  }
  return false;
}

RelationProps relation_props(const Relation& r) {
  RelationProps p{true, true, true, true};
  const auto& c = r.carrier();
  for (Element a : c) {
    if (!r.contains(a, a)) p.refl = false;
  }
  for (const auto& [a, b] : r.pairs()) {
    if (a != b && r.contains(b, a)) p.antisym = false;
    for (Element d : c) {
      if (r.contains(b, d) && !r.contains(a, d)) p.trans = false;
    }
  }
  for (Element a : c) {
    for (Element b : c) {
      if (!r.contains(a, b) && !r.contains(b, a)) p.total = false;
    }
  }
  return p;
}

bool is_partial_order(const Relation& r) {
  const auto p = relation_props(r);
  return p.refl && p.trans && p.antisym;
}

bool is_linear_order(const Relation& r) {
  const auto p = relation_props(r);
  return p.refl && p.trans && p.antisym && p.total;
}

}  // namespace orderproof
