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

// Variables, order atoms, literals, formulas and their finite-relation
// semantics.

#ifndef ORDERPROOF_CORE_H_
#define ORDERPROOF_CORE_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace orderproof {

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A variable was queried that the valuation does not map.
class EvalError : public Error {
 public:
  using Error::Error;
};

// A formula did not have the shape an operation requires (e.g. a clause).
class StructureError : public Error {
 public:
  using Error::Error;
};

// Malformed text input. `line` and `column` are 1-based; `offset` is the
// 0-based byte offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t offset, std::size_t line,
             std::size_t column)
      : Error(what), offset_(offset), line_(line), column_(column) {}

  std::size_t offset() const { return offset_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t offset_;
  std::size_t line_;
  std::size_t column_;
};

// An internal invariant failed. Never caught inside the library.
class InvariantError : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Variables

struct VarId {
  std::uint32_t value = 0;

  constexpr VarId() = default;
  constexpr explicit VarId(std::uint32_t v) : value(v) {}

  friend constexpr auto operator<=>(VarId, VarId) = default;
};

using VarPair = std::pair<VarId, VarId>;

// Ids at or above this bound are never handed out by SymbolTable; the
// replay kernel uses them for schema binders.
inline constexpr std::uint32_t kMaxUserVar = 1u << 30;

class SymbolTable {
 public:
  // Returns the existing id for `name`, or the next fresh one.
  VarId intern(std::string_view name);

  std::optional<VarId> find(std::string_view name) const;
  const std::string& name(VarId id) const;
  std::size_t size() const { return names_.size(); }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> ids_;
};

// ---------------------------------------------------------------------------
// Atoms and literals

enum class AtomKind : std::uint8_t { kLe, kLt, kEq };

struct OrderAtom {
  AtomKind kind = AtomKind::kLe;
  VarId lhs;
  VarId rhs;

  static constexpr OrderAtom le(VarId x, VarId y) { return {AtomKind::kLe, x, y}; }
  static constexpr OrderAtom lt(VarId x, VarId y) { return {AtomKind::kLt, x, y}; }
  static constexpr OrderAtom eq(VarId x, VarId y) { return {AtomKind::kEq, x, y}; }

  friend constexpr auto operator<=>(const OrderAtom&, const OrderAtom&) = default;
};

struct Literal {
  bool positive = true;
  OrderAtom atom;

  constexpr Literal negated() const { return {!positive, atom}; }

  static constexpr Literal pos(OrderAtom a) { return {true, a}; }
  static constexpr Literal neg(OrderAtom a) { return {false, a}; }

  friend constexpr auto operator<=>(const Literal&, const Literal&) = default;
};

// The canonical false literal: v0 != v0.
inline constexpr Literal kFls = Literal::neg(OrderAtom::eq(VarId{0}, VarId{0}));

std::string to_string(VarId v);
std::string to_string(const Literal& l);

// ---------------------------------------------------------------------------
// Formulas
//
// Immutable trees with shared subterms. Every node caches its structural
// hash and size so that equality tests on large formulas stay cheap.

struct FormulaNode;

class Formula {
 public:
  enum class Kind : std::uint8_t { kAtom, kAnd, kOr, kNeg };

  static Formula atom(Literal l);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula neg(Formula a);

  Kind kind() const;
  bool is_atom() const { return kind() == Kind::kAtom; }
  bool is_and() const { return kind() == Kind::kAnd; }
  bool is_or() const { return kind() == Kind::kOr; }
  bool is_neg() const { return kind() == Kind::kNeg; }

  // Requires is_atom().
  const Literal& literal() const;
  // Requires And/Or (left, right) or Neg (left only).
  const Formula& left() const;
  const Formula& right() const;

  std::size_t hash() const;
  // Number of nodes.
  std::size_t size() const;

  friend bool operator==(const Formula& a, const Formula& b);
  // Arbitrary but total structural order.
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  friend struct FormulaNode;
  explicit Formula(std::shared_ptr<const FormulaNode> n) : node_(std::move(n)) {}

  std::shared_ptr<const FormulaNode> node_;
};

struct FormulaNode {
  Formula::Kind kind;
  Literal literal;
  std::optional<Formula> lhs;
  std::optional<Formula> rhs;
  std::size_t hash;
  std::size_t size;
};

inline Formula::Kind Formula::kind() const { return node_->kind; }
inline std::size_t Formula::hash() const { return node_->hash; }
inline std::size_t Formula::size() const { return node_->size; }

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

std::string to_string(const Formula& f);

// Variables occurring in `f`, ascending.
std::vector<VarId> vars_of(const Formula& f);
// Number of Atom leaves.
std::size_t atom_count(const Formula& f);

// Left-nested conjunction of the literals; requires a non-empty sequence.
Formula conjunction_of(const std::vector<Literal>& lits);

enum class Theory : std::uint8_t { kPartial, kLinear };

std::string to_string(Theory t);

// ---------------------------------------------------------------------------
// Finite relations and valuations

using Element = std::uint32_t;
using ElementPair = std::pair<Element, Element>;

class Relation {
 public:
  Relation() = default;
  // Throws Error if a pair component is outside the carrier.
  Relation(std::set<Element> carrier, std::set<ElementPair> pairs);

  const std::vector<Element>& carrier() const { return carrier_; }
  const std::vector<ElementPair>& pairs() const { return pairs_; }
  bool in_carrier(Element e) const;
  bool contains(Element a, Element b) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.carrier_ == b.carrier_ && a.pairs_ == b.pairs_;
  }

 private:
  std::vector<Element> carrier_;       // sorted
  std::vector<ElementPair> pairs_;     // sorted
  // Bit matrix over carrier elements < 64, for the hot lookup path.
  std::vector<std::uint64_t> rows_;
  bool dense_ = false;
};

class Valuation {
 public:
  Valuation() = default;

  void set(VarId x, Element e);
  std::optional<Element> get(VarId x) const;
  // Throws EvalError when unmapped.
  Element at(VarId x) const;
  // Mapped variables, ascending.
  std::vector<std::pair<VarId, Element>> entries() const;

  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.slots_ == b.slots_;
  }

 private:
  static constexpr std::int64_t kUnmapped = -1;
  std::vector<std::int64_t> slots_;
};

bool eval_literal(const Relation& r, const Valuation& v, const Literal& l);
bool eval_formula(const Relation& r, const Valuation& v, const Formula& f);

struct RelationProps {
  bool refl = false;
  bool trans = false;
  bool antisym = false;
  bool total = false;
};

RelationProps relation_props(const Relation& r);

bool is_partial_order(const Relation& r);
bool is_linear_order(const Relation& r);

}  // namespace orderproof

template <>
struct std::hash<orderproof::VarId> {
  std::size_t operator()(orderproof::VarId v) const noexcept {
    return std::hash<std::uint32_t>{}(v.value);
  }
};

#endif  // ORDERPROOF_CORE_H_
