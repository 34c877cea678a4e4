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

#include <map>
#include <unordered_map>
#include <utility>

namespace orderproof {

ConversionError::ConversionError(ConvProof::Rule rule, const Formula& at)
    : Error(std::string(rule_name(rule)) + " does not apply to " +
            to_string(at)),
      rule_(rule) {}

CheckError::CheckError(Kind kind, std::string where, const std::string& what)
    : Error(std::string(to_string(kind)) + " at " +
            (where.empty() ? std::string("<root>") : where) + ": " + what),
      kind_(kind),
      where_(std::move(where)) {}

std::string_view to_string(CheckError::Kind k) {
  switch (k) {
    case CheckError::Kind::kMissingAssumption: return "missing assumption";
    case CheckError::Kind::kVariableMismatch: return "variable mismatch";
    case CheckError::Kind::kPolarityMismatch: return "polarity mismatch";
    case CheckError::Kind::kRuleShape: return "rule shape";
    case CheckError::Kind::kBranchMismatch: return "branch mismatch";
    case CheckError::Kind::kConversion: return "conversion failure";
    case CheckError::Kind::kTheory: return "theory violation";
    case CheckError::Kind::kNotFalse: return "not a refutation";
  }
  return "?";
}

namespace {

// Rule path for error locations. Kept as a stack of segments so that deep
// certificates do not pay for string building on the success path.
class Path {
 public:
  struct Scope {
    Path& path;
    Scope(Path& p, std::string_view seg) : path(p) { p.segs_.push_back(seg); }
    ~Scope() { path.segs_.pop_back(); }
  };
  std::string str() const {
    std::string s;
    for (auto seg : segs_) {
      if (!s.empty()) s += '/';
      s += seg;
    }
    return s;
  }

 private:
  std::vector<std::string_view> segs_;
};

bool is_pos_le(const Literal& l) {
  return l.positive && l.atom.kind == AtomKind::kLe;
}

template <typename Contains>
Literal check_atom(const CertProof& p, const Contains& contains, Path& path) {
  using Rule = CertProof::Rule;
  using Kind = CheckError::Kind;
  switch (p.rule()) {
    case Rule::kAssm: {
      Path::Scope s(path, "assm");
      const Literal& l = p.literal();
      if (!is_pos_le(l)) {
        throw CheckError(Kind::kRuleShape, path.str(),
                         "AssmP needs a positive <= literal, got " +
                             to_string(l));
      }
      if (!contains(l)) {
        throw CheckError(Kind::kMissingAssumption, path.str(), to_string(l));
      }
      return l;
    }
    case Rule::kRefl:
      return Literal::pos(OrderAtom::le(p.var(), p.var()));
    case Rule::kTrans: {
      Literal a, b;
      {
        Path::Scope s(path, "trans.1");
        a = check_atom(p.first(), contains, path);
      }
      {
        Path::Scope s(path, "trans.2");
        b = check_atom(p.second(), contains, path);
      }
      Path::Scope s(path, "trans");
      if (!is_pos_le(a) || !is_pos_le(b)) {
        throw CheckError(Kind::kRuleShape, path.str(),
                         "TransP premises must prove <=, got " + to_string(a) +
                             " and " + to_string(b));
      }
      if (a.atom.rhs != b.atom.lhs) {
        throw CheckError(Kind::kVariableMismatch, path.str(),
                         to_string(a) + " does not chain with " +
                             to_string(b));
      }
      return Literal::pos(OrderAtom::le(a.atom.lhs, b.atom.rhs));
    }
    case Rule::kAntisym: {
      Literal a, b;
      {
        Path::Scope s(path, "antisym.1");
        a = check_atom(p.first(), contains, path);
      }
      {
        Path::Scope s(path, "antisym.2");
        b = check_atom(p.second(), contains, path);
      }
      Path::Scope s(path, "antisym");
      if (!is_pos_le(a) || !is_pos_le(b)) {
        throw CheckError(Kind::kRuleShape, path.str(),
                         "AntisymP premises must prove <=, got " +
                             to_string(a) + " and " + to_string(b));
      }
      if (a.atom.lhs != b.atom.rhs || a.atom.rhs != b.atom.lhs) {
        throw CheckError(Kind::kVariableMismatch, path.str(),
                         to_string(a) + " is not the converse of " +
                             to_string(b));
      }
      return Literal::pos(OrderAtom::eq(a.atom.lhs, a.atom.rhs));
    }
    case Rule::kEqE1:
    case Rule::kEqE2: {
      const bool first = p.rule() == Rule::kEqE1;
      Path::Scope s(path, first ? "eqe1" : "eqe2");
      const Literal& l = p.literal();
      if (l.atom.kind != AtomKind::kEq) {
        throw CheckError(Kind::kRuleShape, path.str(),
                         "equality elimination on " + to_string(l));
      }
      if (!l.positive) {
        throw CheckError(Kind::kPolarityMismatch, path.str(),
                         "equality elimination on " + to_string(l));
      }
      if (!contains(l)) {
        throw CheckError(Kind::kMissingAssumption, path.str(), to_string(l));
      }
      return first ? Literal::pos(OrderAtom::le(l.atom.lhs, l.atom.rhs))
                   : Literal::pos(OrderAtom::le(l.atom.rhs, l.atom.lhs));
    }
    case Rule::kContr: {
      Literal proved;
      {
        Path::Scope s(path, "contr.1");
        proved = check_atom(p.first(), contains, path);
      }
      Path::Scope s(path, "contr");
      const Literal& l = p.literal();
      if (l.positive) {
        throw CheckError(Kind::kPolarityMismatch, path.str(),
                         "ContrP needs a negative literal, got " +
                             to_string(l));
      }
      if (!contains(l)) {
        throw CheckError(Kind::kMissingAssumption, path.str(), to_string(l));
      }
      if (proved != l.negated()) {
        throw CheckError(Kind::kRuleShape, path.str(),
                         "premise proves " + to_string(proved) +
                             ", expected " + to_string(l.negated()));
      }
      return kFls;
    }
  }
  throw CheckError(CheckError::Kind::kRuleShape, path.str(), "unknown rule");
}

bool atom_level(ConvProof::Rule r) {
  switch (r) {
    case ConvProof::Rule::kLessLe:
    case ConvProof::Rule::kNlessLe:
    case ConvProof::Rule::kNleConv:
    case ConvProof::Rule::kNlessConv:
    case ConvProof::Rule::kAllConv: return true;
    default: return false;
  }
}

// Atom-level rewrite of a single Atom node.
Formula apply_atom_rule(ConvProof::Rule r, const Formula& f) {
  using Rule = ConvProof::Rule;
  if (r == Rule::kAllConv) return f;
  if (!f.is_atom()) throw ConversionError(r, f);
  const Literal& l = f.literal();
  const VarId x = l.atom.lhs;
  const VarId y = l.atom.rhs;
  switch (r) {
    case Rule::kLessLe:
      if (l.positive && l.atom.kind == AtomKind::kLt) {
        return Formula::conj(Formula::atom(Literal::pos(OrderAtom::le(x, y))),
                             Formula::atom(Literal::neg(OrderAtom::eq(x, y))));
      }
      break;
    case Rule::kNlessLe:
      if (!l.positive && l.atom.kind == AtomKind::kLt) {
        return Formula::disj(Formula::atom(Literal::neg(OrderAtom::le(x, y))),
                             Formula::atom(Literal::pos(OrderAtom::eq(x, y))));
      }
      break;
    case Rule::kNleConv:
      if (!l.positive && l.atom.kind == AtomKind::kLe) {
        return Formula::conj(Formula::atom(Literal::neg(OrderAtom::eq(x, y))),
                             Formula::atom(Literal::pos(OrderAtom::le(y, x))));
      }
      break;
    case Rule::kNlessConv:
      if (!l.positive && l.atom.kind == AtomKind::kLt) {
        return Formula::atom(Literal::pos(OrderAtom::le(y, x)));
      }
      break;
    default: break;
  }
  throw ConversionError(r, f);
}

}  // namespace

Literal check_atom_proof(const std::set<Literal>& assumptions,
                         const CertProof& p) {
  Path path;
  return check_atom(
      p, [&](const Literal& l) { return assumptions.contains(l); }, path);
}

Formula apply_conv(const ConvProof& c, const Formula& f) {
  using Rule = ConvProof::Rule;
  const Rule r = c.rule();
  if (atom_level(r)) return apply_atom_rule(r, f);
  switch (r) {
    case Rule::kAtomConv:
      if (!f.is_atom() || !atom_level(c.first().rule())) {
        throw ConversionError(r, f);
      }
      return apply_atom_rule(c.first().rule(), f);
    case Rule::kArgConv:
      if (!f.is_neg()) throw ConversionError(r, f);
      return Formula::neg(apply_conv(c.first(), f.left()));
    case Rule::kBinopConv:
      if (f.is_and()) {
        return Formula::conj(apply_conv(c.first(), f.left()),
                             apply_conv(c.second(), f.right()));
      }
      if (f.is_or()) {
        return Formula::disj(apply_conv(c.first(), f.left()),
                             apply_conv(c.second(), f.right()));
      }
      throw ConversionError(r, f);
    case Rule::kThenConv:
      return apply_conv(c.second(), apply_conv(c.first(), f));
    case Rule::kNegAtomConv:
      if (!f.is_neg() || !f.left().is_atom()) throw ConversionError(r, f);
      return Formula::atom(f.left().literal().negated());
    case Rule::kNegNegConv:
      if (!f.is_neg() || !f.left().is_neg()) throw ConversionError(r, f);
      return f.left().left();
    case Rule::kNegAndConv:
      if (!f.is_neg() || !f.left().is_and()) throw ConversionError(r, f);
      return Formula::disj(Formula::neg(f.left().left()),
                           Formula::neg(f.left().right()));
    case Rule::kNegOrConv:
      if (!f.is_neg() || !f.left().is_or()) throw ConversionError(r, f);
      return Formula::conj(Formula::neg(f.left().left()),
                           Formula::neg(f.left().right()));
    case Rule::kAndOrLConv:
      if (!f.is_and() || !f.left().is_or()) throw ConversionError(r, f);
      return Formula::disj(Formula::conj(f.left().left(), f.right()),
                           Formula::conj(f.left().right(), f.right()));
    case Rule::kAndOrRConv:
      if (!f.is_and() || !f.right().is_or()) throw ConversionError(r, f);
      return Formula::disj(Formula::conj(f.left(), f.right().left()),
                           Formula::conj(f.left(), f.right().right()));
    default: break;
  }
  throw ConversionError(r, f);
}

bool uses_linear_only_rule(const ConvProof& c) {
  if (is_linear_only(c.rule())) return true;
  if (c.is_leaf()) return false;
  if (uses_linear_only_rule(c.first())) return true;
  return (c.rule() == ConvProof::Rule::kBinopConv ||
          c.rule() == ConvProof::Rule::kThenConv) &&
         uses_linear_only_rule(c.second());
}

namespace {

// Formula context with O(1) membership and scoped extension. Atom members
// are mirrored into a literal multiset for lifted atom proofs.
class Context {
 public:
  explicit Context(const std::vector<Formula>& init) {
    for (const auto& f : init) push(f);
  }
  void push(const Formula& f) {
    ++formulas_[f];
    if (f.is_atom()) ++literals_[f.literal()];
    stack_.push_back(f);
  }
  void pop() {
    const Formula f = stack_.back();
    stack_.pop_back();
    if (--formulas_[f] == 0) formulas_.erase(f);
    if (f.is_atom()) {
      if (--literals_[f.literal()] == 0) literals_.erase(f.literal());
    }
  }
  bool contains(const Formula& f) const { return formulas_.contains(f); }
  bool has_literal(const Literal& l) const { return literals_.contains(l); }

 private:
  std::unordered_map<Formula, int, FormulaHash> formulas_;
  std::map<Literal, int> literals_;
  std::vector<Formula> stack_;
};

struct Pushed {
  Context& ctx;
  int n = 0;
  void push(const Formula& f) {
    ctx.push(f);
    ++n;
  }
  ~Pushed() {
    while (n-- > 0) ctx.pop();
  }
};

class PropChecker {
 public:
  PropChecker(const std::vector<Formula>& init, Theory theory)
      : ctx_(init), theory_(theory) {}

  Formula check(const PropProof& p) {
    using Rule = PropProof::Rule;
    using Kind = CheckError::Kind;
    switch (p.rule()) {
      case Rule::kLift: {
        Path::Scope s(path_, "lift");
        const Literal l = check_atom(
            p.cert(), [&](const Literal& a) { return ctx_.has_literal(a); },
            path_);
        return Formula::atom(l);
      }
      case Rule::kConjE: {
        Path::Scope s(path_, "conje");
        const Formula both = Formula::conj(p.lhs(), p.rhs());
        if (!ctx_.contains(both)) {
          throw CheckError(Kind::kMissingAssumption, path_.str(),
                           to_string(both));
        }
        Pushed scope{ctx_};
        scope.push(p.lhs());
        scope.push(p.rhs());
        return check(p.body());
      }
      case Rule::kDisjE: {
        Path::Scope s(path_, "disje");
        const Formula either = Formula::disj(p.lhs(), p.rhs());
        if (!ctx_.contains(either)) {
          throw CheckError(Kind::kMissingAssumption, path_.str(),
                           to_string(either));
        }
        std::optional<Formula> left;
        {
          Path::Scope b(path_, "1");
          Pushed scope{ctx_};
          scope.push(p.lhs());
          left = check(p.body());
        }
        Path::Scope b(path_, "2");
        Pushed scope{ctx_};
        scope.push(p.rhs());
        Formula right = check(p.body2());
        if (!(*left == right)) {
          throw CheckError(Kind::kBranchMismatch, path_.str(),
                           to_string(*left) + " vs " + to_string(right));
        }
        return right;
      }
      case Rule::kConv: {
        Path::Scope s(path_, "conv");
        const Formula& source = p.lhs();
        if (!ctx_.contains(source)) {
          throw CheckError(Kind::kMissingAssumption, path_.str(),
                           to_string(source));
        }
        if (theory_ == Theory::kPartial &&
            uses_linear_only_rule(p.conversion())) {
          throw CheckError(Kind::kTheory, path_.str(),
                           "linear-order conversion under partial theory");
        }
        std::optional<Formula> target;
        try {
          target = apply_conv(p.conversion(), source);
        } catch (const ConversionError& e) {
          throw CheckError(Kind::kConversion, path_.str(), e.what());
        }
        Pushed scope{ctx_};
        scope.push(*target);
        return check(p.body());
      }
    }
    throw CheckError(CheckError::Kind::kRuleShape, path_.str(),
                     "unknown rule");
  }

 private:
  Context ctx_;
  Theory theory_;
  Path path_;
};

}  // namespace

Formula check_prop_proof(const std::vector<Formula>& context,
                         const PropProof& p, Theory theory) {
  PropChecker checker(context, theory);
  return checker.check(p);
}

void check_refutation(const Formula& goal, const PropProof& p, Theory theory) {
  const Formula concl = check_prop_proof({goal}, p, theory);
  if (!(concl == Formula::atom(kFls))) {
    throw CheckError(CheckError::Kind::kNotFalse, "",
                     "certificate concludes " + to_string(concl));
  }
}

}  // namespace orderproof
