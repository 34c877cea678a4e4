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

#include <charconv>
#include <vector>

#include "orderproof/sexpr.h"

namespace orderproof {

namespace {

std::size_t mix(std::size_t h, std::size_t v) {
  return h ^ (v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2));
}

}  // namespace

// ---------------------------------------------------------------------------
// Terms

struct GTrm::Node {
  Kind kind;
  std::string name;
  VarId var;
  std::optional<GTrm> fun;
  std::optional<GTrm> arg;
  std::size_t hash;
};

GTrm GTrm::constant(std::string name) {
  const std::size_t h = mix(0xc0u, std::hash<std::string>{}(name));
  return GTrm(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(name), VarId{}, std::nullopt, std::nullopt, h}));
}

GTrm GTrm::app(GTrm f, GTrm x) {
  const std::size_t h = mix(mix(0xa9u, f.hash()), x.hash());
  return GTrm(std::make_shared<const Node>(
      Node{Kind::kApp, {}, VarId{}, std::move(f), std::move(x), h}));
}

GTrm GTrm::var(VarId v) {
  return GTrm(std::make_shared<const Node>(
      Node{Kind::kVar, {}, v, std::nullopt, std::nullopt, mix(0x7au, v.value)}));
}

GTrm::Kind GTrm::kind() const { return node_->kind; }
const std::string& GTrm::name() const { return node_->name; }
VarId GTrm::var_id() const { return node_->var; }
const GTrm& GTrm::fun() const { return *node_->fun; }
const GTrm& GTrm::arg() const { return *node_->arg; }
std::size_t GTrm::hash() const { return node_->hash; }

bool operator==(const GTrm& a, const GTrm& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case GTrm::Kind::kConst: return a.name() == b.name();
    case GTrm::Kind::kVar: return a.var_id() == b.var_id();
    case GTrm::Kind::kApp: return a.fun() == b.fun() && a.arg() == b.arg();
  }
  return false;
}

std::string serialize_gtrm(const GTrm& t) {
  switch (t.kind()) {
    case GTrm::Kind::kConst: return t.name();
    case GTrm::Kind::kVar: return "v" + std::to_string(t.var_id().value);
    case GTrm::Kind::kApp:
      return "(" + serialize_gtrm(t.fun()) + " " + serialize_gtrm(t.arg()) + ")";
  }
  return "?";
}

std::string to_string(const GTrm& t) { return serialize_gtrm(t); }

namespace {

GTrm app2(const char* c, GTrm a, GTrm b) {
  return GTrm::app(GTrm::app(GTrm::constant(c), std::move(a)), std::move(b));
}

GTrm app1(const char* c, GTrm a) {
  return GTrm::app(GTrm::constant(c), std::move(a));
}

const char* kind_name(AtomKind k) {
  switch (k) {
    case AtomKind::kLe: return "le";
    case AtomKind::kLt: return "lt";
    case AtomKind::kEq: return "eq";
  }
  return "?";
}

bool is_const(const GTrm& t, std::string_view name) {
  return t.kind() == GTrm::Kind::kConst && t.name() == name;
}

bool is_user_var(const GTrm& t) {
  return t.kind() == GTrm::Kind::kVar && t.var_id().value < kMaxUserVar;
}

// Matches ((c a) b) and returns c's name.
std::optional<std::string> binary_head(const GTrm& t) {
  if (t.kind() != GTrm::Kind::kApp || t.fun().kind() != GTrm::Kind::kApp ||
      t.fun().fun().kind() != GTrm::Kind::kConst) {
    return std::nullopt;
  }
  return t.fun().fun().name();
}

}  // namespace

GTrm encode_literal(const Literal& l) {
  GTrm a = app2(kind_name(l.atom.kind), GTrm::var(l.atom.lhs),
                GTrm::var(l.atom.rhs));
  return l.positive ? a : app1("not", std::move(a));
}

GTrm encode_formula(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return app1("atom", encode_literal(f.literal()));
    case Formula::Kind::kAnd:
      return app2("and", encode_formula(f.left()), encode_formula(f.right()));
    case Formula::Kind::kOr:
      return app2("or", encode_formula(f.left()), encode_formula(f.right()));
    case Formula::Kind::kNeg: return app1("not", encode_formula(f.left()));
  }
  return GTrm::constant("?");
}

std::optional<Literal> decode_literal_term(const GTrm& t) {
  if (t.kind() == GTrm::Kind::kApp && is_const(t.fun(), "not")) {
    auto inner = decode_literal_term(t.arg());
    if (!inner || !inner->positive) return std::nullopt;
    return inner->negated();
  }
  auto head = binary_head(t);
  if (!head || !is_user_var(t.fun().arg()) || !is_user_var(t.arg())) {
    return std::nullopt;
  }
  const VarId x = t.fun().arg().var_id();
  const VarId y = t.arg().var_id();
  if (*head == "le") return Literal::pos(OrderAtom::le(x, y));
  if (*head == "lt") return Literal::pos(OrderAtom::lt(x, y));
  if (*head == "eq") return Literal::pos(OrderAtom::eq(x, y));
  return std::nullopt;
}

std::optional<Formula> decode_formula_term(const GTrm& t) {
  if (t.kind() != GTrm::Kind::kApp) return std::nullopt;
  if (is_const(t.fun(), "atom")) {
    auto l = decode_literal_term(t.arg());
    if (!l) return std::nullopt;
    return Formula::atom(*l);
  }
  if (is_const(t.fun(), "not")) {
    auto f = decode_formula_term(t.arg());
    if (!f) return std::nullopt;
    return Formula::neg(*f);
  }
  auto head = binary_head(t);
  if (!head || (*head != "and" && *head != "or")) return std::nullopt;
  auto a = decode_formula_term(t.fun().arg());
  if (!a) return std::nullopt;
  auto b = decode_formula_term(t.arg());
  if (!b) return std::nullopt;
  return *head == "and" ? Formula::conj(*a, *b) : Formula::disj(*a, *b);
}

// ---------------------------------------------------------------------------
// Propositions

struct MetaProp::Node {
  Kind kind;
  std::optional<GTrm> t1;
  std::optional<GTrm> t2;
  std::optional<MetaProp> a;
  std::optional<MetaProp> b;
  VarId binder;
};

MetaProp MetaProp::obj(GTrm t) {
  return MetaProp(std::make_shared<const Node>(
      Node{Kind::kObj, std::move(t), std::nullopt, std::nullopt, std::nullopt, {}}));
}

MetaProp MetaProp::implies(MetaProp a, MetaProp b) {
  return MetaProp(std::make_shared<const Node>(
      Node{Kind::kImplies, std::nullopt, std::nullopt, std::move(a), std::move(b), {}}));
}

MetaProp MetaProp::all(VarId binder, MetaProp body) {
  return MetaProp(std::make_shared<const Node>(
      Node{Kind::kAll, std::nullopt, std::nullopt, std::move(body), std::nullopt, binder}));
}

MetaProp MetaProp::equiv(GTrm lhs, GTrm rhs) {
  return MetaProp(std::make_shared<const Node>(
      Node{Kind::kEquiv, std::move(lhs), std::move(rhs), std::nullopt, std::nullopt, {}}));
}

MetaProp::Kind MetaProp::kind() const { return node_->kind; }
const GTrm& MetaProp::term() const { return *node_->t1; }
const GTrm& MetaProp::rhs() const { return *node_->t2; }
const MetaProp& MetaProp::left() const { return *node_->a; }
const MetaProp& MetaProp::right() const { return *node_->b; }
VarId MetaProp::binder() const { return node_->binder; }

bool operator==(const MetaProp& a, const MetaProp& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case MetaProp::Kind::kObj: return a.term() == b.term();
    case MetaProp::Kind::kImplies:
      return a.left() == b.left() && a.right() == b.right();
    case MetaProp::Kind::kAll:
      return a.binder() == b.binder() && a.left() == b.left();
    case MetaProp::Kind::kEquiv:
      return a.term() == b.term() && a.rhs() == b.rhs();
  }
  return false;
}

std::string to_string(const MetaProp& p) {
  switch (p.kind()) {
    case MetaProp::Kind::kObj: {
      if (auto f = decode_formula_term(p.term())) return to_string(*f);
      return serialize_gtrm(p.term());
    }
    case MetaProp::Kind::kImplies:
      return "(" + to_string(p.left()) + " ==> " + to_string(p.right()) + ")";
    case MetaProp::Kind::kAll:
      return "!v" + std::to_string(p.binder().value) + ". " + to_string(p.left());
    case MetaProp::Kind::kEquiv:
      return serialize_gtrm(p.term()) + " == " + serialize_gtrm(p.rhs());
  }
  return "?";
}

namespace {

GTrm subst_trm(const GTrm& s, VarId x, const GTrm& t) {
  switch (s.kind()) {
    case GTrm::Kind::kConst: return s;
    case GTrm::Kind::kVar: return s.var_id() == x ? t : s;
    case GTrm::Kind::kApp:
      return GTrm::app(subst_trm(s.fun(), x, t), subst_trm(s.arg(), x, t));
  }
  return s;
}

}  // namespace

MetaProp subst(const MetaProp& p, VarId x, const GTrm& t) {
  switch (p.kind()) {
    case MetaProp::Kind::kObj: return MetaProp::obj(subst_trm(p.term(), x, t));
    case MetaProp::Kind::kImplies:
      return MetaProp::implies(subst(p.left(), x, t), subst(p.right(), x, t));
    case MetaProp::Kind::kAll:
      if (p.binder() == x) return p;
      return MetaProp::all(p.binder(), subst(p.left(), x, t));
    case MetaProp::Kind::kEquiv:
      return MetaProp::equiv(subst_trm(p.term(), x, t), subst_trm(p.rhs(), x, t));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Proof terms

struct GPrf::Node {
  Kind kind;
  std::string name;
  std::optional<GTrm> term;
  std::optional<GPrf> a;
  std::optional<GPrf> b;
  std::size_t size;
};

namespace {

std::size_t sat_add(std::size_t a, std::size_t b) {
  const std::size_t s = a + b;
  return s < a ? static_cast<std::size_t>(-1) : s;
}

}  // namespace

GPrf GPrf::pthm(std::string name) {
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kPThm, std::move(name), std::nullopt, std::nullopt, std::nullopt, 1}));
}

GPrf GPrf::bound(GTrm t) {
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kBound, {}, std::move(t), std::nullopt, std::nullopt, 1}));
}

GPrf GPrf::appp(GPrf p, GPrf q) {
  const std::size_t n = sat_add(1, sat_add(p.size(), q.size()));
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kAppP, {}, std::nullopt, std::move(p), std::move(q), n}));
}

GPrf GPrf::absp(GTrm t, GPrf p) {
  const std::size_t n = sat_add(1, p.size());
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kAbsP, {}, std::move(t), std::move(p), std::nullopt, n}));
}

GPrf GPrf::appt(GPrf p, GTrm t) {
  const std::size_t n = sat_add(1, p.size());
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kAppt, {}, std::move(t), std::move(p), std::nullopt, n}));
}

GPrf GPrf::convp(GTrm t, GPrf c, GPrf p) {
  const std::size_t n = sat_add(1, sat_add(c.size(), p.size()));
  return GPrf(std::make_shared<const Node>(
      Node{Kind::kConvP, {}, std::move(t), std::move(c), std::move(p), n}));
}

GPrf::Kind GPrf::kind() const { return node_->kind; }
const std::string& GPrf::name() const { return node_->name; }
const GTrm& GPrf::term() const { return *node_->term; }
const GPrf& GPrf::first() const { return *node_->a; }
const GPrf& GPrf::second() const { return *node_->b; }
std::size_t GPrf::size() const { return node_->size; }

bool operator==(const GPrf& a, const GPrf& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size()) return false;
  switch (a.kind()) {
    case GPrf::Kind::kPThm: return a.name() == b.name();
    case GPrf::Kind::kBound: return a.term() == b.term();
    case GPrf::Kind::kAppP: return a.first() == b.first() && a.second() == b.second();
    case GPrf::Kind::kAbsP:
    case GPrf::Kind::kAppt: return a.term() == b.term() && a.first() == b.first();
    case GPrf::Kind::kConvP:
      return a.term() == b.term() && a.first() == b.first() &&
             a.second() == b.second();
  }
  return false;
}

std::string serialize_gprf(const GPrf& p) {
  switch (p.kind()) {
    case GPrf::Kind::kPThm: return "(pthm " + p.name() + ")";
    case GPrf::Kind::kBound: return "(bound " + serialize_gtrm(p.term()) + ")";
    case GPrf::Kind::kAppP:
      return "(appp " + serialize_gprf(p.first()) + " " +
             serialize_gprf(p.second()) + ")";
    case GPrf::Kind::kAbsP:
      return "(absp " + serialize_gtrm(p.term()) + " " +
             serialize_gprf(p.first()) + ")";
    case GPrf::Kind::kAppt:
      return "(appt " + serialize_gprf(p.first()) + " " +
             serialize_gtrm(p.term()) + ")";
    case GPrf::Kind::kConvP:
      return "(convp " + serialize_gtrm(p.term()) + " " +
             serialize_gprf(p.first()) + " " + serialize_gprf(p.second()) + ")";
  }
  return "?";
}

namespace {

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_';
}

GTrm decode_gtrm(std::string_view text, const SExpr& e) {
  if (e.is_list) {
    if (e.items.size() != 2) {
      fail_at(text, e.offset, "an application has exactly two parts");
    }
    return GTrm::app(decode_gtrm(text, e.items[0]), decode_gtrm(text, e.items[1]));
  }
  const std::string& s = e.symbol;
  for (char c : s) {
    if (!is_name_char(c)) fail_at(text, e.offset, "bad term symbol '" + s + "'");
  }
  if (s.size() >= 2 && s[0] == 'v' && s[1] >= '0' && s[1] <= '9') {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(s.data() + 1, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size()) {
      fail_at(text, e.offset, "bad variable '" + s + "'");
    }
    return GTrm::var(VarId{value});
  }
  return GTrm::constant(s);
}

void expect_arity(std::string_view text, const SExpr& e, std::size_t n,
                  const char* head) {
  if (e.items.size() != n + 1) {
    fail_at(text, e.offset,
            std::string("'") + head + "' takes " + std::to_string(n) +
                " argument(s)");
  }
}

GPrf decode_gprf(std::string_view text, const SExpr& e) {
  if (e.is_form("pthm")) {
    expect_arity(text, e, 1, "pthm");
    if (e.items[1].is_list) fail_at(text, e.items[1].offset, "expected a name");
    return GPrf::pthm(e.items[1].symbol);
  }
  if (e.is_form("bound")) {
    expect_arity(text, e, 1, "bound");
    return GPrf::bound(decode_gtrm(text, e.items[1]));
  }
  if (e.is_form("appp")) {
    expect_arity(text, e, 2, "appp");
    return GPrf::appp(decode_gprf(text, e.items[1]), decode_gprf(text, e.items[2]));
  }
  if (e.is_form("absp")) {
    expect_arity(text, e, 2, "absp");
    return GPrf::absp(decode_gtrm(text, e.items[1]), decode_gprf(text, e.items[2]));
  }
  if (e.is_form("appt")) {
    expect_arity(text, e, 2, "appt");
    return GPrf::appt(decode_gprf(text, e.items[1]), decode_gtrm(text, e.items[2]));
  }
  if (e.is_form("convp")) {
    expect_arity(text, e, 3, "convp");
    return GPrf::convp(decode_gtrm(text, e.items[1]), decode_gprf(text, e.items[2]),
                       decode_gprf(text, e.items[3]));
  }
  fail_at(text, e.offset, "expected pthm, bound, appp, absp, appt or convp");
}

}  // namespace

GPrf parse_gprf(std::string_view text) {
  return decode_gprf(text, parse_sexpr(text));
}

// ---------------------------------------------------------------------------
// Sigma

ReplayError::ReplayError(Kind kind, const std::string& what)
    : Error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

std::string_view to_string(ReplayError::Kind k) {
  switch (k) {
    case ReplayError::Kind::kUnknownConstant: return "unknown constant";
    case ReplayError::Kind::kUnbound: return "unbound hypothesis";
    case ReplayError::Kind::kNotImplication: return "not an implication";
    case ReplayError::Kind::kPremiseMismatch: return "premise mismatch";
    case ReplayError::Kind::kNotForall: return "not a universal";
    case ReplayError::Kind::kBadInstance: return "bad instance";
    case ReplayError::Kind::kConversion: return "conversion failed";
    case ReplayError::Kind::kNotFalse: return "not a refutation";
  }
  return "?";
}

namespace {

const VarId kX{kVarBinderBase};
const VarId kY{kVarBinderBase + 1};
const VarId kZ{kVarBinderBase + 2};
const VarId kC{kPropBinderBase};
const VarId kD{kPropBinderBase + 1};
const VarId kP{kPropBinderBase + 2};

GTrm v(VarId x) { return GTrm::var(x); }
GTrm atom_t(GTrm lit) { return app1("atom", std::move(lit)); }
GTrm pos(const char* k, VarId a, VarId b) { return atom_t(app2(k, v(a), v(b))); }
GTrm neg(const char* k, VarId a, VarId b) {
  return atom_t(app1("not", app2(k, v(a), v(b))));
}

MetaProp ob(GTrm t) { return MetaProp::obj(std::move(t)); }
MetaProp imp(MetaProp a, MetaProp b) {
  return MetaProp::implies(std::move(a), std::move(b));
}
MetaProp forall(std::initializer_list<VarId> xs, MetaProp body) {
  std::vector<VarId> bs(xs);
  for (auto it = bs.rbegin(); it != bs.rend(); ++it) {
    body = MetaProp::all(*it, std::move(body));
  }
  return body;
}

std::map<std::string, MetaProp> build_sigma(Theory theory) {
  const MetaProp fls = MetaProp::lit(kFls);
  std::map<std::string, MetaProp> s;
  s.emplace("refl", forall({kX}, ob(pos("le", kX, kX))));
  s.emplace("trans", forall({kX, kY, kZ},
                            imp(ob(pos("le", kX, kY)),
                                imp(ob(pos("le", kY, kZ)), ob(pos("le", kX, kZ))))));
  s.emplace("antisym", forall({kX, kY},
                              imp(ob(pos("le", kX, kY)),
                                  imp(ob(pos("le", kY, kX)), ob(pos("eq", kX, kY))))));
  s.emplace("eqe1", forall({kX, kY}, imp(ob(pos("eq", kX, kY)), ob(pos("le", kX, kY)))));
  s.emplace("eqe2", forall({kX, kY}, imp(ob(pos("eq", kX, kY)), ob(pos("le", kY, kX)))));
  s.emplace("contr_le", forall({kX, kY}, imp(ob(neg("le", kX, kY)),
                                             imp(ob(pos("le", kX, kY)), fls))));
  s.emplace("contr_eq", forall({kX, kY}, imp(ob(neg("eq", kX, kY)),
                                             imp(ob(pos("eq", kX, kY)), fls))));
  s.emplace("conje",
            forall({kC, kD, kP},
                   imp(ob(app2("and", v(kC), v(kD))),
                       imp(imp(ob(v(kC)), imp(ob(v(kD)), ob(v(kP)))), ob(v(kP))))));
  s.emplace("disje",
            forall({kC, kD, kP},
                   imp(ob(app2("or", v(kC), v(kD))),
                       imp(imp(ob(v(kC)), ob(v(kP))),
                           imp(imp(ob(v(kD)), ob(v(kP))), ob(v(kP)))))));
  s.emplace("lessle",
            forall({kX, kY}, MetaProp::equiv(pos("lt", kX, kY),
                                             app2("and", pos("le", kX, kY),
                                                  neg("eq", kX, kY)))));
  s.emplace("nlessle",
            forall({kX, kY}, MetaProp::equiv(neg("lt", kX, kY),
                                             app2("or", neg("le", kX, kY),
                                                  pos("eq", kX, kY)))));
  if (theory == Theory::kLinear) {
    s.emplace("nle",
              forall({kX, kY}, MetaProp::equiv(neg("le", kX, kY),
                                               app2("and", neg("eq", kX, kY),
                                                    pos("le", kY, kX)))));
    s.emplace("nless",
              forall({kX, kY}, MetaProp::equiv(neg("lt", kX, kY), pos("le", kY, kX))));
  }
  return s;
}

}  // namespace

const std::map<std::string, MetaProp>& sigma(Theory theory) {
  static const std::map<std::string, MetaProp> partial =
      build_sigma(Theory::kPartial);
  static const std::map<std::string, MetaProp> linear =
      build_sigma(Theory::kLinear);
  return theory == Theory::kPartial ? partial : linear;
}

// ---------------------------------------------------------------------------
// Conversions

namespace {

[[noreturn]] void no_match(std::string_view rule, const Formula& f) {
  throw ReplayError(ReplayError::Kind::kConversion,
                    std::string(rule) + " does not apply to " + to_string(f));
}

Formula at(bool positive, AtomKind k, VarId x, VarId y) {
  return Formula::atom(Literal{positive, OrderAtom{k, x, y}});
}

// Atom-level rewriters; nullptr if `name` is not one.
Rewriter atom_rewriter(const std::string& name, Theory theory) {
  if (name == "allconv") return [](const Formula& f) { return f; };
  const bool linear = theory == Theory::kLinear;
  struct Rule {
    const char* name;
    bool positive;
    AtomKind kind;
    bool linear_only;
  };
  static const Rule rules[] = {
      {"lessle", true, AtomKind::kLt, false},
      {"nlessle", false, AtomKind::kLt, false},
      {"nle", false, AtomKind::kLe, true},
      {"nless", false, AtomKind::kLt, true},
  };
  for (const Rule& r : rules) {
    if (name != r.name) continue;
    if (r.linear_only && !linear) {
      throw ReplayError(ReplayError::Kind::kUnknownConstant,
                        name + " is only available for linear orders");
    }
    return [r, name](const Formula& f) {
      if (!f.is_atom() || f.literal().positive != r.positive ||
          f.literal().atom.kind != r.kind) {
        no_match(name, f);
      }
      const VarId x = f.literal().atom.lhs;
      const VarId y = f.literal().atom.rhs;
      if (name == "lessle") {
        return Formula::conj(at(true, AtomKind::kLe, x, y),
                             at(false, AtomKind::kEq, x, y));
      }
      if (name == "nlessle") {
        return Formula::disj(at(false, AtomKind::kLe, x, y),
                             at(true, AtomKind::kEq, x, y));
      }
      if (name == "nle") {
        return Formula::conj(at(false, AtomKind::kEq, x, y),
                             at(true, AtomKind::kLe, y, x));
      }
      return at(true, AtomKind::kLe, y, x);
    };
  }
  return nullptr;
}

Rewriter structural_rewriter(const std::string& name) {
  if (name == "negatom") {
    return [](const Formula& f) {
      if (!f.is_neg() || !f.left().is_atom()) no_match("negatom", f);
      return Formula::atom(f.left().literal().negated());
    };
  }
  if (name == "negneg") {
    return [](const Formula& f) {
      if (!f.is_neg() || !f.left().is_neg()) no_match("negneg", f);
      return f.left().left();
    };
  }
  if (name == "negand" || name == "negor") {
    const bool is_and = name == "negand";
    return [is_and, name](const Formula& f) {
      if (!f.is_neg() || (is_and ? !f.left().is_and() : !f.left().is_or())) {
        no_match(name, f);
      }
      Formula a = Formula::neg(f.left().left());
      Formula b = Formula::neg(f.left().right());
      return is_and ? Formula::disj(a, b) : Formula::conj(a, b);
    };
  }
  if (name == "andorl") {
    return [](const Formula& f) {
      if (!f.is_and() || !f.left().is_or()) no_match("andorl", f);
      const Formula& o = f.left();
      return Formula::disj(Formula::conj(o.left(), f.right()),
                           Formula::conj(o.right(), f.right()));
    };
  }
  if (name == "andorr") {
    return [](const Formula& f) {
      if (!f.is_and() || !f.right().is_or()) no_match("andorr", f);
      const Formula& o = f.right();
      return Formula::disj(Formula::conj(f.left(), o.left()),
                           Formula::conj(f.left(), o.right()));
    };
  }
  return nullptr;
}

bool is_pthm(const GPrf& p, std::string_view name) {
  return p.kind() == GPrf::Kind::kPThm && p.name() == name;
}

[[noreturn]] void not_conversion(const GPrf& p) {
  throw ReplayError(ReplayError::Kind::kUnknownConstant,
                    "not a conversion: " + serialize_gprf(p));
}

}  // namespace

Rewriter rpc(const GPrf& cp, Theory theory) {
  if (cp.kind() == GPrf::Kind::kPThm) {
    if (Rewriter r = atom_rewriter(cp.name(), theory)) return r;
    if (Rewriter r = structural_rewriter(cp.name())) return r;
    not_conversion(cp);
  }
  if (cp.kind() != GPrf::Kind::kAppP) not_conversion(cp);

  const GPrf& f = cp.first();
  if (is_pthm(f, "atom")) {
    const GPrf& c = cp.second();
    Rewriter inner = c.kind() == GPrf::Kind::kPThm
                         ? atom_rewriter(c.name(), theory)
                         : nullptr;
    if (!inner) not_conversion(cp);
    return [inner](const Formula& phi) {
      if (!phi.is_atom()) no_match("atom", phi);
      return inner(phi);
    };
  }
  if (is_pthm(f, "arg")) {
    Rewriter inner = rpc(cp.second(), theory);
    return [inner](const Formula& phi) {
      if (!phi.is_neg()) no_match("arg", phi);
      return Formula::neg(inner(phi.left()));
    };
  }
  if (f.kind() == GPrf::Kind::kAppP && is_pthm(f.first(), "binop")) {
    Rewriter a = rpc(f.second(), theory);
    Rewriter b = rpc(cp.second(), theory);
    return [a, b](const Formula& phi) {
      if (phi.is_and()) return Formula::conj(a(phi.left()), b(phi.right()));
      if (phi.is_or()) return Formula::disj(a(phi.left()), b(phi.right()));
      no_match("binop", phi);
    };
  }
  if (f.kind() == GPrf::Kind::kAppP && is_pthm(f.first(), "then")) {
    Rewriter a = rpc(f.second(), theory);
    Rewriter b = rpc(cp.second(), theory);
    return [a, b](const Formula& phi) { return b(a(phi)); };
  }
  not_conversion(cp);
}

// ---------------------------------------------------------------------------
// Replay

namespace {

class Replayer {
 public:
  Replayer(const ReplayContext& gamma, Theory theory) : theory_(theory) {
    for (const auto& [t, p] : gamma) hyps_[t].push_back(p);
  }

  MetaProp run(const GPrf& p) {
    using K = ReplayError::Kind;
    switch (p.kind()) {
      case GPrf::Kind::kPThm: {
        const auto& s = sigma(theory_);
        auto it = s.find(p.name());
        if (it == s.end()) throw ReplayError(K::kUnknownConstant, p.name());
        return it->second;
      }
      case GPrf::Kind::kBound: {
        auto it = hyps_.find(p.term());
        if (it == hyps_.end() || it->second.empty()) {
          throw ReplayError(K::kUnbound, serialize_gtrm(p.term()));
        }
        return it->second.back();
      }
      case GPrf::Kind::kAbsP: {
        if (!decode_formula_term(p.term())) {
          throw ReplayError(K::kBadInstance,
                            "hypothesis is not a formula: " +
                                serialize_gtrm(p.term()));
        }
        MetaProp hyp = MetaProp::obj(p.term());
        push(p.term(), hyp);
        MetaProp body = run(p.first());
        pop(p.term());
        return MetaProp::implies(std::move(hyp), std::move(body));
      }
      case GPrf::Kind::kAppP: {
        MetaProp f = run(p.first());
        if (f.kind() != MetaProp::Kind::kImplies) {
          throw ReplayError(K::kNotImplication, to_string(f));
        }
        MetaProp a = run(p.second());
        if (!(a == f.left())) {
          throw ReplayError(K::kPremiseMismatch,
                            "expected " + to_string(f.left()) + ", got " +
                                to_string(a));
        }
        return f.right();
      }
      case GPrf::Kind::kAppt: {
        MetaProp f = run(p.first());
        if (f.kind() != MetaProp::Kind::kAll) {
          throw ReplayError(K::kNotForall, to_string(f));
        }
        const bool prop_sort = f.binder().value >= kPropBinderBase;
        const bool ok = prop_sort ? decode_formula_term(p.term()).has_value()
                                  : is_user_var(p.term());
        if (!ok) {
          throw ReplayError(K::kBadInstance,
                            std::string(prop_sort ? "formula" : "variable") +
                                " expected, got " + serialize_gtrm(p.term()));
        }
        return subst(f.left(), f.binder(), p.term());
      }
      case GPrf::Kind::kConvP: {
        auto it = hyps_.find(p.term());
        if (it == hyps_.end() || it->second.empty()) {
          throw ReplayError(K::kUnbound, serialize_gtrm(p.term()));
        }
        auto src = decode_formula_term(p.term());
        if (!src) {
          throw ReplayError(K::kConversion,
                            "not a formula: " + serialize_gtrm(p.term()));
        }
        const Formula out = rpc(p.first(), theory_)(*src);
        const GTrm t = encode_formula(out);
        push(t, MetaProp::obj(t));
        MetaProp r = run(p.second());
        pop(t);
        return r;
      }
    }
    throw ReplayError(K::kUnknownConstant, "unknown proof node");
  }

 private:
  void push(const GTrm& t, MetaProp p) { hyps_[t].push_back(std::move(p)); }
  void pop(const GTrm& t) { hyps_[t].pop_back(); }

  Theory theory_;
  std::unordered_map<GTrm, std::vector<MetaProp>, GTrmHash> hyps_;
};

}  // namespace

MetaProp replay(const ReplayContext& gamma, const GPrf& p, Theory theory) {
  return Replayer(gamma, theory).run(p);
}

void check_replay(const Formula& goal, const GPrf& p, Theory theory) {
  ReplayContext gamma;
  gamma.emplace(encode_formula(goal), MetaProp::fm(goal));
  const MetaProp r = replay(gamma, p, theory);
  if (!(r == MetaProp::lit(kFls))) {
    throw ReplayError(ReplayError::Kind::kNotFalse, "concludes " + to_string(r));
  }
}

// ---------------------------------------------------------------------------
// Export

namespace {

GPrf inst(const char* name, std::initializer_list<GTrm> ts) {
  GPrf p = GPrf::pthm(name);
  for (const GTrm& t : ts) p = GPrf::appt(std::move(p), t);
  return p;
}

GPrf hyp(const Literal& l) { return GPrf::bound(encode_formula(Formula::atom(l))); }

std::pair<GPrf, Literal> export_atom(const CertProof& p) {
  using R = CertProof::Rule;
  switch (p.rule()) {
    case R::kAssm: return {hyp(p.literal()), p.literal()};
    case R::kRefl:
      return {inst("refl", {v(p.var())}), Literal::pos(OrderAtom::le(p.var(), p.var()))};
    case R::kTrans:
    case R::kAntisym: {
      auto [g1, l1] = export_atom(p.first());
      auto [g2, l2] = export_atom(p.second());
      const VarId x = l1.atom.lhs;
      const VarId y = l1.atom.rhs;
      if (p.rule() == R::kTrans) {
        const VarId z = l2.atom.rhs;
        return {GPrf::appp(GPrf::appp(inst("trans", {v(x), v(y), v(z)}), g1), g2),
                Literal::pos(OrderAtom::le(x, z))};
      }
      return {GPrf::appp(GPrf::appp(inst("antisym", {v(x), v(y)}), g1), g2),
              Literal::pos(OrderAtom::eq(x, y))};
    }
    case R::kEqE1:
    case R::kEqE2: {
      const Literal& l = p.literal();
      const VarId x = l.atom.lhs;
      const VarId y = l.atom.rhs;
      const bool first = p.rule() == R::kEqE1;
      return {GPrf::appp(inst(first ? "eqe1" : "eqe2", {v(x), v(y)}), hyp(l)),
              Literal::pos(first ? OrderAtom::le(x, y) : OrderAtom::le(y, x))};
    }
    case R::kContr: {
      const Literal& l = p.literal();
      if (l.positive || l.atom.kind == AtomKind::kLt) {
        throw Error("cannot export a contradiction on " + to_string(l));
      }
      auto [g, concl] = export_atom(p.first());
      const char* name = l.atom.kind == AtomKind::kLe ? "contr_le" : "contr_eq";
      return {GPrf::appp(GPrf::appp(inst(name, {v(l.atom.lhs), v(l.atom.rhs)}),
                                    hyp(l)),
                         g),
              kFls};
    }
  }
  throw Error("unknown atom rule");
}

const char* conv_name(ConvProof::Rule r) {
  using R = ConvProof::Rule;
  switch (r) {
    case R::kLessLe: return "lessle";
    case R::kNlessLe: return "nlessle";
    case R::kNleConv: return "nle";
    case R::kNlessConv: return "nless";
    case R::kAllConv: return "allconv";
    case R::kAtomConv: return "atom";
    case R::kArgConv: return "arg";
    case R::kBinopConv: return "binop";
    case R::kThenConv: return "then";
    case R::kNegAtomConv: return "negatom";
    case R::kNegNegConv: return "negneg";
    case R::kNegAndConv: return "negand";
    case R::kNegOrConv: return "negor";
    case R::kAndOrLConv: return "andorl";
    case R::kAndOrRConv: return "andorr";
  }
  return "?";
}

}  // namespace

GPrf export_conv(const ConvProof& c) {
  using R = ConvProof::Rule;
  GPrf head = GPrf::pthm(conv_name(c.rule()));
  switch (c.rule()) {
    case R::kAtomConv:
    case R::kArgConv: return GPrf::appp(head, export_conv(c.first()));
    case R::kBinopConv:
    case R::kThenConv:
      return GPrf::appp(GPrf::appp(head, export_conv(c.first())),
                        export_conv(c.second()));
    default: return head;
  }
}

Exported export_proof(const PropProof& p) {
  using R = PropProof::Rule;
  switch (p.rule()) {
    case R::kLift: {
      auto [g, l] = export_atom(p.cert());
      return {g, Formula::atom(l)};
    }
    case R::kConjE:
    case R::kDisjE: {
      const Formula& c = p.lhs();
      const Formula& d = p.rhs();
      Exported e1 = export_proof(p.body());
      const GTrm tc = encode_formula(c);
      const GTrm td = encode_formula(d);
      const GTrm tp = encode_formula(e1.conclusion);
      if (p.rule() == R::kConjE) {
        GPrf g = GPrf::appp(
            GPrf::appp(inst("conje", {tc, td, tp}),
                       GPrf::bound(encode_formula(Formula::conj(c, d)))),
            GPrf::absp(tc, GPrf::absp(td, e1.proof)));
        return {g, e1.conclusion};
      }
      Exported e2 = export_proof(p.body2());
      GPrf g = GPrf::appp(
          GPrf::appp(GPrf::appp(inst("disje", {tc, td, tp}),
                                GPrf::bound(encode_formula(Formula::disj(c, d)))),
                     GPrf::absp(tc, e1.proof)),
          GPrf::absp(td, e2.proof));
      return {g, e1.conclusion};
    }
    case R::kConv: {
      Exported e = export_proof(p.body());
      return {GPrf::convp(encode_formula(p.lhs()), export_conv(p.conversion()),
                          e.proof),
              e.conclusion};
    }
  }
  throw Error("unknown propositional rule");
}

}  // namespace orderproof
