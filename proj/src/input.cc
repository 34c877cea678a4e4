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


#include "orderproof/input.h"

#include <cctype>
#include <optional>

#include "orderproof/sexpr.h"

namespace orderproof {

namespace {

enum class Tok { kIdent, kRelop, kNot, kAnd, kOr, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) { advance(); }

  ParsedInput parse() {
    Formula f = expr();
    if (tok_.kind != Tok::kEnd) fail(tok_.offset, "unexpected '" + tok_.text + "'");
    return {std::move(f), std::move(symbols_)};
  }

 private:
  [[noreturn]] void fail(std::size_t at, const std::string& what) const {
    const auto [line, col] = line_column(text_, at);
    throw ParseError(std::to_string(line) + ":" + std::to_string(col) + ": " + what,
                     at, line, col);
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  void advance() {
    skip_blank();
    const std::size_t start = pos_;
    if (pos_ >= text_.size()) {
      tok_ = {Tok::kEnd, "end of input", start};
      return;
    }
    const char c = text_[pos_];
    auto single = [&](Tok k) {
      ++pos_;
      tok_ = {k, std::string(1, c), start};
    };
    switch (c) {
      case '~': return single(Tok::kNot);
      case '&': return single(Tok::kAnd);
      case '|': return single(Tok::kOr);
      case '(': return single(Tok::kLParen);
      case ')': return single(Tok::kRParen);
      case '=': return single(Tok::kRelop);
      case '<':
      case '>':
      case '!': {
        const bool eq = pos_ + 1 < text_.size() && text_[pos_ + 1] == '=';
        if (c == '!' && !eq) fail(start, "expected '!='");
        pos_ += eq ? 2 : 1;
        tok_ = {Tok::kRelop, std::string(text_.substr(start, pos_ - start)), start};
        return;
      }
      default: break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        ++pos_;
      }
      tok_ = {Tok::kIdent, std::string(text_.substr(start, pos_ - start)), start};
      return;
    }
    fail(start, std::string("unexpected character '") + c + "'");
  }

  Formula expr() {
    Formula f = conj();
    while (tok_.kind == Tok::kOr) {
      advance();
      f = Formula::disj(std::move(f), conj());
    }
    return f;
  }

  Formula conj() {
    Formula f = unary();
    while (tok_.kind == Tok::kAnd) {
      advance();
      f = Formula::conj(std::move(f), unary());
    }
    return f;
  }

  Formula unary() {
    if (tok_.kind == Tok::kNot) {
      advance();
      return Formula::neg(unary());
    }
    if (tok_.kind == Tok::kLParen) {
      const std::size_t open = tok_.offset;
      advance();
      Formula f = expr();
      if (tok_.kind != Tok::kRParen) {
        fail(tok_.offset, "expected ')' to close '(' at offset " +
                              std::to_string(open));
      }
      advance();
      return f;
    }
    return atom();
  }

  VarId ident() {
    if (tok_.kind != Tok::kIdent) {
      fail(tok_.offset, "expected a variable, got '" + tok_.text + "'");
    }
    VarId v = symbols_.intern(tok_.text);
    advance();
    return v;
  }

  Formula atom() {
    const VarId a = ident();
    if (tok_.kind != Tok::kRelop) {
      fail(tok_.offset, "expected a relation, got '" + tok_.text + "'");
    }
    const std::string op = tok_.text;
    advance();
    const VarId b = ident();
    if (op == "<=") return Formula::atom(Literal::pos(OrderAtom::le(a, b)));
    if (op == "<") return Formula::atom(Literal::pos(OrderAtom::lt(a, b)));
    if (op == "=") return Formula::atom(Literal::pos(OrderAtom::eq(a, b)));
    if (op == "!=") return Formula::neg(Formula::atom(Literal::pos(OrderAtom::eq(a, b))));
    if (op == ">=") return Formula::atom(Literal::pos(OrderAtom::le(b, a)));
    return Formula::atom(Literal::pos(OrderAtom::lt(b, a)));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  Token tok_{Tok::kEnd, "", 0};
  SymbolTable symbols_;
};

const char* relop(AtomKind k) {
  switch (k) {
    case AtomKind::kLe: return " <= ";
    case AtomKind::kLt: return " < ";
    case AtomKind::kEq: return " = ";
  }
  return " ? ";
}

// Precedence levels: 0 = or, 1 = and, 2 = unary.
std::string format(const Formula& f, const SymbolTable& s, int context) {
  std::string out;
  int level = 2;
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      const Literal& l = f.literal();
      std::string a = var_name(l.atom.lhs, s) + relop(l.atom.kind) +
                      var_name(l.atom.rhs, s);
      if (l.positive) return a;
      if (l.atom.kind == AtomKind::kEq) {
        return var_name(l.atom.lhs, s) + " != " + var_name(l.atom.rhs, s);
      }
      return "~(" + a + ")";
    }
    case Formula::Kind::kNeg:
      return "~" + format(f.left(), s, 2);
    case Formula::Kind::kAnd:
      level = 1;
      out = format(f.left(), s, 1) + " & " + format(f.right(), s, 2);
      break;
    case Formula::Kind::kOr:
      level = 0;
      out = format(f.left(), s, 0) + " | " + format(f.right(), s, 1);
      break;
  }
  return level < context ? "(" + out + ")" : out;
}

}  // namespace

ParsedInput parse_input(std::string_view text) { return Parser(text).parse(); }

std::string var_name(VarId v, const SymbolTable& symbols) {
  if (v.value < symbols.size()) return symbols.name(v);
  return "v" + std::to_string(v.value);
}

std::string format_formula(const Formula& f, const SymbolTable& symbols) {
  return format(f, symbols, 0);
}

}  // namespace orderproof
