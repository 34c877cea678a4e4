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


// Surface syntax for formulas:
//
//   expr  := conj ("|" conj)*
//   conj  := unary ("&" unary)*
//   unary := "~" unary | "(" expr ")" | ident relop ident
//   relop := "<=" | "<" | "=" | "!=" | ">=" | ">"
//
// "a != b" reads as ~(a = b), "a > b" as b < a and "a >= b" as b <= a.
// Both binary connectives associate to the left. "#" comments run to the
// end of the line. Variables are numbered in order of first occurrence.

#ifndef ORDERPROOF_INPUT_H_
#define ORDERPROOF_INPUT_H_

#include <string>
#include <string_view>

#include "orderproof/core.h"

namespace orderproof {

struct ParsedInput {
  Formula formula;
  SymbolTable symbols;
};

// Throws ParseError whose message starts with "line:column:".
ParsedInput parse_input(std::string_view text);

// Prints `f` in the surface syntax, using `symbols` for variable names
// (falling back to v<id> for unnamed ids).
std::string format_formula(const Formula& f, const SymbolTable& symbols);
std::string var_name(VarId v, const SymbolTable& symbols);

}  // namespace orderproof

#endif  // ORDERPROOF_INPUT_H_
