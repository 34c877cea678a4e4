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

// Minimal S-expression reader shared by the certificate and proof-term
// formats. Symbols are maximal runs of non-space, non-paren characters.

#ifndef ORDERPROOF_SEXPR_H_
#define ORDERPROOF_SEXPR_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orderproof/core.h"

namespace orderproof {

struct SExpr {
  bool is_list = false;
  std::string symbol;          // when !is_list
  std::vector<SExpr> items;    // when is_list
  std::size_t offset = 0;      // byte offset of the first character

  // True for a list whose first item is the symbol `head`.
  bool is_form(std::string_view head) const {
    return is_list && !items.empty() && !items[0].is_list &&
           items[0].symbol == head;
  }
};

// Parses exactly one S-expression (surrounding whitespace allowed).
// Throws ParseError with the offending offset.
SExpr parse_sexpr(std::string_view text);

// 1-based line and column of byte offset `at` in `text`.
std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t at);

// Throws a ParseError located at `at` within `text`.
[[noreturn]] void fail_at(std::string_view text, std::size_t at,
                          const std::string& what);

}  // namespace orderproof

#endif  // ORDERPROOF_SEXPR_H_
