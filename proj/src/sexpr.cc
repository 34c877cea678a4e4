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

#include "orderproof/sexpr.h"

#include <cctype>

namespace orderproof {

std::pair<std::size_t, std::size_t> line_column(std::string_view text,
                                                std::size_t at) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < at && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

void fail_at(std::string_view text, std::size_t at, const std::string& what) {
  const auto [line, col] = line_column(text, at);
  throw ParseError(what + " at offset " + std::to_string(at), at, line, col);
}

namespace {

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  SExpr read_top() {
    skip_space();
    SExpr e = read();
    skip_space();
    if (pos_ != text_.size()) fail_at(text_, pos_, "trailing input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  SExpr read() {
    skip_space();
    if (pos_ >= text_.size()) fail_at(text_, pos_, "unexpected end of input");
    SExpr e;
    e.offset = pos_;
    const char c = text_[pos_];
    if (c == ')') fail_at(text_, pos_, "unexpected ')'");
    if (c == '(') {
      e.is_list = true;
      ++pos_;
      for (;;) {
        skip_space();
        if (pos_ >= text_.size()) {
          fail_at(text_, pos_, "unterminated list opened at offset " +
                                   std::to_string(e.offset));
        }
        if (text_[pos_] == ')') {
          ++pos_;
          return e;
        }
        e.items.push_back(read());
      }
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] != '(' && text_[pos_] != ')' &&
           !std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    e.symbol = std::string(text_.substr(start, pos_ - start));
    return e;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

SExpr parse_sexpr(std::string_view text) { return Reader(text).read_top(); }

}  // namespace orderproof
