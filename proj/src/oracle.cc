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


#include "orderproof/oracle.h"

#include <algorithm>
#include <array>
#include <string>

namespace orderproof {

namespace {

constexpr int kMaxCarrier = 4;

std::vector<Relation> build_posets(int k) {
  std::vector<ElementPair> off;
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) {
      if (i != j) off.emplace_back(i, j);
    }
  }
  std::set<Element> carrier;
  for (int i = 0; i < k; ++i) carrier.insert(i);

  std::vector<Relation> out;
  for (std::uint32_t mask = 0; mask < (1u << off.size()); ++mask) {
    bool m[kMaxCarrier][kMaxCarrier] = {};
    for (int i = 0; i < k; ++i) m[i][i] = true;
    for (std::size_t b = 0; b < off.size(); ++b) {
      if (mask & (1u << b)) m[off[b].first][off[b].second] = true;
    }
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      for (int j = 0; j < k && ok; ++j) {
        if (i != j && m[i][j] && m[j][i]) ok = false;
        for (int l = 0; l < k && ok; ++l) {
          if (m[i][j] && m[j][l] && !m[i][l]) ok = false;
        }
      }
    }
    if (!ok) continue;
    std::set<ElementPair> pairs;
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) {
        if (m[i][j]) pairs.insert({static_cast<Element>(i), static_cast<Element>(j)});
      }
    }
    out.emplace_back(carrier, std::move(pairs));
  }
  return out;
}

Relation chain(int k) {
  std::set<Element> carrier;
  std::set<ElementPair> pairs;
  for (int i = 0; i < k; ++i) {
    carrier.insert(i);
    for (int j = i; j < k; ++j) pairs.insert({static_cast<Element>(i), static_cast<Element>(j)});
  }
  return Relation(std::move(carrier), std::move(pairs));
}

// Tries every map vars -> {0..k-1} against `r`.
bool any_valuation(const Formula& phi, const Relation& r,
                   const std::vector<VarId>& vars, int k) {
  std::array<int, kMaxCarrier> digits{};
  Valuation v;
  for (VarId x : vars) v.set(x, 0);
  while (true) {
    if (eval_formula(r, v, phi)) return true;
    std::size_t i = 0;
    for (; i < vars.size(); ++i) {
      if (++digits[i] < k) {
        v.set(vars[i], digits[i]);
        break;
      }
      digits[i] = 0;
      v.set(vars[i], 0);
    }
    if (i == vars.size()) return false;
  }
}

}  // namespace

const std::vector<Relation>& enumerate_posets(int k) {
  if (k < 1 || k > kMaxCarrier) {
    throw Error("enumerate_posets: carrier size " + std::to_string(k) +
                " outside 1..4");
  }
  static const std::array<std::vector<Relation>, kMaxCarrier> cache = {
      build_posets(1), build_posets(2), build_posets(3), build_posets(4)};
  return cache[k - 1];
}

bool brute_sat(const Formula& phi, Theory theory,
               const std::vector<VarId>& vars) {
  if (vars.size() > kMaxCarrier) {
    throw Error("brute_sat: more than 4 variables");
  }
  for (VarId x : vars_of(phi)) {
    if (std::find(vars.begin(), vars.end(), x) == vars.end()) {
      throw Error("brute_sat: variable " + to_string(x) + " not in vars");
    }
  }
  const int k = std::max<int>(1, static_cast<int>(vars.size()));
  if (theory == Theory::kLinear) return any_valuation(phi, chain(k), vars, k);
  for (const Relation& r : enumerate_posets(k)) {
    if (any_valuation(phi, r, vars, k)) return true;
  }
  return false;
}

bool brute_sat(const Formula& phi, Theory theory) {
  return brute_sat(phi, theory, vars_of(phi));
}

}  // namespace orderproof
