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

// Text format for structured certificates:
//
//   cert := (lift aprf) | (conje fm fm cert) | (disje fm fm cert cert)
//         | (conv fm cprf cert)
//   aprf := (assm lit) | (refl var) | (trans aprf aprf) | (antisym aprf aprf)
//         | (eqe1 lit) | (eqe2 lit) | (contr lit aprf)
//   cprf := lessle | nlessle | nle | nless | allconv | (atom cprf)
//         | (arg cprf) | (binop cprf cprf) | (then cprf cprf) | negatom
//         | negneg | negand | negor | andorl | andorr
//   fm   := (atom lit) | (and fm fm) | (or fm fm) | (neg fm)
//   lit  := (pol kind var var)   pol := + | -   kind := le | lt | eq
//   var  := v<digits>

#ifndef ORDERPROOF_CERT_IO_H_
#define ORDERPROOF_CERT_IO_H_

#include <string>
#include <string_view>

#include "orderproof/core.h"
#include "orderproof/proof_terms.h"
#include "orderproof/sexpr.h"

namespace orderproof {

std::string serialize_var(VarId v);
std::string serialize_literal(const Literal& l);
std::string serialize_formula(const Formula& f);
std::string serialize_atom_proof(const CertProof& p);
std::string serialize_conv(const ConvProof& c);
std::string serialize_cert(const PropProof& p);

// Decoders over an already-read S-expression; `text` is the source used for
// error locations.
VarId decode_var(std::string_view text, const SExpr& e);
Literal decode_literal(std::string_view text, const SExpr& e);
Formula decode_formula(std::string_view text, const SExpr& e);
CertProof decode_atom_proof(std::string_view text, const SExpr& e);
ConvProof decode_conv(std::string_view text, const SExpr& e);
PropProof decode_cert(std::string_view text, const SExpr& e);

PropProof parse_cert(std::string_view text);
Formula parse_formula_sexpr(std::string_view text);

}  // namespace orderproof

#endif  // ORDERPROOF_CERT_IO_H_
