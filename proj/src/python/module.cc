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


#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "orderproof/cert_io.h"
#include "orderproof/cli.h"
#include "orderproof/closure.h"
#include "orderproof/input.h"
#include "orderproof/kernel.h"
#include "orderproof/oracle.h"
#include "orderproof/replay.h"

namespace py = pybind11;
using namespace orderproof;

namespace {

Theory theory_arg(const std::string& s) {
  if (s == "partial") return Theory::kPartial;
  if (s == "linear") return Theory::kLinear;
  throw py::value_error("theory must be 'partial' or 'linear', got '" + s + "'");
}

ClosureAlgorithm algorithm_arg(const std::string& s) {
  if (s == "naive") return ClosureAlgorithm::kNaive;
  if (s == "fw") return ClosureAlgorithm::kFloydWarshall;
  throw py::value_error("algorithm must be 'naive' or 'fw', got '" + s + "'");
}

py::dict model_dict(const Model& m, const SymbolTable& symbols) {
  py::list carrier;
  for (Element e : m.relation.carrier()) carrier.append(e);
  py::dict assignment;
  for (const auto& [x, e] : m.assignment.entries()) {
    assignment[py::str(var_name(x, symbols))] = e;
  }
  py::list pairs;
  for (const auto& [a, b] : m.relation.pairs()) pairs.append(py::make_tuple(a, b));
  py::dict d;
  d["carrier"] = carrier;
  d["assignment"] = assignment;
  d["relation"] = pairs;
  return d;
}

py::dict solve(const std::string& text, const std::string& theory,
               const std::string& algorithm) {
  const ParsedInput in = parse_input(text);
  const Verdict v = decide(in.formula, theory_arg(theory), {algorithm_arg(algorithm)});
  py::dict d;
  d["literals"] = atom_count(in.formula);
  d["variables"] = vars_of(in.formula).size();
  if (const auto* u = std::get_if<Unsat>(&v)) {
    d["verdict"] = "unsat";
    d["certificate"] = serialize_cert(u->certificate);
    d["certificate_size"] = u->certificate.size();
  } else {
    const Sat& s = std::get<Sat>(v);
    d["verdict"] = "sat";
    d["clause_index"] = s.clause_index;
    d["model"] = model_dict(s.model, in.symbols);
  }
  return d;
}

bool check(const std::string& goal, const std::string& cert,
           const std::string& theory, const std::string& kernel) {
  const Formula phi = parse_input(goal).formula;
  const PropProof p = parse_cert(cert);
  const Theory th = theory_arg(theory);
  try {
    if (kernel == "structured") {
      check_refutation(phi, p, th);
    } else if (kernel == "replay") {
      check_replay(phi, export_proof(p).proof, th);
    } else {
      throw py::value_error("kernel must be 'structured' or 'replay'");
    }
  } catch (const InvariantError&) {
    throw;
  } catch (const ParseError&) {
    throw;
  } catch (const Error&) {
    return false;
  }
  return true;
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  std::vector<std::string> argv{"orderproof"};
  argv.insert(argv.end(), args.begin(), args.end());
  const int code = run(argv, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Certificate-producing decision procedure for partial and linear orders";

  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  static py::exception<InvariantError> invariant_error(m, "InvariantError",
                                                       PyExc_RuntimeError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      py::set_error(parse_error, e.what());
    } catch (const InvariantError& e) {
      py::set_error(invariant_error, e.what());
    }
  });

  m.def("solve", &solve, py::arg("text"), py::arg("theory") = "partial",
        py::arg("algorithm") = "naive",
        "Decide a formula in the surface syntax. Returns a dict with the "
        "verdict and either a certificate or a model.");
  m.def("check", &check, py::arg("goal"), py::arg("certificate"),
        py::arg("theory") = "partial", py::arg("kernel") = "structured",
        "True if the certificate refutes the goal formula.");
  m.def(
      "export_proof",
      [](const std::string& cert) {
        return serialize_gprf(export_proof(parse_cert(cert)).proof);
      },
      py::arg("certificate"), "Generic proof term for a certificate.");
  m.def(
      "normalize",
      [](const std::string& text) {
        const ParsedInput in = parse_input(text);
        return format_formula(in.formula, in.symbols);
      },
      py::arg("text"), "Parse and re-print a formula.");
  m.def(
      "brute_sat",
      [](const std::string& text, const std::string& theory) {
        return brute_sat(parse_input(text).formula, theory_arg(theory));
      },
      py::arg("text"), py::arg("theory") = "partial",
      "Exhaustive satisfiability check (at most 4 variables).");
  m.def(
      "enumerate_posets",
      [](int k) {
        py::list out;
        for (const Relation& r : enumerate_posets(k)) {
          py::list pairs;
          for (const auto& [a, b] : r.pairs()) pairs.append(py::make_tuple(a, b));
          out.append(pairs);
        }
        return out;
      },
      py::arg("k"), "All partial orders on {0..k-1} as pair lists.");
  m.def("run_cli", &run_cli, py::arg("args"),
        "Run the command line in-process; returns (exit_code, stdout, stderr).");
}
