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


#include "orderproof/cli.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>

#include "orderproof/cert_io.h"
#include "orderproof/closure.h"
#include "orderproof/harness.h"
#include "orderproof/kernel.h"
#include "orderproof/replay.h"

namespace orderproof {

namespace {

using nlohmann::json;

// Failure to read or write a file; reported like a usage error.
class IoError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream o(path, std::ios::binary);
  if (!o) throw IoError("cannot write " + path);
  o << text << '\n';
}

Theory theory_of(const std::string& s) {
  return s == "linear" ? Theory::kLinear : Theory::kPartial;
}

json model_json(const Model& m, const SymbolTable& symbols) {
  json carrier = json::array();
  for (Element e : m.relation.carrier()) carrier.push_back(e);
  json assignment = json::object();
  for (const auto& [x, e] : m.assignment.entries()) {
    assignment[var_name(x, symbols)] = e;
  }
  json pairs = json::array();
  for (const auto& [a, b] : m.relation.pairs()) pairs.push_back({a, b});
  return {{"carrier", carrier}, {"assignment", assignment}, {"relation", pairs}};
}

struct SolveOptions {
  std::vector<std::string> files;
  std::string theory = "partial";
  std::string cert;
  std::string gprf;
  std::string model;
  std::string algorithm = "naive";
  std::string format = "text";
};

int solve(const SolveOptions& o, std::ostream& out, std::ostream& err) {
  if (o.files.size() > 1 &&
      (!o.cert.empty() || !o.gprf.empty() || !o.model.empty())) {
    err << "error: --cert, --gprf and --model need exactly one input file\n";
    return kExitUsage;
  }
  const Theory theory = theory_of(o.theory);
  const DecideOptions opts{o.algorithm == "fw" ? ClosureAlgorithm::kFloydWarshall
                                               : ClosureAlgorithm::kNaive};
  const bool prefix = o.files.size() > 1;
  for (const std::string& file : o.files) {
    std::optional<ParsedInput> parsed;
    try {
      parsed = parse_input(read_file(file));
    } catch (const ParseError& e) {
      err << file << ":" << e.what() << "\n";
      return kExitUsage;
    }
    const ParsedInput& in = *parsed;

    const auto t0 = std::chrono::steady_clock::now();
    Verdict v = decide(in.formula, theory, opts);
    const double ms = std::chrono::duration<double, std::milli>(
                          std::chrono::steady_clock::now() - t0)
                          .count();

    const auto* unsat = std::get_if<Unsat>(&v);
    const auto* sat = std::get_if<Sat>(&v);
    if (unsat) {
      if (!o.cert.empty()) write_file(o.cert, serialize_cert(unsat->certificate));
      if (!o.gprf.empty()) {
        write_file(o.gprf, serialize_gprf(export_proof(unsat->certificate).proof));
      }
    } else if (!o.model.empty()) {
      write_file(o.model, format_model(sat->model, in.symbols));
    }

    const char* verdict = unsat ? "unsat" : "sat";
    if (o.format == "json") {
      json j = {
          {"file", file},
          {"verdict", verdict},
          {"theory", o.theory},
          {"literals", atom_count(in.formula)},
          {"variables", vars_of(in.formula).size()},
          {"certificate_size", unsat ? unsat->certificate.size() : 0},
          {"wall_time_ms", ms},
      };
      if (sat) {
        j["clause_index"] = sat->clause_index;
        j["model"] = model_json(sat->model, in.symbols);
      }
      out << j.dump() << "\n";
    } else {
      if (prefix) out << file << ": ";
      out << verdict << "\n";
    }
  }
  return kExitOk;
}

struct CheckOptions {
  std::string cert;
  std::string goal;
  std::string kernel = "structured";
  std::string theory = "partial";
};

// True if the text's outermost form is a structured certificate rather than
// a generic proof term.
bool is_structured(const SExpr& e) {
  return e.is_form("lift") || e.is_form("conje") || e.is_form("disje") ||
         e.is_form("conv");
}

int check(const CheckOptions& o, std::ostream& out, std::ostream& err) {
  const Theory theory = theory_of(o.theory);
  Formula goal = Formula::atom(kFls);
  std::string text;
  SExpr root;
  try {
    goal = parse_input(read_file(o.goal)).formula;
  } catch (const ParseError& e) {
    err << o.goal << ":" << e.what() << "\n";
    return kExitUsage;
  }
  try {
    text = read_file(o.cert);
    root = parse_sexpr(text);
  } catch (const ParseError& e) {
    err << o.cert << ": " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (is_structured(root)) {
      const PropProof p = decode_cert(text, root);
      if (o.kernel == "structured") {
        check_refutation(goal, p, theory);
      } else {
        check_replay(goal, export_proof(p).proof, theory);
      }
    } else {
      if (o.kernel == "structured") {
        err << "error: a generic proof term needs --kernel replay\n";
        return kExitUsage;
      }
      check_replay(goal, parse_gprf(text), theory);
    }
  } catch (const ParseError& e) {
    err << o.cert << ": " << e.line() << ":" << e.column() << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const CheckError& e) {
    out << "rejected at " << (e.where().empty() ? "<root>" : e.where()) << ": "
        << e.what() << "\n";
    return kExitRejected;
  } catch (const InvariantError&) {
    throw;
  } catch (const Error& e) {
    out << "rejected: " << e.what() << "\n";
    return kExitRejected;
  }
  out << "ok\n";
  return kExitOk;
}

struct SelftestOptions {
  int max_len = 4;
  int random = 0;
  std::uint64_t seed = 1;
};

int selftest(const SelftestOptions& o, std::ostream& out) {
  std::uint64_t failures = 0;
  auto report = [&](const std::string& name, const SuiteStats& s) {
    out << name << ": " << s.cases << " cases, " << s.unsat << " unsat, " << s.sat
        << " sat, " << s.failures << " failures\n";
    for (const std::string& e : s.examples) out << "  " << e << "\n";
    failures += s.failures;
  };
  for (Theory t : {Theory::kPartial, Theory::kLinear}) {
    report("exhaustive " + to_string(t), run_exhaustive_suite(3, o.max_len, t));
    if (o.random > 0) {
      report("random " + to_string(t), run_random_suite(o.seed, o.random, 4, 4, t));
    }
  }
  out << (failures == 0 ? "selftest passed" : "selftest FAILED") << "\n";
  return failures == 0 ? kExitOk : kExitInvariant;
}

}  // namespace

std::string format_model(const Model& m, const SymbolTable& symbols) {
  std::ostringstream s;
  s << "carrier:";
  for (Element e : m.relation.carrier()) s << ' ' << e;
  s << "\nassignment:";
  for (const auto& [x, e] : m.assignment.entries()) {
    s << ' ' << var_name(x, symbols) << '=' << e;
  }
  s << "\nrelation:";
  for (const auto& [a, b] : m.relation.pairs()) s << " (" << a << ',' << b << ')';
  return s.str();
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Certificate-producing decision procedure for partial and linear orders"};
  app.name(args.empty() ? "orderproof" : args[0]);
  app.require_subcommand(1);

  SolveOptions so;
  CLI::App* solve_cmd = app.add_subcommand("solve", "Decide formula files");
  solve_cmd->add_option("FILE", so.files, "Input formula files")->required();
  solve_cmd->add_option("--theory", so.theory, "Order theory")
      ->check(CLI::IsMember({"partial", "linear"}));
  solve_cmd->add_option("--cert", so.cert, "Write the certificate here on unsat");
  solve_cmd->add_option("--gprf", so.gprf,
                        "Write the exported generic proof term here on unsat");
  solve_cmd->add_option("--model", so.model, "Write the model here on sat");
  solve_cmd->add_option("--algorithm", so.algorithm, "Transitive closure algorithm")
      ->check(CLI::IsMember({"naive", "fw"}));
  solve_cmd->add_option("--format", so.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  CheckOptions co;
  CLI::App* check_cmd = app.add_subcommand("check", "Check a certificate");
  check_cmd->add_option("CERT", co.cert, "Certificate or proof term file")->required();
  check_cmd->add_option("--goal", co.goal, "Formula file the certificate refutes")
      ->required();
  check_cmd->add_option("--kernel", co.kernel, "Checker to use")
      ->check(CLI::IsMember({"structured", "replay"}));
  check_cmd->add_option("--theory", co.theory, "Order theory")
      ->check(CLI::IsMember({"partial", "linear"}));

  SelftestOptions to;
  CLI::App* self_cmd = app.add_subcommand("selftest", "Run the oracle agreement suite");
  self_cmd->add_option("--max-len", to.max_len, "Longest literal sequence")
      ->check(CLI::Range(1, 4));
  self_cmd->add_option("--random", to.random, "Random formulas per theory")
      ->check(CLI::NonNegativeNumber);
  self_cmd->add_option("--seed", to.seed, "Seed for random formulas");

  std::vector<std::string> rest(args.rbegin(), args.rend());
  if (!rest.empty()) rest.pop_back();
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*solve_cmd) return solve(so, out, err);
    if (*check_cmd) return check(co, out, err);
    return selftest(to, out);
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvariantError& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}

}  // namespace orderproof
