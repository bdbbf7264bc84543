// Copyright 2026 The pencil Authors.
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

#include "cli.hpp"

#include <CLI11.hpp>

#include <ostream>
#include <string>

#include "pencil/certifier.hpp"
#include "pencil/derive.hpp"
#include "pencil/error.hpp"
#include "pencil/input_formats.hpp"
#include "pencil/invariant.hpp"
#include "pencil/pipeline.hpp"
#include "pencil/poly_io.hpp"

namespace pencil::cli {

namespace {

bool is_input_error(ErrorCode code) { return code != ErrorCode::PreconditionFailed; }

// Reads and parses a file, prefixing parse diagnostics with its path.
template <class F>
auto load(const std::string& path, F parse) {
  std::string text = read_file(path);
  try {
    return parse(text);
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail(), e.position());
  }
}

int run_derive(const std::string& triple_path, bool json, std::ostream& out) {
  Triple t = load(triple_path, [](const std::string& s) { return parse_triple_text(s); });
  DerivedSet d = derive_all(t);
  if (json) {
    out << to_json(d);
  } else {
    for (const auto& [name, p] : d.named()) out << name << " = " << format_poly(*p) << "\n";
  }
  return kPass;
}

int run_genericity(const std::string& triple_path, bool json, std::ostream& out) {
  Triple t = load(triple_path, [](const std::string& s) { return parse_triple_text(s); });
  GenericityReport r = genericity_check(t);
  if (json) {
    out << to_json(r);
  } else {
    for (const auto& [name, check] : r.named()) {
      out << name << ": " << (check->pass ? "pass" : "FAIL");
      if (!check->reason.empty()) out << " (" << check->reason << ")";
      out << "\n";
    }
    if (!r.exact_degrees) out << "note: triple has a degree drop\n";
    out << "all_pass: " << (r.all_pass() ? "true" : "false") << "\n";
  }
  return r.all_pass() ? kPass : kRefuted;
}

int run_invariant(const std::string& f_path, const std::string& g_path,
                  const std::string& h_path, std::size_t m, std::size_t n, unsigned threads,
                  bool json, std::ostream& out) {
  auto poly = [](const std::string& s) { return parse_poly_text(s); };
  Polynomial f = load(f_path, poly);
  Polynomial g = load(g_path, poly);
  Polynomial h = load(h_path, poly);
  InvariantOptions options;
  options.threads = threads;
  InvariantResult r = phi(f, g, h, m, n, options);
  if (json) {
    out << to_json(r);
  } else {
    out << "phi_" << m << "," << n << " = " << r.value.get_str() << "\n";
    out << "nonzero: " << (r.nonzero ? "true" : "false") << "\n";
    out << "digits: " << r.digit_count << "\n";
  }
  return r.nonzero ? kPass : kRefuted;
}

int run_certify(const std::string& p_path, const std::string& a_path, const std::string& b_path,
                const std::string& factors_path, bool json, std::ostream& out) {
  auto poly = [](const std::string& s) { return parse_poly_text(s); };
  Polynomial p = load(p_path, poly);
  Polynomial a = load(a_path, poly);
  Polynomial b = load(b_path, poly);
  FactorList fl = load(factors_path, [](const std::string& s) { return parse_factor_text(s); });
  Certificate cert = certify(p, a, b, fl);
  out << (json ? to_json(cert) : to_text(cert));
  switch (cert.verdict) {
    case Verdict::Certified: return kPass;
    case Verdict::Refuted: return kRefuted;
    case Verdict::Inconclusive: return kInconclusive;
  }
  return kInconclusive;
}

int run_verify_paper_command(bool json, bool timing, unsigned threads, std::ostream& out) {
  VerifyOptions options;
  options.invariant.threads = threads;
  Report report = run_verify_paper(paper_constants(), options);
  out << (json ? to_json(report, timing) : to_text(report));
  return report.pass() ? kPass : kRefuted;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact pencil-invariant toolkit"};
  app.name("pencil");
  app.require_subcommand(1);

  bool json = false;
  unsigned threads = 1;

  std::string triple_path;
  auto* derive = app.add_subcommand("derive", "Print g_ij, f6, P, Q, R, A, B for a triple");
  derive->add_option("--triple", triple_path, "Triple file (f2 = ..., f3 = ..., f4 = ...)")
      ->required();
  derive->add_flag("--json", json, "Emit JSON");

  auto* genericity = app.add_subcommand("genericity", "Check the genericity conditions");
  genericity->add_option("--triple", triple_path, "Triple file")->required();
  genericity->add_flag("--json", json, "Emit JSON");

  std::string f_path, g_path, h_path;
  std::size_t m = 0, n = 0;
  auto* invariant = app.add_subcommand("invariant", "Compute the pencil invariant phi_{m,n}");
  // --h names a polynomial file here, so help is long-form only.
  invariant->set_help_flag("--help", "Print this help message and exit");
  invariant->add_option("--f", f_path, "Polynomial file for f")->required();
  invariant->add_option("--g", g_path, "Polynomial file for g")->required();
  invariant->add_option("--h", h_path, "Polynomial file for h")->required();
  invariant->add_option("--m", m, "Degree of f")->required();
  invariant->add_option("--n", n, "Degree bound of g, h")->required();
  invariant->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));
  invariant->add_flag("--json", json, "Emit JSON");

  std::string p_path, a_path, b_path, factors_path;
  auto* certify_cmd = app.add_subcommand("certify", "Certify non-vanishing by case analysis");
  certify_cmd->add_option("--p", p_path, "Polynomial file for P")->required();
  certify_cmd->add_option("--a", a_path, "Polynomial file for A")->required();
  certify_cmd->add_option("--b", b_path, "Polynomial file for B")->required();
  certify_cmd->add_option("--factors", factors_path, "Factor file for P")->required();
  certify_cmd->add_flag("--json", json, "Emit JSON");

  auto* verify = app.add_subcommand("verify-paper", "Reproduce every claim about the example");
  verify->add_flag("--json", json, "Emit JSON report");
  bool no_timing = false;
  verify->add_flag("--no-timing", no_timing, "Write 0 for every ms field in the JSON report");
  verify->add_option("--threads", threads, "Worker threads")->check(CLI::Range(1u, 256u));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (derive->parsed()) return run_derive(triple_path, json, out);
    if (genericity->parsed()) return run_genericity(triple_path, json, out);
    if (invariant->parsed()) {
      return run_invariant(f_path, g_path, h_path, m, n, threads, json, out);
    }
    if (certify_cmd->parsed()) {
      return run_certify(p_path, a_path, b_path, factors_path, json, out);
    }
    if (verify->parsed()) return run_verify_paper_command(json, !no_timing, threads, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_input_error(e.code()) ? kUsageError : kRefuted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no subcommand\n";
  return kUsageError;
}

}  // namespace pencil::cli
