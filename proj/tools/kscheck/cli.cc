// Copyright 2026 The kscheck Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kscheck/cli.h"

#include <chrono>
#include <fstream>
#include <iterator>
#include <random>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "kscheck/error.h"
#include "kscheck/inequality.h"
#include "kscheck/kssets.h"

namespace kscheck::cli {
namespace {

using kscheck::to_string;

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::string integer_form(const SubspaceBasisVector& v, int d) {
  std::string out;
  for (const auto& [idx, c] : v.coefficients()) {
    const std::int64_t mag = c < 0 ? -c : c;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag);
    out += render_ket(idx, d);
  }
  return out;
}

std::string slot_list(const std::vector<ContextSlot>& slots) {
  std::vector<std::string> parts;
  for (const auto& s : slots) {
    parts.push_back(std::to_string(s.context + 1) + "." +
                    std::to_string(s.position + 1));
  }
  return join(parts, " ");
}

std::string state_string(std::span<const std::int64_t> amps) {
  std::vector<std::string> parts;
  for (auto a : amps) parts.push_back(std::to_string(a));
  return "(" + join(parts, ",") + ")";
}

VectorSet load_set_file(const std::string& path, const std::string& name) {
  std::ifstream in(path);
  if (!in) throw Error("cannot read " + path);
  const std::string text{std::istreambuf_iterator<char>(in),
                         std::istreambuf_iterator<char>()};
  try {
    return parse_set(text, name).set;
  } catch (const ParseError& e) {
    throw Error(path + ": " + e.what());
  }
}

VectorSet resolve_set(const KssetRequest& r) {
  if (!r.file.empty()) return load_set_file(r.file, r.file);
  if (auto s = builtin_set(r.name)) return *s;
  throw Error("unknown set '" + r.name + "' (expected A3, S4 or S6)");
}

void require_triads(const VectorSet& s, const char* action) {
  if (s.dim() != 3) {
    throw Error(std::string(action) +
                " is defined only for three-dimensional sets (triads); " +
                s.name() + " has dimension " + std::to_string(s.dim()));
  }
}

void ksset_show(const VectorSet& s, RunReport& r) {
  r.add("dim", std::to_string(s.dim()));
  r.add("size", std::to_string(s.size()));
  std::istringstream text(serialize_set(s));
  for (std::string line; std::getline(text, line);) r.say(line);
  for (const auto& v : s.members()) r.add("vector", v.to_string());
}

void ksset_frames(const VectorSet& s, RunReport& r) {
  const auto frames = enumerate_frames(s);
  r.add("frames", std::to_string(frames.size()));
  r.say(s.name() + ": " + std::to_string(frames.size()) + " frames");

  SharedVectorIndex index;
  if (s == build_A3()) {
    // Published order and member order.
    const auto contexts = a3_reference_frames();
    for (std::size_t i = 0; i < contexts.size(); ++i) {
      std::vector<std::string> parts;
      for (const auto& v : contexts[i]) parts.push_back(v.to_string());
      const auto text = join(parts, " ");
      r.say("  " + std::to_string(i + 1) + ": " + text);
      r.add("frame." + std::to_string(i + 1), text);
    }
    index = shared_vector_index(contexts);
  } else {
    for (std::size_t i = 0; i < frames.size(); ++i) {
      r.say("  " + std::to_string(i + 1) + ": " + frames[i].to_string());
      r.add("frame." + std::to_string(i + 1), frames[i].to_string());
    }
    index = shared_vector_index(frames);
  }
  r.say("shared vectors (frame.position):");
  for (const auto& [v, slots] : index) {
    if (slots.size() < 2) continue;
    r.say("  " + v.to_string() + ": " + slot_list(slots));
    r.add("shared." + v.to_string(), slot_list(slots));
  }
}

void ksset_color(const VectorSet& s, ColoringRule rule, RunReport& r) {
  const auto frames = enumerate_frames(s);
  const auto result = ks_colorable(s, frames, rule);
  r.add("rule", rule == ColoringRule::kFramesOnly ? "frames-only" : "ks");
  r.add("frames", std::to_string(frames.size()));
  if (const auto* c = std::get_if<Colorable>(&result)) {
    std::vector<std::string> ones;
    for (const auto& [v, on] : c->assignment) {
      if (on) ones.push_back(v.to_string());
    }
    const bool valid = validate_coloring(s, frames, c->assignment, rule);
    r.add("result", "Colorable");
    r.add("vacuous", c->vacuous ? "true" : "false");
    r.add("ones", join(ones, " "));
    r.add("witness_valid", valid ? "true" : "false");
    r.add("nodes", std::to_string(c->nodes_explored));
    r.say(s.name() + ": Colorable" + (c->vacuous ? " (no frames)" : ""));
    r.say("  value 1 on: " + join(ones, " "));
    r.say(std::string("  witness ") + (valid ? "validates" : "INVALID"));
    if (!valid) r.outcome = Outcome::kFails;
  } else {
    const auto& n = std::get<NotColorable>(result);
    r.add("result", "NotColorable");
    r.add("nodes", std::to_string(n.nodes_explored));
    r.say(s.name() + ": NotColorable over " + std::to_string(frames.size()) +
          " frames");
  }
}

void ksset_bound(const VectorSet& s, RunReport& r) {
  require_triads(s, "bound");
  const auto ineq = build_inequality(s);
  const int witness_beta = classical_beta(ineq.witness, ineq.frames);
  std::vector<std::string> minus;
  for (const auto& [v, x] : ineq.witness.values()) {
    if (x < 0) minus.push_back(v.to_string());
  }
  r.add("frames", std::to_string(ineq.frames.size()));
  r.add("noncontextual_bound", std::to_string(ineq.noncontextual_bound));
  r.add("algebraic_bound", std::to_string(ineq.algebraic_bound));
  r.add("quantum_value", to_string(ineq.quantum_value));
  r.add("state_independent", ineq.state_independent ? "true" : "false");
  r.add("witness_minus", join(minus, " "));
  r.add("witness_beta", std::to_string(witness_beta));
  r.say(s.name() + ": " + std::to_string(ineq.frames.size()) + " triads");
  r.say("  noncontextual bound: " + std::to_string(ineq.noncontextual_bound));
  r.say("  algebraic bound:     " + std::to_string(ineq.algebraic_bound));
  r.say("  quantum value:       " + to_string(ineq.quantum_value) +
        (ineq.state_independent ? " (every state)" : ""));
  r.say("  witness -1 on: " + join(minus, " "));
  r.say("  witness beta: " + std::to_string(witness_beta));
  if (witness_beta != ineq.noncontextual_bound) r.outcome = Outcome::kFails;
}

void ksset_quantum(const VectorSet& s, const KssetRequest& req, RunReport& r) {
  require_triads(s, "quantum");
  std::vector<std::int64_t> amps;
  if (req.state) {
    amps = *req.state;
    r.add("state_source", "given");
  } else {
    std::mt19937_64 rng(req.seed);
    amps = random_amplitudes(rng, s.dim());
    r.add("state_source", "random");
  }
  const auto frames = enumerate_frames(s);
  const auto value = quantum_value(frames, QuantumState::from_integers(amps));
  r.add("state", state_string(amps));
  r.add("frames", std::to_string(frames.size()));
  r.add("beta_qm", to_string(value));
  r.say(s.name() + ": beta_QM = " + to_string(value) + " for state " +
        state_string(amps) + " over " + std::to_string(frames.size()) +
        " triads");
}

Statistics parse_statistics(const std::string& s) {
  return s == "fermion" ? Statistics::kFermionic : Statistics::kBosonic;
}

}  // namespace

RunReport cmd_classify(int n, int d, Statistics statistics) {
  const auto scenario = Scenario::make(n, d, statistics);
  const auto c = classify(scenario);
  RunReport r;
  r.command = "classify";
  r.add("n", std::to_string(n));
  r.add("d", std::to_string(d));
  r.add("statistics", to_string(statistics));
  r.add("dim", c.dim.get_str());
  r.add("class", to_string(c.kind));
  r.say(std::to_string(n) + " " + to_string(statistics) + "s, d=" +
        std::to_string(d) + ": dim " + c.dim.get_str() + ", " +
        to_string(c.kind));
  return r;
}

RunReport cmd_basis(int n, int d, Statistics statistics, bool paper) {
  const auto scenario = Scenario::make(n, d, statistics);
  RunReport r;
  r.command = "basis";
  r.add("n", std::to_string(n));
  r.add("d", std::to_string(d));
  r.add("statistics", to_string(statistics));
  r.add("source", paper ? "paper" : "generated");
  const auto dim = classify(scenario).dim;
  if (dim == 0) {
    r.outcome = Outcome::kFails;
    r.add("error", "empty subspace");
    r.say("empty subspace: no " + to_string(statistics) + " states for n=" +
          std::to_string(n) + ", d=" + std::to_string(d));
    return r;
  }
  SubspaceBasis basis;
  if (paper) {
    if (n != 2 || d != 3) {
      throw Error("no built-in basis for n=" + std::to_string(n) +
                  ", d=" + std::to_string(d) + " (only 2 3)");
    }
    basis = paper_basis(statistics == Statistics::kBosonic
                            ? PaperBasis::kBosonTwoQutrits
                            : PaperBasis::kFermionTwoQutrits);
  } else {
    basis = generate_basis(scenario);
  }
  r.add("vectors", std::to_string(basis.vectors.size()));
  r.say(std::to_string(basis.vectors.size()) + " vectors (dim " +
        dim.get_str() + ")");
  std::vector<std::string> norms;
  for (std::size_t i = 0; i < basis.vectors.size(); ++i) {
    const auto& v = basis.vectors[i];
    const auto label = std::to_string(i + 1);
    const auto text = integer_form(v, d);
    r.add("vector." + label, text);
    r.add("normsq." + label, std::to_string(v.normsq()));
    r.say("  " + label + ": " + text + "  normsq=" + std::to_string(v.normsq()));
    norms.push_back(std::to_string(v.normsq()));
  }
  const auto check = check_basis(basis);
  r.add("normsq", join(norms, ","));
  r.add("orthogonal", check.pairwise_orthogonal ? "true" : "false");
  r.add("symmetry", check.symmetry ? "true" : "false");
  r.add("count_matches_dimension",
        check.count_matches_dimension ? "true" : "false");
  r.say(std::string("  orthogonal: ") +
        (check.pairwise_orthogonal ? "yes" : "no"));
  r.say(std::string("  exchange ") +
        (statistics == Statistics::kBosonic ? "symmetric: " : "antisymmetric: ") +
        (check.symmetry ? "yes" : "no"));
  r.say(std::string("  count matches dimension: ") +
        (check.count_matches_dimension ? "yes" : "no"));
  if (!check.ok()) r.outcome = Outcome::kFails;
  return r;
}

RunReport cmd_ksset(const KssetRequest& request) {
  const auto s = resolve_set(request);
  RunReport r;
  r.command = "ksset";
  r.add("set", s.name());
  switch (request.action) {
    case KssetAction::kShow:
      ksset_show(s, r);
      break;
    case KssetAction::kFrames:
      ksset_frames(s, r);
      break;
    case KssetAction::kColor:
      ksset_color(s, request.rule, r);
      break;
    case KssetAction::kBound:
      ksset_bound(s, r);
      break;
    case KssetAction::kQuantum:
      ksset_quantum(s, request, r);
      break;
  }
  return r;
}

RunReport cmd_reproduce(const ReproduceOptions& options) {
  RunReport r;
  r.command = "reproduce";
  const auto checks = run_checks(options);
  int passed = 0;
  int failed = 0;
  for (const auto& c : checks) {
    const std::string verdict = c.skipped ? "SKIP" : c.passed ? "PASS" : "FAIL";
    passed += c.passed;
    failed += !c.passed && !c.skipped;
    const auto id = std::to_string(c.id);
    r.add("check." + id, verdict);
    r.add("check." + id + ".title", c.title);
    if (!c.skipped) r.add("check." + id + ".detail", c.detail);
    std::string line = (c.id < 10 ? " " : "") + id + "  " + verdict + "  " +
                       c.title;
    if (!c.skipped) line += ": " + c.detail;
    r.say(line);
  }
  r.add("passed", std::to_string(passed));
  r.add("failed", std::to_string(failed));
  r.say(std::to_string(passed) + "/" + std::to_string(checks.size()) +
        " checks passed");
  if (passed != static_cast<int>(checks.size())) r.outcome = Outcome::kFails;
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Exact verification of Kochen-Specker constructions for "
               "identical qudits",
               "kscheck"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  std::string format = "human";
  bool timing = false;
  app.add_option("--seed", seed, "Seed for random rational states")
      ->capture_default_str();
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "records"}))
      ->capture_default_str();
  app.add_flag("--timing", timing, "Report elapsed time");

  const std::vector<std::string> statistics_names{"boson", "fermion"};

  int n = 0;
  int d = 0;
  std::string statistics;
  auto* classify_cmd =
      app.add_subcommand("classify", "Subspace dimension and scenario class");
  classify_cmd->fallthrough();
  classify_cmd->add_option("n", n, "Number of particles")->required();
  classify_cmd->add_option("d", d, "Levels per particle")->required();
  classify_cmd->add_option("statistics", statistics, "boson or fermion")
      ->required()
      ->check(CLI::IsMember(statistics_names));

  bool paper = false;
  auto* basis_cmd =
      app.add_subcommand("basis", "Orthogonal (anti)symmetric subspace basis");
  basis_cmd->fallthrough();
  basis_cmd->add_option("n", n, "Number of particles")->required();
  basis_cmd->add_option("d", d, "Levels per particle")->required();
  basis_cmd->add_option("statistics", statistics, "boson or fermion")
      ->required()
      ->check(CLI::IsMember(statistics_names));
  basis_cmd->add_flag("--paper", paper, "Use the built-in two-qutrit basis");

  KssetRequest ks;
  std::vector<std::string> ksset_args;
  std::string rule = "ks";
  std::vector<std::int64_t> state;
  auto* ksset_cmd = app.add_subcommand("ksset", "Inspect a vector set");
  ksset_cmd->fallthrough();
  // [NAME] ACTION; CLI11 would otherwise give a lone positional to NAME.
  ksset_cmd
      ->add_option("args", ksset_args,
                   "Built-in set (A3, S4, S6) then show, frames, color, bound "
                   "or quantum")
      ->required()
      ->expected(1, 2);
  ksset_cmd->add_option("--file", ks.file, "Vector set file")
      ->check(CLI::ExistingFile);
  auto* state_opt =
      ksset_cmd->add_option("--state", state, "Integer amplitudes a,b,c")
          ->delimiter(',');
  ksset_cmd->add_option("--rule", rule, "Colouring rule")
      ->check(CLI::IsMember({"ks", "frames-only"}))
      ->capture_default_str();

  std::vector<std::string> set_overrides;
  bool stop_on_failure = false;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Run every verification check");
  reproduce_cmd->fallthrough();
  reproduce_cmd->add_option("--set", set_overrides,
                            "Replace a built-in set: NAME=path");
  reproduce_cmd->add_flag("--stop-on-failure", stop_on_failure,
                          "Skip the checks after the first failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const Format fmt = format == "records" ? Format::kRecords : Format::kHuman;
  const auto start = std::chrono::steady_clock::now();
  RunReport report;
  try {
    if (*classify_cmd) {
      report = cmd_classify(n, d, parse_statistics(statistics));
    } else if (*basis_cmd) {
      report = cmd_basis(n, d, parse_statistics(statistics), paper);
    } else if (*ksset_cmd) {
      const std::string action = ksset_args.back();
      if (ksset_args.size() == 2) ks.name = ksset_args.front();
      if (ks.name.empty() == ks.file.empty()) {
        throw Error("ksset needs exactly one of a set name or --file");
      }
      static const std::map<std::string, KssetAction> kActions{
          {"show", KssetAction::kShow},
          {"frames", KssetAction::kFrames},
          {"color", KssetAction::kColor},
          {"bound", KssetAction::kBound},
          {"quantum", KssetAction::kQuantum}};
      const auto it = kActions.find(action);
      if (it == kActions.end()) {
        throw Error("unknown action '" + action +
                    "' (expected show, frames, color, bound or quantum)");
      }
      ks.action = it->second;
      ks.rule = rule == "frames-only" ? ColoringRule::kFramesOnly
                                      : ColoringRule::kFramesAndOrthogonality;
      ks.seed = seed;
      if (*state_opt) ks.state = state;
      report = cmd_ksset(ks);
    } else {
      ReproduceOptions options;
      options.seed = seed;
      options.stop_on_failure = stop_on_failure;
      for (const auto& spec : set_overrides) {
        const auto eq = spec.find('=');
        if (eq == std::string::npos) {
          throw Error("--set expects NAME=path, got '" + spec + "'");
        }
        const auto name = spec.substr(0, eq);
        if (!builtin_set(name)) throw Error("unknown set '" + name + "'");
        options.overrides.insert_or_assign(
            name, load_set_file(spec.substr(eq + 1), name));
      }
      report = cmd_reproduce(options);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    if (fmt == Format::kRecords) {
      out << "outcome=Error\nerror=" << e.what() << "\n";
    }
    return exit_code(Outcome::kError);
  }
  report.details.insert(report.details.begin(), {"seed", std::to_string(seed)});
  report.lines.insert(report.lines.begin(), "seed: " + std::to_string(seed));
  report.elapsed = std::chrono::steady_clock::now() - start;
  out << format_report(report, fmt, timing);
  return exit_code(report.outcome);
}

}  // namespace kscheck::cli
