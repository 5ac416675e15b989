// tools/cfst.cc
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
//
// \file
// Command-line front end: compile contracts, validate and determinize
// machines, run cost analyses and draw the result.
//
// Exit codes: 0 success, 2 parse failure, 3 determinization budget
// exceeded, 4 input-epsilon precondition, 5 unknown symbol; 1 for usage
// and anything else.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cfst/contract.h"
#include "cfst/determinize.h"
#include "cfst/dot.h"
#include "cfst/fst.h"
#include "cfst/shortest-distance.h"
#include "cfst/text-io.h"

namespace {

using namespace cfst;

constexpr int kExitOk = 0;
constexpr int kExitOther = 1;
constexpr int kExitParse = 2;
constexpr int kExitBudget = 3;
constexpr int kExitInputEpsilon = 4;
constexpr int kExitUnknownSymbol = 5;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw ParseError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out.good()) throw Error("cannot write " + path);
  out << text;
}

struct MachineArgs {
  std::string fst_path;
  std::string isymbols_path;
  std::string osymbols_path;

  void attach(CLI::App* cmd) {
    cmd->add_option("fst", fst_path, "machine in AT&T text format")
        ->required();
    cmd->add_option("--isymbols", isymbols_path, "input symbol table file");
    cmd->add_option("--osymbols", osymbols_path, "output symbol table file");
  }

  Wfst load() const {
    std::optional<SymbolTable> isyms;
    std::optional<SymbolTable> osyms;
    if (!isymbols_path.empty()) isyms = parse_symbols(read_file(isymbols_path));
    if (!osymbols_path.empty()) osyms = parse_symbols(read_file(osymbols_path));
    try {
      return parse_att(read_file(fst_path), isyms ? &*isyms : nullptr,
                       osyms ? &*osyms : nullptr);
    } catch (const UnknownSymbolError& e) {
      // A token in the file that misses the table is a parse failure; the
      // evaluate command keeps the distinct unknown-symbol exit for its
      // own string arguments.
      throw ParseError(std::string(e.what()) + " in " + fst_path);
    }
  }
};

struct ContractArgs {
  std::string contract_path;
  std::string builtin;

  void attach(CLI::App* cmd) {
    cmd->add_option("contract", contract_path,
                    "contract description (.contract)");
    cmd->add_option("--builtin", builtin,
                    "use a built-in contract (available: manufacturing)")
        ->check(CLI::IsMember({"manufacturing"}));
  }

  ContractSpec load() const {
    if (!builtin.empty()) return builtin_manufacturing_contract();
    if (contract_path.empty()) {
      throw CLI::ValidationError(
          "contract", "give a contract file or --builtin manufacturing");
    }
    return parse_contract_spec(read_file(contract_path));
  }
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_info(const MachineArgs& args) {
  const Wfst m = args.load();
  std::cout << m.num_states() << " states, " << m.num_arcs() << " arcs\n";
  std::ostringstream initials;
  for (const auto& [q, w] : m.initial()) {
    if (initials.tellp() > 0) initials << ", ";
    initials << q;
    if (!w.is_one()) initials << "/" << w.to_string();
  }
  std::cout << "initial: " << initials.str() << "\n";
  std::ostringstream finals;
  for (const auto& [q, w] : m.finals()) {
    if (finals.tellp() > 0) finals << ", ";
    finals << q;
    if (!w.is_one()) finals << "/" << w.to_string();
  }
  std::cout << "finals: " << finals.str() << "\n";
  std::cout << "deterministic: " << yes_no(is_deterministic(m)) << "\n";
  std::cout << "input epsilons: " << yes_no(has_input_epsilon(m)) << "\n";
  std::cout << "output epsilons: " << yes_no(has_output_epsilon(m)) << "\n";
  return kExitOk;
}

int cmd_validate(const MachineArgs& args) {
  const Wfst m = args.load();
  const std::vector<Diagnostic> diags = m.validate();
  for (const Diagnostic& d : diags) std::cout << d.message << "\n";
  return diags.empty() ? kExitOk : kExitOther;
}

int cmd_determinize(const MachineArgs& args, const std::string& out_path,
                    int max_states, bool print_subsets) {
  const Wfst m = args.load();
  DeterminizeOptions opts;
  opts.max_states = max_states;
  const DeterminizeResult r = determinize(m, opts);
  write_file(out_path, write_att(r.fst));
  if (print_subsets) {
    for (StateId q = 0; q < r.fst.num_states(); ++q) {
      std::cerr << q << "\t" << r.subsets[q].to_string(m.output_symbols())
                << "\n";
    }
  }
  return kExitOk;
}

int cmd_shortestdistance(const MachineArgs& args, bool use_reverse) {
  const Wfst m = args.load();
  const DistanceVector d = shortest_distance(
      m, use_reverse ? Direction::kReverse : Direction::kForward);
  for (StateId q = 0; q < m.num_states(); ++q) {
    std::cout << q << "\t" << d[q].to_string() << "\n";
  }
  return kExitOk;
}

int cmd_draw(const MachineArgs& args, const std::string& state_names_path,
             bool suppress_unit_weights, const std::string& out_path) {
  const Wfst m = args.load();
  std::optional<SymbolTable> names;
  if (!state_names_path.empty()) {
    names = parse_symbols(read_file(state_names_path),
                          /*require_epsilon=*/false);
  }
  DotOptions opts;
  opts.suppress_unit_weights = suppress_unit_weights;
  opts.state_names = names ? &*names : nullptr;
  write_file(out_path, export_dot(m, opts));
  return kExitOk;
}

int cmd_evaluate(const MachineArgs& args, const std::string& input,
                 const std::string& output) {
  const Wfst m = args.load();
  std::cout << string_weight(m, input, output).to_string() << "\n";
  return kExitOk;
}

std::string dollars_or_infinity(TropicalWeight w) {
  if (w.is_zero()) return "Infinity";
  const std::string digits = w.to_string();
  std::string grouped = "$";
  const std::size_t n = digits.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0 && digits[k - 1] != '.' && (n - k) % 3 == 0 &&
        digits.find('.') == std::string::npos) {
      grouped.push_back(',');
    }
    grouped.push_back(digits[k]);
  }
  return grouped;
}

int cmd_report(const ContractArgs& args, bool pretty) {
  const CostReport report = cost_report(args.load());

  auto completion_text = [](const CostReportRow& row) {
    if (row.completion_events.empty()) return std::string("-");
    std::string joined;
    for (const std::string& e : row.completion_events) {
      if (!joined.empty()) joined += " ";
      joined += e;
    }
    return joined;
  };

  if (!pretty) {
    for (const CostReportRow& row : report.rows) {
      std::cout << row.state << "\t" << row.label << "\t"
                << row.cost_from_start.to_string() << "\t"
                << row.cost_to_final.to_string() << "\t"
                << completion_text(row);
      if (!row.annotation.empty()) std::cout << "\t" << row.annotation;
      std::cout << "\n";
    }
    return kExitOk;
  }

  std::size_t label_width = 5;
  for (const CostReportRow& row : report.rows) {
    label_width = std::max(label_width, row.label.size());
  }
  std::cout << std::left << std::setw(6) << "state" << std::setw(label_width + 2)
            << "label" << std::setw(12) << "from-start" << std::setw(10)
            << "to-final" << "completion\n";
  for (const CostReportRow& row : report.rows) {
    std::ostringstream tail;
    tail << completion_text(row);
    if (!row.annotation.empty()) tail << "  (" << row.annotation << ")";
    std::cout << std::left << std::setw(6) << row.state
              << std::setw(label_width + 2) << row.label << std::setw(12)
              << dollars_or_infinity(row.cost_from_start) << std::setw(10)
              << dollars_or_infinity(row.cost_to_final) << tail.str() << "\n";
  }
  return kExitOk;
}

int cmd_compile(const ContractArgs& args, const std::string& out_prefix,
                const std::string& contract_out) {
  const ContractSpec spec = args.load();
  const Wfst m = compile(spec);
  if (!out_prefix.empty()) {
    write_file(out_prefix + ".fst.txt", write_att(m));
    write_file(out_prefix + ".isyms", write_symbols(*m.input_symbols()));
    write_file(out_prefix + ".osyms", write_symbols(*m.output_symbols()));
    write_file(out_prefix + ".states.syms",
               write_symbols(state_name_table(spec)));
  }
  if (!contract_out.empty()) {
    write_file(contract_out, write_contract_spec(spec));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"weighted finite-state transducer toolkit for computable "
               "contracts"};
  app.require_subcommand(1);

  MachineArgs info_args;
  CLI::App* info = app.add_subcommand("info", "summarize a machine");
  info_args.attach(info);

  MachineArgs validate_args;
  CLI::App* validate = app.add_subcommand("validate", "check the invariants");
  validate_args.attach(validate);

  MachineArgs det_args;
  std::string det_out;
  int det_max_states = 10'000;
  bool det_subsets = false;
  CLI::App* det =
      app.add_subcommand("determinize", "weighted subset determinization");
  det_args.attach(det);
  det->add_option("out", det_out, "output path ('-' for stdout)")->required();
  det->add_option("--max-states", det_max_states, "state budget")
      ->check(CLI::PositiveNumber);
  det->add_flag("--subsets", det_subsets,
                "print the state/residual-subset table to stderr");

  MachineArgs sd_args;
  bool sd_reverse = false;
  CLI::App* sd = app.add_subcommand(
      "shortestdistance", "per-state shortest distance (state<TAB>distance)");
  sd_args.attach(sd);
  sd->add_flag("--reverse", sd_reverse,
               "distance to a final state instead of from the initial one");

  MachineArgs draw_args;
  std::string draw_names;
  std::string draw_out = "-";
  bool draw_suppress = false;
  CLI::App* draw = app.add_subcommand("draw", "render as Graphviz DOT");
  draw_args.attach(draw);
  draw->add_option("--state-names", draw_names,
                   "state-name symbol table for node labels");
  draw->add_flag("--suppress-unit-weights", draw_suppress,
                 "omit /weight on unit-weight edges");
  draw->add_option("-o,--out", draw_out, "output path (default stdout)");

  MachineArgs eval_args;
  std::string eval_input;
  std::string eval_output;
  CLI::App* eval =
      app.add_subcommand("evaluate", "weight of an input/output string pair");
  eval_args.attach(eval);
  eval->add_option("--input", eval_input, "input symbols, space separated")
      ->required();
  eval->add_option("--output", eval_output, "output symbols, space separated")
      ->required();

  ContractArgs report_args;
  bool report_pretty = false;
  CLI::App* report =
      app.add_subcommand("report", "per-state cost report for a contract");
  report_args.attach(report);
  report->add_flag("--pretty", report_pretty,
                   "aligned, dollar-formatted columns");

  ContractArgs compile_args;
  std::string compile_prefix;
  std::string compile_contract_out;
  CLI::App* compile_cmd = app.add_subcommand(
      "compile", "compile a contract to fst.txt + symbol tables");
  compile_args.attach(compile_cmd);
  compile_cmd->add_option("--out-prefix", compile_prefix,
                          "writes <prefix>.fst.txt/.isyms/.osyms/.states.syms");
  compile_cmd->add_option("--contract-out", compile_contract_out,
                          "also write the canonical .contract rendering");

  CLI11_PARSE(app, argc, argv);

  try {
    if (info->parsed()) return cmd_info(info_args);
    if (validate->parsed()) return cmd_validate(validate_args);
    if (det->parsed()) {
      return cmd_determinize(det_args, det_out, det_max_states, det_subsets);
    }
    if (sd->parsed()) return cmd_shortestdistance(sd_args, sd_reverse);
    if (draw->parsed()) {
      return cmd_draw(draw_args, draw_names, draw_suppress, draw_out);
    }
    if (eval->parsed()) return cmd_evaluate(eval_args, eval_input, eval_output);
    if (report->parsed()) return cmd_report(report_args, report_pretty);
    if (compile_cmd->parsed()) {
      return cmd_compile(compile_args, compile_prefix, compile_contract_out);
    }
  } catch (const CLI::Error& e) {
    return app.exit(e);
  } catch (const UnknownSymbolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUnknownSymbol;
  } catch (const InputEpsilonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputEpsilon;
  } catch (const StateBudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const MissingEpsilonError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DuplicateSymbolError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const DuplicateIdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitOther;
  }
  return kExitOther;
}
