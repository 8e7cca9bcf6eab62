// Copyright 2026 The qarith authors
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

// Command-line front end: circuit generation, Clifford+T expansion, garbage
// removal wrapping, simulation, oracle verification and cost-table output.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include "qarith/qarith.hpp"

namespace {

using namespace qarith;

struct VerifyFailure {
  std::string description;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file '" + out_path + "'");
  out << text;
}

Circuit build_kind(const std::string& kind, int n) {
  return kind == "adder" ? build_ctrl_add(n) : build_multiplier(n);
}

std::string result_register_of(const std::string& kind) {
  return kind == "adder" ? "b" : "p";
}

std::string ancilla_register_of(const std::string& kind) {
  return kind == "adder" ? "anc" : "p";
}

// ---------------------------------------------------------------------------
// gen

int run_gen(const std::string& kind, int n, bool expand, bool wrap,
            const std::string& format, const std::string& out_path) {
  Circuit circuit = build_kind(kind, n);
  if (wrap) circuit = bennett_wrap(circuit, result_register_of(kind));
  if (expand) circuit = expand_toffolis(circuit);
  write_output(serialize(circuit, format_from_name(format)), out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

std::optional<VerifyFailure> check_adder_case(const Circuit& circuit, int n,
                                              bool ctrl, std::uint64_t a,
                                              std::uint64_t b) {
  const RegisterMap& regs = circuit.registers();
  BasisState in(circuit.width());
  write_register(in, regs.at("ctrl"), ctrl ? 1 : 0);
  write_register(in, regs.at("a"), a);
  write_register(in, regs.at("b"), b);
  const BasisState out = run_reversible(circuit, in);
  const CtrlAddOracle oracle(n, ctrl, a, b);

  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  const std::uint64_t got_b = read_register(out, regs.at("b"));
  const std::uint64_t want_b = oracle.sum_bits() & mask;
  const std::uint64_t got_a = read_register(out, regs.at("a"));
  const bool got_ctrl = out.bit(regs.at("ctrl")[0]);
  const bool got_anc0 = out.bit(regs.at("anc")[0]);
  const bool got_anc1 = out.bit(regs.at("anc")[1]);
  const bool want_anc0 = oracle.sum(n);

  if (got_b == want_b && got_a == a && got_ctrl == ctrl &&
      got_anc0 == want_anc0 && !got_anc1) {
    return std::nullopt;
  }
  std::ostringstream msg;
  msg << "ctrl=" << (ctrl ? 1 : 0) << " a=" << a << " b=" << b << ": got b="
      << got_b << " a=" << got_a << " ctrl=" << (got_ctrl ? 1 : 0)
      << " anc0=" << (got_anc0 ? 1 : 0) << " anc1=" << (got_anc1 ? 1 : 0)
      << ", expected b=" << want_b << " a=" << a << " ctrl=" << (ctrl ? 1 : 0)
      << " anc0=" << (want_anc0 ? 1 : 0) << " anc1=0";
  return VerifyFailure{msg.str()};
}

std::optional<VerifyFailure> check_mult_case(const Circuit& circuit, int n,
                                             std::uint64_t a,
                                             std::uint64_t b) {
  const RegisterMap& regs = circuit.registers();
  BasisState in(circuit.width());
  write_register(in, regs.at("a"), a);
  write_register(in, regs.at("b"), b);
  const BasisState out = run_reversible(circuit, in);
  const MultOracle oracle(n, a, b);

  const std::uint64_t got_a = read_register(out, regs.at("a"));
  const std::uint64_t got_b = read_register(out, regs.at("b"));
  const std::vector<Wire>& p = regs.at("p");
  // compare the accumulator bitwise; it can be wider than 64 bits
  int bad_bit = -1;
  for (int i = 0; i < 2 * n && bad_bit < 0; ++i) {
    if (out.bit(p[static_cast<std::size_t>(i)]) != oracle.p_bit(i)) bad_bit = i;
  }
  if (bad_bit < 0 && out.bit(p[static_cast<std::size_t>(2 * n)])) bad_bit = 2 * n;

  if (bad_bit < 0 && got_a == a && got_b == b) return std::nullopt;
  std::ostringstream msg;
  msg << "a=" << a << " b=" << b << ": ";
  if (bad_bit >= 0) {
    msg << "product register differs from a*b=" << oracle.product()
        << " at bit " << bad_bit;
  } else {
    msg << "operand registers not restored (a=" << got_a << " b=" << got_b
        << ")";
  }
  return VerifyFailure{msg.str()};
}

int run_verify(const std::string& kind, int n, const std::string& mode,
               long long samples, std::uint64_t seed) {
  const bool adder = kind == "adder";
  if (adder && n > 63) {
    std::cerr << "error: adder verification supports n <= 63\n";
    return 2;
  }
  if (!adder && n > 32) {
    std::cerr << "error: multiplier verification supports n <= 32\n";
    return 2;
  }
  const int input_bits = adder ? 2 * n + 1 : 2 * n;
  if (mode == "exhaustive" && input_bits > 20) {
    std::cerr << "error: exhaustive verification needs at most 2^20 inputs ("
              << input_bits << " input bits requested); use --mode sample\n";
    return 2;
  }
  if (mode == "sample" && samples < 1) {
    std::cerr << "error: --samples must be >= 1\n";
    return 2;
  }

  const Circuit circuit = build_kind(kind, n);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;

  long long total = 0;
  long long passed = 0;
  std::optional<VerifyFailure> first_failure;
  const auto record = [&](const std::optional<VerifyFailure>& failure) {
    ++total;
    if (!failure) {
      ++passed;
    } else if (!first_failure) {
      first_failure = failure;
    }
  };

  if (mode == "exhaustive") {
    if (adder) {
      for (int ctrl = 0; ctrl <= 1; ++ctrl) {
        for (std::uint64_t a = 0; a <= mask; ++a) {
          for (std::uint64_t b = 0; b <= mask; ++b) {
            record(check_adder_case(circuit, n, ctrl != 0, a, b));
          }
        }
      }
    } else {
      for (std::uint64_t a = 0; a <= mask; ++a) {
        for (std::uint64_t b = 0; b <= mask; ++b) {
          record(check_mult_case(circuit, n, a, b));
        }
      }
    }
  } else {
    // masked draws from a seeded generator keep sampling deterministic
    std::mt19937_64 rng(seed);
    for (long long s = 0; s < samples; ++s) {
      const std::uint64_t a = rng() & mask;
      const std::uint64_t b = rng() & mask;
      if (adder) {
        record(check_adder_case(circuit, n, (rng() & 1u) != 0, a, b));
      } else {
        record(check_mult_case(circuit, n, a, b));
      }
    }
  }

  std::cout << passed << "/" << total << " pass\n";
  if (first_failure) {
    std::cout << "first counterexample: " << first_failure->description << "\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// resources

int run_resources(const std::string& kind, int n, const std::string& circuit_path,
                  bool as_json, const std::string& out_path) {
  ResourceReport rep;
  std::optional<long long> formula;
  if (!circuit_path.empty()) {
    rep = report(from_json(read_file(circuit_path)));
  } else {
    const Circuit built = build_kind(kind, n);
    const long long pre_expansion =
        static_cast<long long>(built.count(GateKind::Toffoli));
    const std::vector<std::string> ancillae = {ancilla_register_of(kind)};
    rep = report(expand_toffolis(built), ancillae);
    rep.toffoli_count_pre_expansion = pre_expansion;
    formula = kind == "adder" ? ctrl_add_tcount(n) : multiplier_tcount(n);
  }

  const bool agree = !formula || *formula == rep.t_count;
  std::string text;
  if (as_json) {
    nlohmann::json j;
    j["width"] = rep.width;
    nlohmann::json counts = nlohmann::json::object();
    for (GateKind kind_entry : all_gate_kinds) {
      counts[std::string(kind_name(kind_entry))] = rep.count(kind_entry);
    }
    j["counts"] = std::move(counts);
    j["t_count"] = rep.t_count;
    j["toffoli_count_pre_expansion"] = rep.toffoli_count_pre_expansion;
    j["ancillae"] = rep.ancillae;
    j["garbage"] = rep.garbage;
    if (formula) {
      j["formula_t_count"] = *formula;
      j["census"] = agree ? "AGREE" : "DISAGREE";
    }
    text = j.dump(2) + "\n";
  } else {
    std::ostringstream os;
    os << "width: " << rep.width << "\n";
    for (GateKind kind_entry : all_gate_kinds) {
      os << kind_name(kind_entry) << ": " << rep.count(kind_entry) << "\n";
    }
    os << "t_count: " << rep.t_count << "\n";
    os << "toffoli_count_pre_expansion: " << rep.toffoli_count_pre_expansion
       << "\n";
    os << "ancillae: " << rep.ancillae << "\n";
    os << "garbage: " << rep.garbage << "\n";
    if (formula) {
      os << "formula_t_count: " << *formula << "\n";
      os << "census: " << (agree ? "AGREE" : "DISAGREE") << "\n";
    }
    text = os.str();
  }
  write_output(text, out_path);
  return agree ? 0 : 1;
}

// ---------------------------------------------------------------------------
// tables

int run_tables(const std::string& id, const std::string& out_path) {
  write_output(to_csv(reproduce_table(id)), out_path);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

int run_simulate(const std::string& kind, int n, const std::string& circuit_path,
                 const std::string& bits,
                 const std::vector<std::string>& assignments) {
  const Circuit circuit = circuit_path.empty()
                              ? build_kind(kind, n)
                              : from_json(read_file(circuit_path));

  BasisState input(circuit.width());
  if (!bits.empty()) {
    if (!assignments.empty()) {
      throw std::runtime_error("--bits and --set are mutually exclusive");
    }
    input = BasisState::from_string(bits);
    if (input.width() != circuit.width()) {
      throw std::runtime_error("--bits names " + std::to_string(bits.size()) +
                               " wires, circuit has " +
                               std::to_string(circuit.width()));
    }
  } else {
    for (const std::string& assignment : assignments) {
      const std::size_t eq = assignment.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == assignment.size()) {
        throw std::runtime_error("--set expects name=value, got '" +
                                 assignment + "'");
      }
      const std::string name = assignment.substr(0, eq);
      const std::uint64_t value = std::stoull(assignment.substr(eq + 1));
      write_register(input, circuit.registers().at(name), value);
    }
  }

  const bool classical =
      std::all_of(circuit.gates().begin(), circuit.gates().end(),
                  [](const Gate& g) { return is_classical(g.kind()); });
  BasisState output(circuit.width());
  if (classical) {
    output = run_reversible(circuit, input);
  } else {
    // Clifford+T netlists go through the statevector backend; only runs that
    // land back on a basis state have a printable outcome
    const StateVector sv = run_statevector(circuit, input, SimLimits::from_env());
    std::optional<std::uint64_t> landed;
    for (std::size_t i = 0; i < sv.amplitudes().size(); ++i) {
      if (std::norm(sv.amplitudes()[i]) >= 1.0 - 1e-9) {
        landed = i;
        break;
      }
    }
    if (!landed) {
      throw std::runtime_error(
          "output is not a computational basis state; inspect the circuit "
          "with the statevector API instead");
    }
    output = BasisState::from_index(circuit.width(), *landed);
  }

  std::cout << "bits: " << output.to_string() << "\n";
  for (const auto& [name, wires] : circuit.registers().entries()) {
    if (wires.size() <= 64) {
      std::cout << name << ": " << read_register(output, wires) << "\n";
    } else {
      std::string value(wires.size(), '0');
      for (std::size_t i = 0; i < wires.size(); ++i) {
        if (output.bit(wires[i])) value[i] = '1';
      }
      std::cout << name << ": bits " << value << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"garbageless conditional-adder and multiplier circuits over "
               "the Clifford+T gate set"};
  app.require_subcommand(1);

  std::string gen_kind, gen_format = "json", gen_out;
  int gen_n = 0;
  bool gen_expand = false, gen_wrap = false;
  CLI::App* gen = app.add_subcommand("gen", "generate a circuit netlist");
  gen->add_option("kind", gen_kind, "adder or mult")
      ->required()
      ->check(CLI::IsMember({"adder", "mult"}));
  gen->add_option("--n", gen_n, "operand width in bits")->required();
  gen->add_flag("--expand", gen_expand, "expand Toffolis to Clifford+T");
  gen->add_flag("--wrap", gen_wrap,
                "apply compute-copy-uncompute garbage removal");
  gen->add_option("--format", gen_format, "json or qasm")
      ->check(CLI::IsMember({"json", "qasm"}));
  gen->add_option("--out", gen_out, "output path (default: stdout)");

  std::string verify_kind, verify_mode = "exhaustive";
  int verify_n = 0;
  long long verify_samples = 1000;
  std::uint64_t verify_seed = 0;
  CLI::App* verify =
      app.add_subcommand("verify", "check a builder against its oracle");
  verify->add_option("kind", verify_kind, "adder or mult")
      ->required()
      ->check(CLI::IsMember({"adder", "mult"}));
  verify->add_option("--n", verify_n, "operand width in bits")->required();
  verify->add_option("--mode", verify_mode, "exhaustive or sample")
      ->check(CLI::IsMember({"exhaustive", "sample"}));
  verify->add_option("--samples", verify_samples, "draws in sample mode");
  verify->add_option("--seed", verify_seed, "sampling seed");

  std::string res_kind, res_circuit, res_out;
  int res_n = 0;
  bool res_json = false;
  CLI::App* resources =
      app.add_subcommand("resources", "gate census and T-count report");
  resources->add_option("kind", res_kind, "adder or mult")
      ->check(CLI::IsMember({"adder", "mult"}));
  resources->add_option("--n", res_n, "operand width in bits");
  resources->add_option("--circuit", res_circuit, "JSON netlist to report on");
  resources->add_flag("--json", res_json, "emit the report as JSON");
  resources->add_option("--out", res_out, "output path (default: stdout)");

  std::string tables_id, tables_out;
  CLI::App* tables =
      app.add_subcommand("tables", "reproduce a comparison table as CSV");
  tables->add_option("--id", tables_id, "II, V, VI or VII")->required();
  tables->add_option("--out", tables_out, "output path (default: stdout)");

  std::string sim_kind, sim_circuit, sim_bits;
  int sim_n = 0;
  std::vector<std::string> sim_sets;
  CLI::App* simulate =
      app.add_subcommand("simulate", "run a circuit on a basis-state input");
  simulate->add_option("kind", sim_kind, "adder or mult")
      ->check(CLI::IsMember({"adder", "mult"}));
  simulate->add_option("--n", sim_n, "operand width in bits");
  simulate->add_option("--circuit", sim_circuit, "JSON netlist to run");
  simulate->add_option("--bits", sim_bits,
                       "input bits as a 0/1 string, wire 0 leftmost");
  simulate->add_option("--set", sim_sets,
                       "register assignment name=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*gen) return run_gen(gen_kind, gen_n, gen_expand, gen_wrap, gen_format, gen_out);
    if (*verify) return run_verify(verify_kind, verify_n, verify_mode, verify_samples, verify_seed);
    if (*resources) {
      if (res_circuit.empty() && res_kind.empty()) {
        throw std::runtime_error("resources needs a builder kind with --n, or --circuit");
      }
      if (!res_circuit.empty() && !res_kind.empty()) {
        throw std::runtime_error("resources takes either a builder kind or --circuit, not both");
      }
      return run_resources(res_kind, res_n, res_circuit, res_json, res_out);
    }
    if (*tables) return run_tables(tables_id, tables_out);
    if (*simulate) {
      if (sim_circuit.empty() && sim_kind.empty()) {
        throw std::runtime_error("simulate needs a builder kind with --n, or --circuit");
      }
      if (!sim_circuit.empty() && !sim_kind.empty()) {
        throw std::runtime_error("simulate takes either a builder kind or --circuit, not both");
      }
      return run_simulate(sim_kind, sim_n, sim_circuit, sim_bits, sim_sets);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
