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

#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "qarith/circuit.hpp"

namespace qarith {

enum class Format { Json, Qasm };

inline Format format_from_name(std::string_view name) {
  if (name == "json") return Format::Json;
  if (name == "qasm") return Format::Qasm;
  throw CircuitError("unknown format '" + std::string(name) +
                     "' (expected json or qasm)");
}

/// Netlist schema: {width, registers:{name:[wires]}, gates:[{kind, operands}]}.
/// Output is deterministic (keys sorted) and newline-terminated.
inline std::string to_json(const Circuit& circuit) {
  nlohmann::json j;
  j["width"] = circuit.width();
  nlohmann::json regs = nlohmann::json::object();
  for (const auto& [name, wires] : circuit.registers().entries()) {
    regs[name] = wires;
  }
  j["registers"] = std::move(regs);
  nlohmann::json gates = nlohmann::json::array();
  for (const Gate& g : circuit.gates()) {
    nlohmann::json jg;
    jg["kind"] = kind_name(g.kind());
    jg["operands"] = std::vector<Wire>(g.operands().begin(), g.operands().end());
    gates.push_back(std::move(jg));
  }
  j["gates"] = std::move(gates);
  return j.dump(2) + "\n";
}

inline Circuit from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CircuitError(std::string("netlist parse error: ") + e.what());
  }
  if (!j.is_object()) throw CircuitError("netlist must be a JSON object");
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (key != "width" && key != "registers" && key != "gates") {
      throw CircuitError("netlist has unexpected key '" + key + "'");
    }
  }
  if (!j.contains("width") || !j["width"].is_number_unsigned()) {
    throw CircuitError("netlist needs an unsigned integer 'width'");
  }
  if (!j.contains("registers") || !j["registers"].is_object()) {
    throw CircuitError("netlist needs a 'registers' object");
  }
  if (!j.contains("gates") || !j["gates"].is_array()) {
    throw CircuitError("netlist needs a 'gates' array");
  }

  RegisterMap regs;
  for (const auto& item : j["registers"].items()) {
    const nlohmann::json& wires = item.value();
    if (!wires.is_array()) {
      throw CircuitError("register '" + item.key() +
                         "' must be an array of wire indices");
    }
    std::vector<Wire> w;
    w.reserve(wires.size());
    for (const nlohmann::json& v : wires) {
      if (!v.is_number_unsigned()) {
        throw CircuitError("register '" + item.key() +
                           "' has a non-integer wire index");
      }
      w.push_back(v.get<Wire>());
    }
    regs.add(item.key(), std::move(w));
  }

  Circuit circuit(j["width"].get<std::size_t>(), std::move(regs));
  for (const nlohmann::json& jg : j["gates"]) {
    if (!jg.is_object() || !jg.contains("kind") || !jg["kind"].is_string() ||
        !jg.contains("operands") || !jg["operands"].is_array()) {
      throw CircuitError("each gate needs a 'kind' string and an 'operands' array");
    }
    const GateKind kind = kind_from_name(jg["kind"].get<std::string>());
    std::vector<Wire> ops;
    ops.reserve(jg["operands"].size());
    for (const nlohmann::json& v : jg["operands"]) {
      if (!v.is_number_unsigned()) {
        throw CircuitError("gate operands must be unsigned wire indices");
      }
      ops.push_back(v.get<Wire>());
    }
    circuit.append(Gate(kind, ops));
  }
  return circuit;
}

/// OpenQASM 2.0 surface syntax over one register q[width], one gate per line
/// in sequence order. ccx lines are legal output; expansion is a separate pass.
inline std::string to_qasm(const Circuit& circuit) {
  static constexpr std::string_view names[] = {"x", "cx",  "ccx", "h",
                                               "t", "tdg", "s",   "sdg"};
  std::string out;
  out += "OPENQASM 2.0;\n";
  out += "include \"qelib1.inc\";\n";
  out += "qreg q[" + std::to_string(circuit.width()) + "];\n";
  for (const Gate& g : circuit.gates()) {
    out += names[static_cast<std::size_t>(g.kind())];
    out += ' ';
    const auto ops = g.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (i > 0) out += ',';
      out += "q[" + std::to_string(ops[i]) + "]";
    }
    out += ";\n";
  }
  return out;
}

inline std::string serialize(const Circuit& circuit, Format format) {
  return format == Format::Json ? to_json(circuit) : to_qasm(circuit);
}

}  // namespace qarith
