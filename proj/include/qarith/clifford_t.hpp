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

#include "qarith/circuit.hpp"
#include "qarith/simulate.hpp"

namespace qarith {

/// The 7-T Clifford+T realization of the Toffoli gate on abstract wires
/// 0 = control1, 1 = control2, 2 = target. Exactly equal to the Toffoli
/// unitary, no global-phase allowance needed; the test suite locks this
/// sequence against a statevector oracle.
inline const std::vector<Gate>& toffoli_template() {
  static const std::vector<Gate> sequence = {
      Gate::h(2),
      Gate::t(0),
      Gate::t(1),
      Gate::t(2),
      Gate::cnot(1, 0),
      Gate::cnot(2, 1),
      Gate::cnot(0, 2),
      Gate::tdg(1),
      Gate::cnot(0, 1),
      Gate::tdg(0),
      Gate::tdg(1),
      Gate::t(2),
      Gate::cnot(2, 1),
      Gate::cnot(0, 2),
      Gate::cnot(1, 0),
      Gate::h(2),
  };
  return sequence;
}

/// Replaces every Toffoli, at its sequence position, with the 7-T template
/// instantiated on its operands; all other gates pass through unchanged.
/// The result is Toffoli-free, so the pass is idempotent, and its T-count is
/// 7 per replaced Toffoli plus any pre-existing T/T†.
inline Circuit expand_toffolis(const Circuit& circuit) {
  Circuit out(circuit.width(), circuit.registers());
  for (const Gate& g : circuit.gates()) {
    if (g.kind() == GateKind::Toffoli) {
      const std::array<Wire, 3> wires = {g.operand(0), g.operand(1),
                                         g.operand(2)};
      for (const Gate& t : toffoli_template()) out.append(t.remapped(wires));
    } else {
      out.append(g);
    }
  }
  return out;
}

/// True iff the candidate 3-wire sequence induces the Toffoli unitary within
/// `tol`, checked by statevector application to all 8 basis columns. The
/// global-phase mode is a diagnostic; the template needs none.
inline bool toffoli_unitary_check(std::span<const Gate> candidate, double tol,
                                  bool up_to_global_phase = false) {
  if (tol <= 0) throw std::domain_error("tolerance must be positive");
  const RegisterMap regs{{"q", {0, 1, 2}}};
  Circuit trial(3, regs);
  for (const Gate& g : candidate) trial.append(g);
  Circuit reference(3, regs);
  reference.append(Gate::toffoli(0, 1, 2));
  return unitary_equiv(trial, reference, tol, up_to_global_phase);
}

}  // namespace qarith
