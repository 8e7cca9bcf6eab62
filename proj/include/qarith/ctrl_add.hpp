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

#include <cstdint>

#include "qarith/circuit.hpp"

namespace qarith {

/// Arithmetic reference model for conditional addition with no input carry.
/// Carries follow c_0 = 0, c_i = a_{i-1}b_{i-1} ^ b_{i-1}c_{i-1} ^
/// a_{i-1}c_{i-1}. With ctrl set, s_i = a_i ^ b_i ^ c_i for i < n and
/// s_n = c_n, so s is the (n+1)-bit value of a + b; with ctrl clear, s
/// passes b through with a zero top bit.
class CtrlAddOracle {
 public:
  CtrlAddOracle(int n, bool ctrl, std::uint64_t a, std::uint64_t b)
      : n_(n), ctrl_(ctrl), a_(a), b_(b) {
    if (n < 1 || n > 63) {
      throw std::domain_error("oracle width must be in [1, 63]");
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    if ((a & ~mask) != 0 || (b & ~mask) != 0) {
      throw std::invalid_argument("operands must fit in n bits");
    }
    carries_ = 0;
    for (int i = 1; i <= n; ++i) {
      const std::uint64_t ai = (a_ >> (i - 1)) & 1u;
      const std::uint64_t bi = (b_ >> (i - 1)) & 1u;
      const std::uint64_t ci = (carries_ >> (i - 1)) & 1u;
      carries_ |= ((ai & bi) ^ (bi & ci) ^ (ai & ci)) << i;
    }
    if (ctrl_) {
      sums_ = (a_ ^ b_ ^ carries_) & mask;
      sums_ |= ((carries_ >> n) & 1u) << n;
    } else {
      sums_ = b_;
    }
  }

  int n() const noexcept { return n_; }
  bool ctrl() const noexcept { return ctrl_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }

  /// c_i for 0 <= i <= n.
  bool carry(int i) const {
    if (i < 0 || i > n_) throw std::out_of_range("carry index outside [0, n]");
    return ((carries_ >> i) & 1u) != 0;
  }

  /// s_i for 0 <= i <= n.
  bool sum(int i) const {
    if (i < 0 || i > n_) throw std::out_of_range("sum index outside [0, n]");
    return ((sums_ >> i) & 1u) != 0;
  }

  /// The (n+1)-bit integer with bit i = s_i; equals a + b when ctrl is set.
  std::uint64_t sum_bits() const noexcept { return sums_; }

 private:
  int n_;
  bool ctrl_;
  std::uint64_t a_;
  std::uint64_t b_;
  std::uint64_t carries_;
  std::uint64_t sums_;
};

/// Builds the garbageless conditional adder with no input carry on 2n+3
/// wires: ctrl on wire 0, b_i on wire 2i+1, a_i on wire 2i+2, and two
/// ancillae on wires 2n+1, 2n+2 (registers ctrl/b/a/anc). Gates are CNOT and
/// Toffoli only. With both ancillae 0 at entry, the b register ends holding
/// s_0..s_{n-1}, anc[0] the conditional carry-out c_n*ctrl, and ctrl, a and
/// anc[1] are restored. Toffoli count is 3n+2 and CNOT count 4n-6.
inline Circuit build_ctrl_add(int n) {
  if (n < 2) {
    throw std::domain_error(
        "conditional adder needs operand width n >= 2 (a 1-bit conditional "
        "add is a different circuit)");
  }
  const Wire ctrl = 0;
  const auto b_wire = [](int i) { return static_cast<Wire>(2 * i + 1); };
  const auto a_wire = [](int i) { return static_cast<Wire>(2 * i + 2); };
  const Wire anc0 = static_cast<Wire>(2 * n + 1);
  const Wire anc1 = static_cast<Wire>(2 * n + 2);

  RegisterMap regs;
  regs.add("ctrl", {ctrl});
  std::vector<Wire> b_wires, a_wires;
  for (int i = 0; i < n; ++i) {
    b_wires.push_back(b_wire(i));
    a_wires.push_back(a_wire(i));
  }
  regs.add("b", std::move(b_wires));
  regs.add("a", std::move(a_wires));
  regs.add("anc", {anc0, anc1});

  Circuit c(static_cast<std::size_t>(2 * n + 3), std::move(regs));

  // b_i ^= a_i
  for (int i = 1; i < n; ++i) c.append(Gate::cnot(a_wire(i), b_wire(i)));

  // conditional carry-out seed, then the suffix-xor cascade on a (high to low)
  c.append(Gate::toffoli(ctrl, a_wire(n - 1), anc0));
  for (int i = n - 2; i >= 1; --i) c.append(Gate::cnot(a_wire(i), a_wire(i + 1)));

  // carry ripple: a_{i+1} picks up c_{i+1}
  for (int i = 0; i <= n - 2; ++i) {
    c.append(Gate::toffoli(b_wire(i), a_wire(i), a_wire(i + 1)));
  }

  // top-bit block: deposit c_n*ctrl on anc[0] and the top sum bit on b_{n-1},
  // restoring anc[1]
  c.append(Gate::toffoli(b_wire(n - 1), a_wire(n - 1), anc1));
  c.append(Gate::toffoli(ctrl, anc1, anc0));
  c.append(Gate::toffoli(b_wire(n - 1), a_wire(n - 1), anc1));
  c.append(Gate::toffoli(ctrl, a_wire(n - 1), b_wire(n - 1)));

  // ripple undo (high to low), dropping a conditional sum bit on each b_i
  for (int i = n - 2; i >= 0; --i) {
    c.append(Gate::toffoli(b_wire(i), a_wire(i), a_wire(i + 1)));
    c.append(Gate::toffoli(ctrl, a_wire(i), b_wire(i)));
  }

  // cascade undo (low to high)
  for (int i = 1; i <= n - 2; ++i) c.append(Gate::cnot(a_wire(i), a_wire(i + 1)));

  // undo the initial xors; each b_i settles to its conditional sum bit
  for (int i = 1; i < n; ++i) c.append(Gate::cnot(a_wire(i), b_wire(i)));

  return c;
}

/// Closed-form T-count of the expanded conditional adder; matches the counted
/// census of expand_toffolis(build_ctrl_add(n)).
inline long long ctrl_add_tcount(int n) {
  if (n < 2) {
    throw std::domain_error("conditional adder needs operand width n >= 2");
  }
  return 21LL * n + 14;
}

}  // namespace qarith
