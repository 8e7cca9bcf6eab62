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

#include "qarith/ctrl_add.hpp"

namespace qarith {

/// Arithmetic reference model for multiplication: p = a * b over 2n bits.
class MultOracle {
 public:
  MultOracle(int n, std::uint64_t a, std::uint64_t b) : n_(n), a_(a), b_(b) {
    if (n < 1 || n > 32) {
      throw std::domain_error("oracle width must be in [1, 32]");
    }
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    if ((a & ~mask) != 0 || (b & ~mask) != 0) {
      throw std::invalid_argument("operands must fit in n bits");
    }
  }

  int n() const noexcept { return n_; }
  std::uint64_t a() const noexcept { return a_; }
  std::uint64_t b() const noexcept { return b_; }
  std::uint64_t product() const noexcept { return a_ * b_; }

  /// p_i for 0 <= i < 2n.
  bool p_bit(int i) const {
    if (i < 0 || i >= 2 * n_) {
      throw std::out_of_range("product bit index outside [0, 2n)");
    }
    return ((product() >> i) & 1u) != 0;
  }

 private:
  int n_;
  std::uint64_t a_;
  std::uint64_t b_;
};

/// Shift-and-add multiplier on 4n+1 wires: registers b on wires [0, n),
/// a on [n, 2n) and a zero-initialized accumulator p on [2n, 4n]. A Toffoli
/// array deposits the b_0 partial product onto p_0..p_{n-1}; then, for
/// j = 1..n-1, one embedded conditional adder controlled by b_j adds a into
/// p_j..p_{j+n-1} with its carry-out landing on p_{n+j} (p_{n+j} and
/// p_{n+j+1} serve as that instance's ancillae, both still 0 at that point).
/// With p preconditioned to 0 the low 2n wires of p end holding a*b, p_{2n}
/// returns to 0, and a and b are preserved.
inline Circuit build_multiplier(int n) {
  if (n < 2) {
    throw std::domain_error("multiplier needs operand width n >= 2");
  }
  const auto b_wire = [](int i) { return static_cast<Wire>(i); };
  const auto a_wire = [n](int i) { return static_cast<Wire>(n + i); };
  const auto p_wire = [n](int i) { return static_cast<Wire>(2 * n + i); };

  RegisterMap regs;
  std::vector<Wire> b_wires, a_wires, p_wires;
  for (int i = 0; i < n; ++i) {
    b_wires.push_back(b_wire(i));
    a_wires.push_back(a_wire(i));
  }
  for (int i = 0; i <= 2 * n; ++i) p_wires.push_back(p_wire(i));
  regs.add("b", std::move(b_wires));
  regs.add("a", std::move(a_wires));
  regs.add("p", std::move(p_wires));

  Circuit c(static_cast<std::size_t>(4 * n + 1), std::move(regs));

  for (int i = 0; i < n; ++i) {
    c.append(Gate::toffoli(b_wire(0), a_wire(i), p_wire(i)));
  }

  // equivalent to composing with each relabeled adder instance, without the
  // quadratic re-copy
  const Circuit adder = build_ctrl_add(n);
  for (int j = 1; j < n; ++j) {
    std::vector<Wire> relabel(static_cast<std::size_t>(2 * n + 3));
    relabel[0] = b_wire(j);
    for (int i = 0; i < n; ++i) {
      relabel[2 * i + 1] = p_wire(j + i);
      relabel[2 * i + 2] = a_wire(i);
    }
    relabel[2 * n + 1] = p_wire(n + j);
    relabel[2 * n + 2] = p_wire(n + j + 1);
    for (const Gate& g : adder.gates()) c.append(g.remapped(relabel));
  }
  return c;
}

/// Gate-index boundaries of the builder's blocks: offsets[0] starts the
/// Toffoli array, offsets[j] the j-th embedded adder (1 <= j <= n-1), and
/// offsets[n] is one past the last gate.
inline std::vector<std::size_t> multiplier_block_offsets(int n) {
  if (n < 2) {
    throw std::domain_error("multiplier needs operand width n >= 2");
  }
  const std::size_t adder_gates = static_cast<std::size_t>(7 * n - 4);
  std::vector<std::size_t> offsets;
  offsets.reserve(static_cast<std::size_t>(n) + 1);
  offsets.push_back(0);
  std::size_t at = static_cast<std::size_t>(n);
  offsets.push_back(at);
  for (int j = 1; j < n; ++j) {
    at += adder_gates;
    offsets.push_back(at);
  }
  return offsets;
}

/// Closed-form T-count of the expanded multiplier: 7n for the Toffoli array
/// plus (n-1) adders at 21n+14 each.
inline long long multiplier_tcount(int n) {
  if (n < 2) {
    throw std::domain_error("multiplier needs operand width n >= 2");
  }
  return 21LL * n * n - 14;
}

inline long long multiplier_qubits(int n) {
  if (n < 2) {
    throw std::domain_error("multiplier needs operand width n >= 2");
  }
  return 4LL * n + 1;
}

/// The zero-initialized wires (the whole p register).
inline long long multiplier_ancillae(int n) {
  if (n < 2) {
    throw std::domain_error("multiplier needs operand width n >= 2");
  }
  return 2LL * n + 1;
}

}  // namespace qarith
