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

#include <cmath>
#include <complex>
#include <cstdlib>
#include <numbers>
#include <vector>

#include "qarith/circuit.hpp"

namespace qarith {

/// Raised when a circuit is routed to a backend that cannot execute it
/// (wrong gate family or width over the configured cap).
class BackendError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Width caps keep dense simulation in memory; both are knobs, not
/// architecture limits.
struct SimLimits {
  std::size_t statevector_width_cap = 16;
  std::size_t truth_table_width_cap = 24;

  /// Caps overridden by QARITH_WIDTH_CAP when set to a positive integer.
  static SimLimits from_env() {
    SimLimits limits;
    if (const char* value = std::getenv("QARITH_WIDTH_CAP")) {
      char* end = nullptr;
      const unsigned long parsed = std::strtoul(value, &end, 10);
      if (end != value && *end == '\0' && parsed > 0) {
        limits.statevector_width_cap = parsed;
        limits.truth_table_width_cap = parsed;
      }
    }
    return limits;
  }
};

/// One computational-basis assignment. Wire k is bit k of the basis index
/// (wire 0 = least significant bit).
class BasisState {
 public:
  explicit BasisState(std::size_t width) : bits_(width, 0) {
    if (width == 0) throw std::invalid_argument("basis state needs width > 0");
  }

  static BasisState from_index(std::size_t width, std::uint64_t index) {
    if (width > 64) {
      throw std::invalid_argument("index form only covers widths up to 64");
    }
    BasisState s(width);
    if (width < 64 && (index >> width) != 0) {
      throw std::invalid_argument("basis index outside 2^width");
    }
    for (std::size_t k = 0; k < width; ++k) {
      s.bits_[k] = static_cast<std::uint8_t>((index >> k) & 1u);
    }
    return s;
  }

  /// Parses a {0,1} string with wire 0 as the leftmost character.
  static BasisState from_string(std::string_view text) {
    BasisState s(text.size());
    for (std::size_t k = 0; k < text.size(); ++k) {
      if (text[k] != '0' && text[k] != '1') {
        throw std::invalid_argument("basis string must be over {0,1}");
      }
      s.bits_[k] = static_cast<std::uint8_t>(text[k] == '1');
    }
    return s;
  }

  std::size_t width() const noexcept { return bits_.size(); }
  bool bit(std::size_t k) const { return bits_.at(k) != 0; }
  void set_bit(std::size_t k, bool value) {
    bits_.at(k) = static_cast<std::uint8_t>(value);
  }
  void flip_bit(std::size_t k) { bits_.at(k) ^= 1u; }

  std::uint64_t index() const {
    if (width() > 64) {
      throw std::invalid_argument("index form only covers widths up to 64");
    }
    std::uint64_t idx = 0;
    for (std::size_t k = 0; k < width(); ++k) {
      idx |= static_cast<std::uint64_t>(bits_[k]) << k;
    }
    return idx;
  }

  /// Wire 0 leftmost.
  std::string to_string() const {
    std::string out(width(), '0');
    for (std::size_t k = 0; k < width(); ++k) {
      if (bits_[k]) out[k] = '1';
    }
    return out;
  }

  friend bool operator==(const BasisState&, const BasisState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// Little-endian value held by a register's wires.
inline std::uint64_t read_register(const BasisState& state,
                                   const std::vector<Wire>& wires) {
  if (wires.size() > 64) {
    throw std::invalid_argument("register wider than 64 bits has no integer form");
  }
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < wires.size(); ++i) {
    value |= static_cast<std::uint64_t>(state.bit(wires[i])) << i;
  }
  return value;
}

inline void write_register(BasisState& state, const std::vector<Wire>& wires,
                           std::uint64_t value) {
  if (wires.size() < 64 && (value >> wires.size()) != 0) {
    throw std::invalid_argument("value does not fit the register");
  }
  for (std::size_t i = 0; i < wires.size(); ++i) {
    state.set_bit(wires[i], ((value >> i) & 1u) != 0);
  }
}

/// Permutation backend for {NOT, CNOT, Toffoli} circuits. Phase gates are
/// rejected rather than skipped: dropping them silently would be unsound for
/// superposition inputs reached via composition.
inline BasisState run_reversible(const Circuit& circuit,
                                 const BasisState& input) {
  if (input.width() != circuit.width()) {
    throw std::invalid_argument("input width does not match circuit width");
  }
  BasisState s = input;
  for (const Gate& g : circuit.gates()) {
    switch (g.kind()) {
      case GateKind::Not:
        s.flip_bit(g.operand(0));
        break;
      case GateKind::Cnot:
        if (s.bit(g.operand(0))) s.flip_bit(g.operand(1));
        break;
      case GateKind::Toffoli:
        if (s.bit(g.operand(0)) && s.bit(g.operand(1))) s.flip_bit(g.operand(2));
        break;
      default:
        throw BackendError(std::string(kind_name(g.kind())) +
                           " gate is not a basis-state permutation; use the "
                           "statevector backend");
    }
  }
  return s;
}

/// Full input-to-output map of a classical reversible circuit, verified to be
/// a bijection before returning.
inline std::vector<std::uint64_t> truth_table(const Circuit& circuit,
                                              const SimLimits& limits = {}) {
  if (circuit.width() > limits.truth_table_width_cap) {
    throw BackendError("width " + std::to_string(circuit.width()) +
                       " exceeds truth-table cap " +
                       std::to_string(limits.truth_table_width_cap));
  }
  struct MaskedOp {
    std::uint64_t controls;
    std::uint64_t target;
  };
  std::vector<MaskedOp> ops;
  ops.reserve(circuit.size());
  for (const Gate& g : circuit.gates()) {
    if (!is_classical(g.kind())) {
      throw BackendError(std::string(kind_name(g.kind())) +
                         " gate is not a basis-state permutation; use the "
                         "statevector backend");
    }
    std::uint64_t controls = 0;
    const auto operands = g.operands();
    for (std::size_t i = 0; i + 1 < operands.size(); ++i) {
      controls |= 1ull << operands[i];
    }
    ops.push_back({controls, 1ull << operands.back()});
  }

  const std::uint64_t size = 1ull << circuit.width();
  std::vector<std::uint64_t> table(size);
  for (std::uint64_t x = 0; x < size; ++x) {
    std::uint64_t y = x;
    for (const MaskedOp& op : ops) {
      if ((y & op.controls) == op.controls) y ^= op.target;
    }
    table[x] = y;
  }

  std::vector<bool> seen(size, false);
  for (std::uint64_t y : table) {
    if (seen[y]) {
      throw std::logic_error("truth table is not a bijection");
    }
    seen[y] = true;
  }
  return table;
}

/// Dense amplitude vector over 2^width basis states; wire k is bit k of the
/// amplitude index. The norm is checked after every gate.
class StateVector {
 public:
  explicit StateVector(std::size_t width)
      : width_(width),
        amplitudes_(std::size_t{1} << width, std::complex<double>{0.0, 0.0}) {
    if (width == 0 || width > 30) {
      throw std::invalid_argument("statevector width must be in [1, 30]");
    }
    amplitudes_[0] = 1.0;
  }

  static StateVector basis_state(std::size_t width, std::uint64_t index) {
    StateVector sv(width);
    if (width < 64 && (index >> width) != 0) {
      throw std::invalid_argument("basis index outside 2^width");
    }
    sv.amplitudes_[0] = 0.0;
    sv.amplitudes_[index] = 1.0;
    return sv;
  }

  std::size_t width() const noexcept { return width_; }
  std::span<const std::complex<double>> amplitudes() const noexcept {
    return amplitudes_;
  }

  double norm() const {
    double sum = 0.0;
    for (const auto& a : amplitudes_) sum += std::norm(a);
    return std::sqrt(sum);
  }

  void apply(const Gate& gate) {
    if (gate.max_wire() >= width_) {
      throw CircuitError("gate operand outside statevector width");
    }
    static constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    const std::uint64_t n = amplitudes_.size();
    switch (gate.kind()) {
      case GateKind::H: {
        const std::uint64_t m = 1ull << gate.operand(0);
        for (std::uint64_t i = 0; i < n; ++i) {
          if ((i & m) == 0) {
            const auto a = amplitudes_[i];
            const auto b = amplitudes_[i | m];
            amplitudes_[i] = (a + b) * inv_sqrt2;
            amplitudes_[i | m] = (a - b) * inv_sqrt2;
          }
        }
        break;
      }
      case GateKind::T:
      case GateKind::Tdg:
      case GateKind::S:
      case GateKind::Sdg: {
        const std::complex<double> phase = phase_of(gate.kind());
        const std::uint64_t m = 1ull << gate.operand(0);
        for (std::uint64_t i = 0; i < n; ++i) {
          if ((i & m) != 0) amplitudes_[i] *= phase;
        }
        break;
      }
      case GateKind::Not: {
        const std::uint64_t m = 1ull << gate.operand(0);
        for (std::uint64_t i = 0; i < n; ++i) {
          if ((i & m) == 0) std::swap(amplitudes_[i], amplitudes_[i | m]);
        }
        break;
      }
      case GateKind::Cnot:
      case GateKind::Toffoli: {
        const auto ops = gate.operands();
        std::uint64_t controls = 0;
        for (std::size_t k = 0; k + 1 < ops.size(); ++k) {
          controls |= 1ull << ops[k];
        }
        const std::uint64_t t = 1ull << ops.back();
        for (std::uint64_t i = 0; i < n; ++i) {
          if ((i & controls) == controls && (i & t) == 0) {
            std::swap(amplitudes_[i], amplitudes_[i | t]);
          }
        }
        break;
      }
    }
    if (std::abs(norm() - 1.0) > 1e-12) {
      throw std::logic_error("statevector norm drifted beyond 1e-12");
    }
  }

 private:
  static std::complex<double> phase_of(GateKind kind) {
    static constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    switch (kind) {
      case GateKind::T:
        return {inv_sqrt2, inv_sqrt2};
      case GateKind::Tdg:
        return {inv_sqrt2, -inv_sqrt2};
      case GateKind::S:
        return {0.0, 1.0};
      default:
        return {0.0, -1.0};  // SDG
    }
  }

  std::size_t width_;
  std::vector<std::complex<double>> amplitudes_;
};

inline StateVector run_statevector(const Circuit& circuit,
                                   const BasisState& input,
                                   const SimLimits& limits = {}) {
  if (circuit.width() > limits.statevector_width_cap) {
    throw BackendError("width " + std::to_string(circuit.width()) +
                       " exceeds statevector cap " +
                       std::to_string(limits.statevector_width_cap));
  }
  if (input.width() != circuit.width()) {
    throw std::invalid_argument("input width does not match circuit width");
  }
  StateVector sv = StateVector::basis_state(circuit.width(), input.index());
  for (const Gate& g : circuit.gates()) sv.apply(g);
  return sv;
}

/// Column-by-column unitary comparison via statevector runs on every basis
/// state. With `up_to_global_phase`, the second unitary is first aligned by
/// the phase of the largest-modulus entry of the first column.
inline bool unitary_equiv(const Circuit& c1, const Circuit& c2, double tol,
                          bool up_to_global_phase = false,
                          const SimLimits& limits = {}) {
  if (tol <= 0) throw std::domain_error("tolerance must be positive");
  if (c1.width() != c2.width()) {
    throw std::invalid_argument("unitary_equiv: width mismatch");
  }
  if (c1.width() > limits.statevector_width_cap) {
    throw BackendError("width " + std::to_string(c1.width()) +
                       " exceeds statevector cap " +
                       std::to_string(limits.statevector_width_cap));
  }
  const std::uint64_t columns = 1ull << c1.width();
  std::complex<double> phase{1.0, 0.0};
  for (std::uint64_t col = 0; col < columns; ++col) {
    const BasisState in = BasisState::from_index(c1.width(), col);
    const StateVector u = run_statevector(c1, in, limits);
    const StateVector v = run_statevector(c2, in, limits);
    if (up_to_global_phase && col == 0) {
      std::size_t k = 0;
      double best = -1.0;
      for (std::size_t i = 0; i < u.amplitudes().size(); ++i) {
        const double mag = std::abs(u.amplitudes()[i]);
        if (mag > best) {
          best = mag;
          k = i;
        }
      }
      const auto a = u.amplitudes()[k];
      const auto b = v.amplitudes()[k];
      if (std::abs(b) < 1e-12) return false;  // moduli already disagree
      phase = (a / std::abs(a)) * std::conj(b / std::abs(b));
    }
    for (std::size_t i = 0; i < u.amplitudes().size(); ++i) {
      if (std::abs(u.amplitudes()[i] - phase * v.amplitudes()[i]) > tol) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace qarith
