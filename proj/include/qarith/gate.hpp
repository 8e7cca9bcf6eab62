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

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

namespace qarith {

/// Index of a wire (qubit) within a circuit.
using Wire = std::uint32_t;

/// Raised when a gate or circuit would violate a structural invariant.
class CircuitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Gate alphabet: the classical reversible trio plus the Clifford+T singles.
enum class GateKind : std::uint8_t { Not, Cnot, Toffoli, H, T, Tdg, S, Sdg };

inline constexpr std::array<GateKind, 8> all_gate_kinds = {
    GateKind::Not, GateKind::Cnot, GateKind::Toffoli, GateKind::H,
    GateKind::T,   GateKind::Tdg,  GateKind::S,       GateKind::Sdg};

constexpr int arity(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Cnot:
      return 2;
    case GateKind::Toffoli:
      return 3;
    default:
      return 1;
  }
}

/// True for gates whose action is a permutation of computational basis states.
constexpr bool is_classical(GateKind kind) noexcept {
  return kind == GateKind::Not || kind == GateKind::Cnot ||
         kind == GateKind::Toffoli;
}

constexpr GateKind dagger_of(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::T:
      return GateKind::Tdg;
    case GateKind::Tdg:
      return GateKind::T;
    case GateKind::S:
      return GateKind::Sdg;
    case GateKind::Sdg:
      return GateKind::S;
    default:
      return kind;  // NOT, CNOT, Toffoli and H are self-inverse
  }
}

constexpr std::string_view kind_name(GateKind kind) noexcept {
  switch (kind) {
    case GateKind::Not:
      return "NOT";
    case GateKind::Cnot:
      return "CNOT";
    case GateKind::Toffoli:
      return "Toffoli";
    case GateKind::H:
      return "H";
    case GateKind::T:
      return "T";
    case GateKind::Tdg:
      return "TDG";
    case GateKind::S:
      return "S";
    case GateKind::Sdg:
      return "SDG";
  }
  return "?";
}

inline GateKind kind_from_name(std::string_view name) {
  for (GateKind kind : all_gate_kinds) {
    if (kind_name(kind) == name) return kind;
  }
  throw CircuitError("unknown gate kind '" + std::string(name) + "'");
}

/// A single gate application. Operands are wire indices, controls first and
/// target last; they must be pairwise distinct and match the kind's arity.
class Gate {
 public:
  Gate(GateKind kind, std::span<const Wire> operands) : kind_(kind) {
    const auto n = static_cast<std::size_t>(arity(kind));
    if (operands.size() != n) {
      throw CircuitError(std::string(kind_name(kind)) + " expects " +
                         std::to_string(n) + " operands, got " +
                         std::to_string(operands.size()));
    }
    std::copy(operands.begin(), operands.end(), ops_.begin());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        if (ops_[i] == ops_[j]) {
          throw CircuitError(std::string(kind_name(kind)) +
                             " operands must be pairwise distinct (wire " +
                             std::to_string(ops_[i]) + " repeats)");
        }
      }
    }
  }

  Gate(GateKind kind, std::initializer_list<Wire> operands)
      : Gate(kind, std::span<const Wire>(operands.begin(), operands.size())) {}

  static Gate x(Wire q) { return {GateKind::Not, {q}}; }
  static Gate h(Wire q) { return {GateKind::H, {q}}; }
  static Gate t(Wire q) { return {GateKind::T, {q}}; }
  static Gate tdg(Wire q) { return {GateKind::Tdg, {q}}; }
  static Gate s(Wire q) { return {GateKind::S, {q}}; }
  static Gate sdg(Wire q) { return {GateKind::Sdg, {q}}; }
  static Gate cnot(Wire control, Wire target) {
    return {GateKind::Cnot, {control, target}};
  }
  static Gate toffoli(Wire control1, Wire control2, Wire target) {
    return {GateKind::Toffoli, {control1, control2, target}};
  }

  GateKind kind() const noexcept { return kind_; }

  std::span<const Wire> operands() const noexcept {
    return {ops_.data(), static_cast<std::size_t>(arity(kind_))};
  }

  Wire operand(std::size_t i) const { return operands()[i]; }

  Wire max_wire() const noexcept {
    const auto ops = operands();
    return *std::max_element(ops.begin(), ops.end());
  }

  /// Same operands, inverse kind.
  Gate dagger() const noexcept {
    Gate g(*this);
    g.kind_ = dagger_of(kind_);
    return g;
  }

  /// Gate with every operand w replaced by wire_map[w].
  Gate remapped(std::span<const Wire> wire_map) const {
    std::array<Wire, 3> mapped{};
    const auto ops = operands();
    for (std::size_t i = 0; i < ops.size(); ++i) mapped[i] = wire_map[ops[i]];
    return Gate(kind_, std::span<const Wire>(mapped.data(), ops.size()));
  }

  friend bool operator==(const Gate&, const Gate&) = default;

 private:
  GateKind kind_;
  std::array<Wire, 3> ops_{};  // unused slots stay zero so equality is structural
};

}  // namespace qarith
