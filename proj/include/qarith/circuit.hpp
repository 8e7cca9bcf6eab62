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

#include <map>
#include <vector>

#include "qarith/gate.hpp"

namespace qarith {

/// Named, ordered wire groups. Position i of a register carries bit i of its
/// value (little endian: position 0 is the least significant bit).
class RegisterMap {
 public:
  using Entries = std::map<std::string, std::vector<Wire>, std::less<>>;

  RegisterMap() = default;

  RegisterMap(
      std::initializer_list<std::pair<std::string, std::vector<Wire>>> init) {
    for (const auto& [name, wires] : init) add(name, wires);
  }

  void add(std::string name, std::vector<Wire> wires) {
    if (name.empty()) throw CircuitError("register name must be non-empty");
    if (wires.empty()) {
      throw CircuitError("register '" + name +
                         "' must name at least one wire");
    }
    std::vector<Wire> sorted = wires;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw CircuitError("register '" + name + "' repeats a wire");
    }
    const std::string key = name;
    if (!entries_.emplace(std::move(name), std::move(wires)).second) {
      throw CircuitError("duplicate register name '" + key + "'");
    }
  }

  bool contains(std::string_view name) const {
    return entries_.find(name) != entries_.end();
  }

  const std::vector<Wire>& at(std::string_view name) const {
    const auto it = entries_.find(name);
    if (it == entries_.end()) {
      throw CircuitError("unknown register '" + std::string(name) + "'");
    }
    return it->second;
  }

  const Entries& entries() const noexcept { return entries_; }
  std::size_t size() const noexcept { return entries_.size(); }

  friend bool operator==(const RegisterMap&, const RegisterMap&) = default;

 private:
  Entries entries_;
};

/// An ordered gate sequence over a fixed wire count, plus the register map
/// binding roles to wire positions. Registers must partition [0, width)
/// exactly. Gates are only ever appended; existing gates are never edited,
/// and circuits compare by value.
class Circuit {
 public:
  Circuit(std::size_t width, RegisterMap registers)
      : width_(width), registers_(std::move(registers)) {
    if (width_ == 0) throw CircuitError("circuit width must be positive");
    std::vector<const std::string*> claimed(width_, nullptr);
    for (const auto& [name, wires] : registers_.entries()) {
      for (Wire w : wires) {
        if (w >= width_) {
          throw CircuitError("register '" + name + "' references wire " +
                             std::to_string(w) + " outside width " +
                             std::to_string(width_));
        }
        if (claimed[w] != nullptr) {
          throw CircuitError("registers '" + *claimed[w] + "' and '" + name +
                             "' overlap on wire " + std::to_string(w));
        }
        claimed[w] = &name;
      }
    }
    for (std::size_t w = 0; w < width_; ++w) {
      if (claimed[w] == nullptr) {
        throw CircuitError("wire " + std::to_string(w) +
                           " is not covered by any register");
      }
    }
  }

  std::size_t width() const noexcept { return width_; }
  const RegisterMap& registers() const noexcept { return registers_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }
  bool empty() const noexcept { return gates_.empty(); }

  Circuit& append(const Gate& gate) {
    if (gate.max_wire() >= width_) {
      throw CircuitError(std::string(kind_name(gate.kind())) +
                         " operand wire " + std::to_string(gate.max_wire()) +
                         " outside width " + std::to_string(width_));
    }
    gates_.push_back(gate);
    return *this;
  }

  std::size_t count(GateKind kind) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(gates_.begin(), gates_.end(),
                      [kind](const Gate& g) { return g.kind() == kind; }));
  }

  /// Reversed gate order with each gate replaced by its dagger. Running a
  /// circuit followed by its inverse is the identity on every basis state.
  Circuit inverse() const {
    Circuit inv(width_, registers_);
    inv.gates_.reserve(gates_.size());
    for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
      inv.gates_.push_back(it->dagger());
    }
    return inv;
  }

  friend bool operator==(const Circuit&, const Circuit&) = default;

 private:
  std::size_t width_;
  RegisterMap registers_;
  std::vector<Gate> gates_;
};

/// Concatenation: run `first`, then `second`. Widths and register maps must
/// be identical; use the relabeling overload otherwise.
inline Circuit compose(const Circuit& first, const Circuit& second) {
  if (first.width() != second.width()) {
    throw CircuitError("compose: width mismatch (" +
                       std::to_string(first.width()) + " vs " +
                       std::to_string(second.width()) + ")");
  }
  if (!(first.registers() == second.registers())) {
    throw CircuitError(
        "compose: register maps differ; supply an explicit relabeling");
  }
  Circuit out = first;
  for (const Gate& g : second.gates()) out.append(g);
  return out;
}

/// Concatenation with `second`'s wire w rewired to relabel[w]. The map must
/// be injective into [0, first.width()).
inline Circuit compose(const Circuit& first, const Circuit& second,
                       std::span<const Wire> relabel) {
  if (relabel.size() != second.width()) {
    throw CircuitError("compose: relabeling names " +
                       std::to_string(relabel.size()) + " wires, expected " +
                       std::to_string(second.width()));
  }
  std::vector<bool> used(first.width(), false);
  for (Wire w : relabel) {
    if (w >= first.width()) {
      throw CircuitError("compose: relabeled wire " + std::to_string(w) +
                         " outside width " + std::to_string(first.width()));
    }
    if (used[w]) {
      throw CircuitError("compose: relabeling is not injective (wire " +
                         std::to_string(w) + " reused)");
    }
    used[w] = true;
  }
  Circuit out = first;
  for (const Gate& g : second.gates()) out.append(g.remapped(relabel));
  return out;
}

}  // namespace qarith
