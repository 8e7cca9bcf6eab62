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

#include <numeric>

#include "qarith/circuit.hpp"

namespace qarith {

/// Compute-copy-uncompute garbage removal: runs `source`, copies the named
/// result register onto a fresh register (one CNOT per wire, result wire as
/// control, index-aligned), then runs the inverse of `source`. On any basis
/// input every source wire is restored to its input value while the copy
/// register keeps the result; the copy CNOTs touch result wires only as
/// controls, so they commute with the uncomputation. Width grows by the
/// result register's size and the expanded T-count exactly doubles.
inline Circuit bennett_wrap(const Circuit& source,
                            std::string_view result_register,
                            std::string_view copy_register = "y") {
  const std::vector<Wire>& result = source.registers().at(result_register);
  if (source.registers().contains(copy_register)) {
    throw CircuitError("copy register '" + std::string(copy_register) +
                       "' already exists in the source circuit");
  }
  const std::size_t w = source.width();
  const std::size_t m = result.size();

  RegisterMap regs = source.registers();
  std::vector<Wire> copy(m);
  std::iota(copy.begin(), copy.end(), static_cast<Wire>(w));
  regs.add(std::string(copy_register), copy);

  Circuit out(w + m, std::move(regs));
  for (const Gate& g : source.gates()) out.append(g);
  for (std::size_t i = 0; i < m; ++i) out.append(Gate::cnot(result[i], copy[i]));
  const Circuit uncompute = source.inverse();
  for (const Gate& g : uncompute.gates()) out.append(g);
  return out;
}

/// Closed-form T-count of the partial-product-tree multiplier baseline by
/// Babu after garbage removal. Cost model only; the baseline circuit itself
/// is never built.
inline long long babu_garbageless_tcount(int n) {
  if (n < 2) {
    throw std::domain_error("cost model needs operand width n >= 2");
  }
  return 42LL * n * n - 48LL * n + 48;
}

}  // namespace qarith
