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

#include <catch2/catch_amalgamated.hpp>
#include <random>

#include "qarith/ctrl_add.hpp"
#include "qarith/simulate.hpp"

using namespace qarith;

namespace {

struct AdderRun {
  std::uint64_t b, a;
  bool ctrl, anc0, anc1;
};

AdderRun run_adder(const Circuit& circuit, bool ctrl, std::uint64_t a,
                   std::uint64_t b) {
  const RegisterMap& regs = circuit.registers();
  BasisState in(circuit.width());
  write_register(in, regs.at("ctrl"), ctrl ? 1 : 0);
  write_register(in, regs.at("a"), a);
  write_register(in, regs.at("b"), b);
  const BasisState out = run_reversible(circuit, in);
  return {read_register(out, regs.at("b")), read_register(out, regs.at("a")),
          out.bit(regs.at("ctrl")[0]), out.bit(regs.at("anc")[0]),
          out.bit(regs.at("anc")[1])};
}

}  // namespace

TEST_CASE("oracle carries start at zero and follow the majority recurrence",
          "[ctrl_add]") {
  const CtrlAddOracle oracle(4, true, 0b1011, 0b0110);
  CHECK_FALSE(oracle.carry(0));
  for (int i = 1; i <= 4; ++i) {
    const bool ai = (0b1011u >> (i - 1)) & 1u;
    const bool bi = (0b0110u >> (i - 1)) & 1u;
    const bool ci = oracle.carry(i - 1);
    const bool majority = ((ai && bi) != (bi && ci)) != (ai && ci);
    CHECK(oracle.carry(i) == majority);
  }
  REQUIRE_THROWS_AS(oracle.carry(5), std::out_of_range);
  REQUIRE_THROWS_AS(oracle.sum(-1), std::out_of_range);
}

TEST_CASE("oracle sums equal integer addition when ctrl is set", "[ctrl_add]") {
  for (int n : {1, 2, 3, 4}) {
    const std::uint64_t size = 1ull << n;
    for (std::uint64_t a = 0; a < size; ++a) {
      for (std::uint64_t b = 0; b < size; ++b) {
        CHECK(CtrlAddOracle(n, true, a, b).sum_bits() == a + b);
        const CtrlAddOracle pass(n, false, a, b);
        CHECK(pass.sum_bits() == b);
        CHECK_FALSE(pass.sum(n));
      }
    }
  }
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 59);
    const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
    const std::uint64_t a = rng() & mask;
    const std::uint64_t b = rng() & mask;
    REQUIRE(CtrlAddOracle(n, true, a, b).sum_bits() == a + b);
  }
}

TEST_CASE("oracle validates its domain", "[ctrl_add]") {
  REQUIRE_THROWS_AS(CtrlAddOracle(0, true, 0, 0), std::domain_error);
  REQUIRE_THROWS_AS(CtrlAddOracle(64, true, 0, 0), std::domain_error);
  REQUIRE_THROWS_AS(CtrlAddOracle(3, true, 8, 0), std::invalid_argument);
}

TEST_CASE("builder rejects widths below two", "[ctrl_add]") {
  REQUIRE_THROWS_AS(build_ctrl_add(1), std::domain_error);
  REQUIRE_THROWS_AS(build_ctrl_add(0), std::domain_error);
  REQUIRE_THROWS_AS(build_ctrl_add(-3), std::domain_error);
  REQUIRE_THROWS_AS(ctrl_add_tcount(1), std::domain_error);
}

TEST_CASE("builder frame: interleaved wires and two ancillae", "[ctrl_add]") {
  const Circuit adder = build_ctrl_add(4);
  CHECK(adder.width() == 11);
  CHECK(adder.registers().at("ctrl") == std::vector<Wire>{0});
  CHECK(adder.registers().at("b") == std::vector<Wire>{1, 3, 5, 7});
  CHECK(adder.registers().at("a") == std::vector<Wire>{2, 4, 6, 8});
  CHECK(adder.registers().at("anc") == std::vector<Wire>{9, 10});
  for (const Gate& g : adder.gates()) {
    CHECK((g.kind() == GateKind::Cnot || g.kind() == GateKind::Toffoli));
  }
}

TEST_CASE("builder gate census is 3n+2 Toffolis and 4n-6 CNOTs", "[ctrl_add]") {
  for (int n = 2; n <= 64; ++n) {
    const Circuit adder = build_ctrl_add(n);
    CHECK(adder.count(GateKind::Toffoli) == static_cast<std::size_t>(3 * n + 2));
    CHECK(adder.count(GateKind::Cnot) == static_cast<std::size_t>(4 * n - 6));
    CHECK(adder.width() == static_cast<std::size_t>(2 * n + 3));
  }
}

TEST_CASE("emission order is frozen for n=2", "[ctrl_add]") {
  const std::vector<Gate> expected = {
      Gate::cnot(4, 3),          Gate::toffoli(0, 4, 5),
      Gate::toffoli(1, 2, 4),    Gate::toffoli(3, 4, 6),
      Gate::toffoli(0, 6, 5),    Gate::toffoli(3, 4, 6),
      Gate::toffoli(0, 4, 3),    Gate::toffoli(1, 2, 4),
      Gate::toffoli(0, 2, 1),    Gate::cnot(4, 3),
  };
  CHECK(build_ctrl_add(2).gates() == expected);
}

TEST_CASE("conditional addition on the documented examples", "[ctrl_add]") {
  const Circuit adder = build_ctrl_add(4);

  const AdderRun sum = run_adder(adder, true, 7, 9);
  CHECK(sum.b == 0);  // 7 + 9 = 16: four zero sum bits, carry-out on anc0
  CHECK(sum.anc0);
  CHECK_FALSE(sum.anc1);
  CHECK(sum.a == 7);
  CHECK(sum.ctrl);

  const AdderRun pass = run_adder(adder, false, 13, 6);
  CHECK(pass.b == 6);
  CHECK_FALSE(pass.anc0);
  CHECK_FALSE(pass.anc1);
  CHECK(pass.a == 13);
  CHECK_FALSE(pass.ctrl);
}

TEST_CASE("exhaustive oracle agreement at n=3", "[ctrl_add]") {
  const int n = 3;
  const Circuit adder = build_ctrl_add(n);
  for (int ctrl = 0; ctrl <= 1; ++ctrl) {
    for (std::uint64_t a = 0; a < 8; ++a) {
      for (std::uint64_t b = 0; b < 8; ++b) {
        const CtrlAddOracle oracle(n, ctrl != 0, a, b);
        const AdderRun got = run_adder(adder, ctrl != 0, a, b);
        REQUIRE(got.b == (oracle.sum_bits() & 7u));
        REQUIRE(got.a == a);
        REQUIRE(got.ctrl == (ctrl != 0));
        REQUIRE(got.anc0 == oracle.sum(n));
        REQUIRE_FALSE(got.anc1);
      }
    }
  }
}

TEST_CASE("the whole wire set stays a permutation, dirty ancillae included",
          "[ctrl_add]") {
  for (int n : {2, 3, 4, 5}) {
    const std::vector<std::uint64_t> table = truth_table(build_ctrl_add(n));
    std::vector<std::uint64_t> sorted = table;
    std::sort(sorted.begin(), sorted.end());
    for (std::uint64_t x = 0; x < sorted.size(); ++x) REQUIRE(sorted[x] == x);
  }
}

TEST_CASE("closed-form T-count values", "[ctrl_add]") {
  CHECK(ctrl_add_tcount(4) == 98);
  CHECK(ctrl_add_tcount(8) == 182);
  CHECK(ctrl_add_tcount(2048) == 43022);
}
