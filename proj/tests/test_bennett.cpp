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

#include "qarith/bennett.hpp"
#include "qarith/clifford_t.hpp"
#include "qarith/multiplier.hpp"
#include "qarith/simulate.hpp"
#include "test_helpers.hpp"

using namespace qarith;

namespace {

long long expanded_tcount(const Circuit& c) {
  const Circuit e = expand_toffolis(c);
  return static_cast<long long>(e.count(GateKind::T) + e.count(GateKind::Tdg));
}

}  // namespace

TEST_CASE("wrapping an empty circuit is just the copy", "[bennett]") {
  const Circuit source(1, RegisterMap{{"r", {0}}});
  const Circuit wrapped = bennett_wrap(source, "r");
  CHECK(wrapped.width() == 2);
  REQUIRE(wrapped.gates() == std::vector<Gate>{Gate::cnot(0, 1)});
  const BasisState out = run_reversible(wrapped, BasisState::from_string("10"));
  CHECK(out.to_string() == "11");  // copy picked up the input bit
}

TEST_CASE("wrap validates its register names", "[bennett]") {
  const Circuit source = build_multiplier(2);
  REQUIRE_THROWS_AS(bennett_wrap(source, "nope"), CircuitError);
  REQUIRE_THROWS_AS(bennett_wrap(source, "p", "a"), CircuitError);
  REQUIRE_NOTHROW(bennett_wrap(source, "p", "copy"));
}

TEST_CASE("wrapping the n=2 multiplier doubles T and adds 2n+1 wires",
          "[bennett]") {
  const Circuit source = build_multiplier(2);
  const Circuit wrapped = bennett_wrap(source, "p");
  CHECK(wrapped.width() == source.width() + 5);
  CHECK(expanded_tcount(source) == 70);
  CHECK(expanded_tcount(wrapped) == 140);

  const RegisterMap& regs = wrapped.registers();
  for (std::uint64_t a = 0; a < 4; ++a) {
    for (std::uint64_t b = 0; b < 4; ++b) {
      BasisState in(wrapped.width());
      write_register(in, regs.at("a"), a);
      write_register(in, regs.at("b"), b);
      const BasisState out = run_reversible(wrapped, in);
      for (std::size_t w = 0; w < source.width(); ++w) {
        REQUIRE(out.bit(w) == in.bit(w));  // every source wire restored
      }
      REQUIRE(read_register(out, regs.at("y")) == a * b);
    }
  }
}

TEST_CASE("wrap restores arbitrary sources on arbitrary inputs", "[bennett]") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 8; ++trial) {
    Circuit source = testing::random_circuit(rng, 5, 25, true);
    const std::string result_register =
        source.registers().entries().begin()->first;
    const Circuit wrapped = bennett_wrap(source, result_register);
    const std::vector<Wire>& result = source.registers().at(result_register);

    for (int input = 0; input < 16; ++input) {
      const std::uint64_t idx = rng() & ((1ull << source.width()) - 1);
      BasisState in(wrapped.width());
      for (std::size_t w = 0; w < source.width(); ++w) {
        in.set_bit(w, ((idx >> w) & 1u) != 0);
      }
      const BasisState out = run_reversible(wrapped, in);
      for (std::size_t w = 0; w < source.width(); ++w) {
        REQUIRE(out.bit(w) == in.bit(w));
      }
      // the copy holds the result register's value after the forward pass
      const BasisState forward =
          run_reversible(source, BasisState::from_index(source.width(), idx));
      REQUIRE(read_register(out, wrapped.registers().at("y")) ==
              read_register(forward, result));
    }
  }
}

TEST_CASE("wrap doubles the expanded T-count of any source", "[bennett]") {
  std::mt19937_64 rng(62);
  for (int trial = 0; trial < 6; ++trial) {
    const Circuit source = testing::random_circuit(rng, 5, 30, false);
    const std::string result_register =
        source.registers().entries().begin()->first;
    const Circuit wrapped = bennett_wrap(source, result_register);
    CHECK(expanded_tcount(wrapped) == 2 * expanded_tcount(source));
    CHECK(wrapped.width() ==
          source.width() + source.registers().at(result_register).size());
  }
}

TEST_CASE("baseline garbageless cost curve", "[bennett]") {
  CHECK(babu_garbageless_tcount(4) == 528);
  CHECK(babu_garbageless_tcount(16) == 10032);
  CHECK(babu_garbageless_tcount(2048) == 176062512);
  REQUIRE_THROWS_AS(babu_garbageless_tcount(1), std::domain_error);
}
