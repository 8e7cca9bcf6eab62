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
#include <cstdlib>

#include "qarith/bennett.hpp"
#include "qarith/clifford_t.hpp"
#include "qarith/ctrl_add.hpp"
#include "qarith/multiplier.hpp"

namespace qarith {

/// Per-kind gate census plus the T metrics the cost tables use.
struct ResourceReport {
  std::size_t width = 0;
  std::array<long long, all_gate_kinds.size()> counts{};
  long long t_count = 0;
  long long toffoli_count_pre_expansion = 0;
  long long ancillae = 0;
  long long garbage = 0;

  long long count(GateKind kind) const {
    return counts[static_cast<std::size_t>(kind)];
  }
};

inline ResourceReport report(const Circuit& circuit) {
  ResourceReport r;
  r.width = circuit.width();
  for (const Gate& g : circuit.gates()) {
    ++r.counts[static_cast<std::size_t>(g.kind())];
  }
  r.t_count = r.count(GateKind::T) + r.count(GateKind::Tdg);
  r.toffoli_count_pre_expansion = r.count(GateKind::Toffoli);
  return r;
}

/// Census with the ancilla tally taken from the named zero-initialized
/// registers; every builder in this library produces zero garbage wires.
inline ResourceReport report(const Circuit& circuit,
                             std::span<const std::string> ancilla_registers) {
  ResourceReport r = report(circuit);
  for (const std::string& name : ancilla_registers) {
    r.ancillae += static_cast<long long>(circuit.registers().at(name).size());
  }
  return r;
}

/// 100 * (baseline - proposed) / baseline, unrounded.
inline double improvement_pct(long long baseline, long long proposed) {
  if (baseline <= 0) throw std::domain_error("baseline must be positive");
  return 100.0 * static_cast<double>(baseline - proposed) /
         static_cast<double>(baseline);
}

/// The same ratio rounded half-up to hundredths of a percent, computed
/// exactly in integer arithmetic so table cells never ride a float boundary.
inline long long improvement_hundredths(long long baseline,
                                        long long proposed) {
  if (baseline <= 0) throw std::domain_error("baseline must be positive");
  const long long diff = baseline - proposed;
  const long long sign = diff < 0 ? -1 : 1;
  const long long magnitude = diff < 0 ? -diff : diff;
  return sign * ((20000 * magnitude + baseline) / (2 * baseline));
}

enum class Design {
  ProposedAdder,
  LinAdder,
  JayashreeAdder,
  ProposedMult,
  LinMult,
  JayashreeMult,
  BabuGarbagelessMult,
};

/// Closed-form cost curves of the compared designs as functions of the
/// operand width. The Babu baseline has no published closed form for qubits
/// or ancillae, so those throw.
struct CostModel {
  Design design;

  long long t_count(int n) const {
    check_width(n);
    const long long m = n;
    switch (design) {
      case Design::ProposedAdder:
        return 21 * m + 14;
      case Design::LinAdder:
        return 56 * m;
      case Design::JayashreeAdder:
        return 28 * m + 7;
      case Design::ProposedMult:
        return 21 * m * m - 14;
      case Design::LinMult:
        return 56 * m * m;
      case Design::JayashreeMult:
        return 28 * m * m + 7 * m;
      case Design::BabuGarbagelessMult:
        return babu_garbageless_tcount(n);
    }
    throw std::logic_error("unreachable");
  }

  long long qubits(int n) const {
    check_width(n);
    const long long m = n;
    switch (design) {
      case Design::ProposedAdder:
      case Design::LinAdder:
      case Design::JayashreeAdder:
        return 2 * m + 1;  // data qubits; the two ancillae are tallied apart
      case Design::LinMult:
        return 5 * m + 1;
      case Design::JayashreeMult:
      case Design::ProposedMult:
        return 4 * m + 1;
      case Design::BabuGarbagelessMult:
        throw std::domain_error("no closed-form qubit count for this design");
    }
    throw std::logic_error("unreachable");
  }

  long long ancillae(int n) const {
    check_width(n);
    const long long m = n;
    switch (design) {
      case Design::ProposedAdder:
      case Design::LinAdder:
      case Design::JayashreeAdder:
        return 2;
      case Design::LinMult:
        return 3 * m + 1;
      case Design::JayashreeMult:
      case Design::ProposedMult:
        return 2 * m + 1;
      case Design::BabuGarbagelessMult:
        throw std::domain_error("no closed-form ancilla count for this design");
    }
    throw std::logic_error("unreachable");
  }

 private:
  static void check_width(int n) {
    if (n < 2) throw std::domain_error("cost model needs operand width n >= 2");
  }
};

inline CostModel cost_model(Design design) { return CostModel{design}; }

/// One comparison-table row: integer cells then improvement percentages in
/// hundredths (half-up).
struct TableRow {
  long long n = 0;
  std::vector<long long> counts;
  std::vector<long long> impr_hundredths;
};

struct Table {
  std::string id;
  std::vector<std::string> count_columns;
  std::vector<std::string> impr_columns;
  std::vector<TableRow> rows;
  std::vector<long long> average_hundredths;  // one per improvement column
};

/// "62.52"-style rendering of a hundredths value, always two decimals.
inline std::string format_hundredths(long long hundredths) {
  std::string out = hundredths < 0 ? "-" : "";
  const long long magnitude = hundredths < 0 ? -hundredths : hundredths;
  out += std::to_string(magnitude / 100);
  out += '.';
  const long long frac = magnitude % 100;
  if (frac < 10) out += '0';
  out += std::to_string(frac);
  return out;
}

namespace detail {

inline void cross_check_tcount(long long formula, const Circuit& built) {
  const long long counted = report(expand_toffolis(built)).t_count;
  if (counted != formula) {
    throw std::logic_error("cost formula disagrees with the counted T census");
  }
}

inline long long average_hundredths(const std::vector<double>& exact_pcts) {
  double sum = 0.0;
  for (double v : exact_pcts) sum += v;
  return std::llround(100.0 * sum / static_cast<double>(exact_pcts.size()));
}

}  // namespace detail

/// Regenerates comparison table II, V, VI or VII. T-count cells come from
/// the cost models; the proposed columns of II and V are additionally
/// cross-checked against counted circuits for every row with n <= 64. The
/// VI/VII baseline columns are published reference numbers with no closed
/// form. Averages are means of the exact (unrounded) percentages over the
/// listed rows.
inline Table reproduce_table(std::string_view id) {
  static const std::vector<int> wide_rows = {4,   8,   16,  32,   64,
                                             128, 256, 512, 1024, 2048};
  static const std::vector<int> narrow_rows = {4, 8, 16, 32, 64, 128};
  static constexpr std::array<long long, 6> babu_ancillae = {18,  57,   178,
                                                             608, 2210, 8368};
  static constexpr std::array<long long, 6> babu_qubits = {42,  90,   243,
                                                           737, 2467, 8881};

  Table table;
  table.id = std::string(id);

  if (id == "II") {
    table.count_columns = {"lin", "jayashree", "proposed"};
    table.impr_columns = {"impr_vs_lin", "impr_vs_jayashree"};
    std::vector<double> exact_lin, exact_jay;
    for (int n : wide_rows) {
      const long long lin = cost_model(Design::LinAdder).t_count(n);
      const long long jay = cost_model(Design::JayashreeAdder).t_count(n);
      const long long prop = cost_model(Design::ProposedAdder).t_count(n);
      if (n <= 64) detail::cross_check_tcount(prop, build_ctrl_add(n));
      table.rows.push_back({n,
                            {lin, jay, prop},
                            {improvement_hundredths(lin, prop),
                             improvement_hundredths(jay, prop)}});
      exact_lin.push_back(improvement_pct(lin, prop));
      exact_jay.push_back(improvement_pct(jay, prop));
    }
    table.average_hundredths = {detail::average_hundredths(exact_lin),
                                detail::average_hundredths(exact_jay)};
  } else if (id == "V") {
    table.count_columns = {"lin", "jayashree", "babu", "proposed"};
    table.impr_columns = {"impr_vs_lin", "impr_vs_jayashree", "impr_vs_babu"};
    std::vector<double> exact_lin, exact_jay, exact_babu;
    for (int n : wide_rows) {
      const long long lin = cost_model(Design::LinMult).t_count(n);
      const long long jay = cost_model(Design::JayashreeMult).t_count(n);
      const long long babu = cost_model(Design::BabuGarbagelessMult).t_count(n);
      const long long prop = cost_model(Design::ProposedMult).t_count(n);
      if (n <= 64) detail::cross_check_tcount(prop, build_multiplier(n));
      table.rows.push_back({n,
                            {lin, jay, babu, prop},
                            {improvement_hundredths(lin, prop),
                             improvement_hundredths(jay, prop),
                             improvement_hundredths(babu, prop)}});
      exact_lin.push_back(improvement_pct(lin, prop));
      exact_jay.push_back(improvement_pct(jay, prop));
      exact_babu.push_back(improvement_pct(babu, prop));
    }
    table.average_hundredths = {detail::average_hundredths(exact_lin),
                                detail::average_hundredths(exact_jay),
                                detail::average_hundredths(exact_babu)};
  } else if (id == "VI" || id == "VII") {
    table.count_columns = {"babu", "proposed"};
    table.impr_columns = {"impr_vs_babu"};
    std::vector<double> exact;
    for (std::size_t row = 0; row < narrow_rows.size(); ++row) {
      const int n = narrow_rows[row];
      const CostModel proposed = cost_model(Design::ProposedMult);
      const long long babu = (id == "VI") ? babu_ancillae[row] : babu_qubits[row];
      const long long prop =
          (id == "VI") ? proposed.ancillae(n) : proposed.qubits(n);
      table.rows.push_back(
          {n, {babu, prop}, {improvement_hundredths(babu, prop)}});
      exact.push_back(improvement_pct(babu, prop));
    }
    table.average_hundredths = {detail::average_hundredths(exact)};
  } else {
    throw std::invalid_argument("unknown table id '" + std::string(id) +
                                "' (expected II, V, VI or VII)");
  }
  return table;
}

/// Header row, comma separation, integers unquoted, percentages with exactly
/// two decimals; the final row carries the column averages.
inline std::string to_csv(const Table& table) {
  std::string out = "n";
  for (const std::string& c : table.count_columns) out += "," + c;
  for (const std::string& c : table.impr_columns) out += "," + c;
  out += '\n';
  for (const TableRow& row : table.rows) {
    out += std::to_string(row.n);
    for (long long v : row.counts) out += "," + std::to_string(v);
    for (long long h : row.impr_hundredths) out += "," + format_hundredths(h);
    out += '\n';
  }
  out += "average";
  for (std::size_t i = 0; i < table.count_columns.size(); ++i) out += ',';
  for (long long h : table.average_hundredths) {
    out += "," + format_hundredths(h);
  }
  out += '\n';
  return out;
}

}  // namespace qarith
