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

// Published comparison-table values, frozen as golden test data. Improvement
// percentages are stored in hundredths.

#pragma once

#include <array>

namespace qarith::testing {

struct AdderTableRow {
  long long n, lin, jayashree, proposed;
  long long impr_lin, impr_jayashree;
};

inline constexpr std::array<AdderTableRow, 10> adder_tcount_table = {{
    {4, 224, 119, 98, 5625, 1765},
    {8, 448, 231, 182, 5938, 2121},
    {16, 896, 455, 350, 6094, 2308},
    {32, 1792, 903, 686, 6172, 2403},
    {64, 3584, 1799, 1358, 6211, 2451},
    {128, 7168, 3591, 2702, 6230, 2476},
    {256, 14336, 7175, 5390, 6240, 2488},
    {512, 28672, 14343, 10766, 6245, 2494},
    {1024, 57344, 28679, 21518, 6248, 2497},
    {2048, 114688, 57351, 43022, 6249, 2498},
}};
inline constexpr std::array<long long, 2> adder_tcount_averages = {6125, 2350};

struct MultTableRow {
  long long n, lin, jayashree, babu, proposed;
  long long impr_lin, impr_jayashree, impr_babu;
};

inline constexpr std::array<MultTableRow, 10> mult_tcount_table = {{
    {4, 896, 476, 528, 322, 6406, 3235, 3902},
    {8, 3584, 1848, 2352, 1330, 6289, 2803, 4345},
    {16, 14336, 7280, 10032, 5362, 6260, 2635, 4655},
    {32, 57344, 28896, 41520, 21490, 6252, 2563, 4824},
    {64, 229376, 115136, 169008, 86002, 6251, 2530, 4911},
    {128, 917504, 459648, 682032, 344050, 6250, 2515, 4956},
    {256, 3670016, 1836800, 2740272, 1376242, 6250, 2507, 4978},
    {512, 14680064, 7343616, 10985520, 5505010, 6250, 2504, 4989},
    {1024, 58720256, 29367296, 43991088, 22020082, 6250, 2502, 4994},
    {2048, 234881024, 117454848, 176062512, 88080370, 6250, 2501, 4997},
}};
inline constexpr std::array<long long, 3> mult_tcount_averages = {6271, 2630,
                                                                  4755};

struct NarrowTableRow {
  long long n, babu, proposed;
  long long impr;
};

inline constexpr std::array<NarrowTableRow, 6> ancillae_table = {{
    {4, 18, 9, 5000},
    {8, 57, 17, 7018},
    {16, 178, 33, 8146},
    {32, 608, 65, 8931},
    {64, 2210, 129, 9416},
    {128, 8368, 257, 9693},
}};
inline constexpr long long ancillae_average = 8034;

inline constexpr std::array<NarrowTableRow, 6> qubits_table = {{
    {4, 42, 17, 5952},
    {8, 90, 33, 6333},
    {16, 243, 65, 7325},
    {32, 737, 129, 8250},
    {64, 2467, 257, 8958},
    {128, 8881, 513, 9422},
}};
inline constexpr long long qubits_average = 7707;

}  // namespace qarith::testing
