// Copyright 2026 The URD Toolkit Authors.
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

#ifndef URD_GF2_H_
#define URD_GF2_H_

// Dense linear systems over GF(2).
//
// Gf2Solve is the production kernel: rows are bit-packed into 64-bit words
// and the elimination sweep for each pivot runs row-parallel under OpenMP.
// Gf2SolveReference is a byte-per-entry serial elimination kept as the
// reference; both use the same pivot rule (lowest column, first available
// row, free variables set to 0) and therefore return identical solutions.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace urd {

struct Gf2Row {
  std::vector<int> support;  // distinct variable indices
  bool rhs = false;
};

struct Gf2System {
  int n_vars = 0;
  std::vector<Gf2Row> rows;
  // Pairwise disjoint variable sets; each marks the support of a C-equation.
  std::vector<std::vector<int>> c_blocks;
};

struct Gf2Solution {
  std::vector<std::uint8_t> bits;
  bool basic = false;
};

// Throws kInvalidParameters when a support index is out of range or repeated,
// or when c_blocks overlap.
void ValidateSystem(const Gf2System& sys);

bool Satisfies(const Gf2System& sys, std::span<const std::uint8_t> bits);

// nullopt means the system is inconsistent.
std::optional<Gf2Solution> Gf2Solve(const Gf2System& sys);
std::optional<Gf2Solution> Gf2SolveReference(const Gf2System& sys);

// True when `row` is a consequence of the (consistent) system.
bool RowImplied(const Gf2System& sys, const Gf2Row& row);

// Complements whole c_blocks so each holds exactly one 1.
// Throws kNotASolution if `sol` does not satisfy `sys`, and
// kNormalizationImpossible if some block cannot reach a single 1 by one
// complement or the complemented vector stops satisfying the system.
Gf2Solution NormalizeToBasic(const Gf2System& sys, const Gf2Solution& sol);

}  // namespace urd

#endif  // URD_GF2_H_
