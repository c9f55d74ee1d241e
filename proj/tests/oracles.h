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

// Independent reference checks for tests. Nothing here calls the library's
// solver, verifier or search code; only the plain data types are shared.

#ifndef URD_TESTS_ORACLES_H_
#define URD_TESTS_ORACLES_H_

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "urd/gf2.h"
#include "urd/model.h"

namespace urd::oracle {

// Exhaustive evaluation over all 2^n assignments (n <= 20). Returns the
// lexicographically smallest solution and the number of solutions.
struct BruteForceResult {
  std::optional<std::vector<std::uint8_t>> first;
  std::int64_t count = 0;
};
BruteForceResult BruteForceGf2(const Gf2System& sys);

bool RowsHold(const Gf2System& sys, const std::vector<std::uint8_t>& bits);

// Random rows with supports of size 1..n_vars and random right-hand sides.
Gf2System RandomGf2System(std::mt19937_64& rng, int n_vars, int n_rows);

std::vector<int> RandomPermutation(int v, std::mt19937_64& rng);

// Edge multiset read straight from the vertex tuples.
using EdgeCount = std::map<std::pair<int, int>, int>;
EdgeCount CountEdges(const std::vector<ParallelClass>& classes);

// "" when `c` is a spanning class of `kind` blocks on v vertices, else a
// reason.
std::string CheckClass(const ParallelClass& c, int v, BlockKind kind);

// "" when every class is spanning and every edge of K_v is used once.
std::string CheckDecomposition(const Decomposition& d);

// Class-kind counts in the family's order.
std::vector<int> CountKinds(const Decomposition& d, const std::vector<BlockKind>& kinds);

// Tuples read directly off the family's necessary conditions, by nested
// loops over every non-negative vector.
std::vector<std::vector<int>> AdmissibleByDefinition(Family family, int v, bool complex_only);

// Random backtracking for `count` pairwise edge-disjoint spanning classes of
// k-cycles on v vertices (k divides v).
std::optional<std::vector<ParallelClass>> RandomCycleClasses(int v, int k, int count,
                                                             std::mt19937_64& rng);

}  // namespace urd::oracle

#endif  // URD_TESTS_ORACLES_H_
