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

#ifndef URD_SPECTRUM_H_
#define URD_SPECTRUM_H_

// Admissible class-count vectors for the three families and constructive
// pipelines producing a witness decomposition for each of them:
//
//   k2p3k3: 3m + 4p + 6t = 3v - 3, v % 6 == 0
//   k2p4c4: 2m + 3p + 4c = 2v - 2, v % 4 == 0, p even, p % 4 == 2 => m even
//   p4c4:   3p + 4c = 2v - 2,      v % 4 == 0 (forces p = 2 + 4x)

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urd/model.h"
#include "urd/search_budget.h"

namespace urd {

struct AdmissibleSet {
  int v = 0;
  Family family = Family::kRaw;
  std::vector<std::vector<int>> tuples;  // lexicographically descending
  bool complex_only = true;
  std::string diagnostic;  // why the set is empty, if it is
};

AdmissibleSet AdmissibleK2P3K3(int v, bool complex_only = true);
AdmissibleSet AdmissibleK2P4C4(int v, bool complex_only = true);
AdmissibleSet AdmissibleP4C4(int v);
AdmissibleSet Admissible(Family family, int v, bool complex_only = true);

// Tuples that satisfy the arithmetic but are known not to exist.
bool KnownNonexistent(Family family, int v, const std::vector<int>& counts);

// Each pipeline throws kKnownNonexistent / kInadmissible for impossible
// requests, kTimeout when an inner search runs out of budget, and verifies
// its output before returning it.
Decomposition ConstructK2P3K3(int v, int m, int p, int t,
                              const SearchBudget& budget = {});
Decomposition ConstructK2P4C4(int v, int m, int p, int c);
Decomposition ConstructP4C4(int v, int p, int c);
Decomposition Construct(int v, const Profile& profile,
                        const SearchBudget& budget = {});

// Alternate edges of every 4-cycle: two perfect matchings.
std::array<ParallelClass, 2> SplitC4Class(const ParallelClass& c);

// ---- Exhaustive oracle --------------------------------------------------

enum class Feasibility { kFeasible, kInfeasible, kUnknown };

struct ExhaustiveRow {
  std::vector<int> counts;
  Feasibility feasibility = Feasibility::kUnknown;
  std::optional<Decomposition> witness;
  std::int64_t nodes = 0;
};

struct ExhaustiveSpectrum {
  int v = 0;
  Family family = Family::kRaw;
  std::vector<ExhaustiveRow> rows;  // every tuple satisfying the equation
  bool partial = false;             // some row is kUnknown

  std::vector<std::vector<int>> Feasible() const;
};

// Whole-class exact cover of E(K_v): the lowest uncovered edge is covered by
// a factor of a kind with remaining count. Isomorph rejection at the root
// uses one representative per orbit of the stabiliser of edge {0,1}.
// Supports 2 <= v <= 16. The budget applies to each tuple.
ExhaustiveRow DecideProfileExhaustively(int v, Family family,
                                        const std::vector<int>& counts,
                                        const SearchBudget& budget);

// Rows are searched in parallel (OpenMP) unless `parallel` is false; the
// result does not depend on the schedule.
ExhaustiveSpectrum ExhaustiveSpectrumSearch(int v, Family family,
                                            const SearchBudget& budget,
                                            bool parallel = true);

// Nonnegative solutions of the family's equation, lexicographically
// descending; no other conditions applied.
std::vector<std::vector<int>> EquationSolutions(Family family, int v);

}  // namespace urd

#endif  // URD_SPECTRUM_H_
