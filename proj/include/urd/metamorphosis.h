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

#ifndef URD_METAMORPHOSIS_H_
#define URD_METAMORPHOSIS_H_

// Reassembling the edges of given parallel classes into parallel classes of
// another kind.
//
// The 4-cycle transformations select one edge per cycle through a GF(2)
// system: every cycle contributes a C-equation (its four edge variables sum
// to 1), and either every vertex (V-equation, two C4 classes) or every
// matching edge (M-equation, matching + C4 class) contributes one more
// equation of the same form. Complementing whole cycles turns any solution
// into a basic one with exactly one selected edge per cycle; the selected
// edges then form a perfect matching, respectively pair up the matching
// edges into 4-paths.
//
// The triangle case and the general k-cycle probe have no such system and
// are solved by exact cover over k-vertex paths of the union graph.

#include <array>
#include <cstdint>
#include <vector>

#include "urd/exact_cover.h"
#include "urd/gf2.h"
#include "urd/model.h"
#include "urd/search_budget.h"

namespace urd {

enum class MetaMode { kTwoC4, kMatchingC4, kThreeC4, kTwoK3, kCycleK };

struct MetaInput {
  int v = 0;
  std::vector<ParallelClass> classes;
  MetaMode mode = MetaMode::kTwoC4;
  int k = 4;  // cycle length, only read for kCycleK
};

struct MetaSystem {
  Gf2System system;
  std::vector<Edge> var_edges;  // variable index -> edge, a bijection
  int num_c_rows = 0;           // C-equations come first
  int num_other_rows = 0;       // then V- or M-equations
};

// Throws kPrecondition unless `inp` satisfies its mode's hypotheses (kinds,
// counts, spanning classes, pairwise edge-disjointness, divisibility).
void CheckMetaInput(const MetaInput& inp);

// TwoC4 and MatchingC4 only.
MetaSystem BuildSystem(const MetaInput& inp);

struct TwoC4Result {
  ParallelClass paths_a;  // cycles of `a` minus their selected edge
  ParallelClass paths_b;
  ParallelClass matching;
};

TwoC4Result MetaTwoC4(int v, const ParallelClass& a, const ParallelClass& b);

// [0] = selected cycle edges joined with the matching, [1] = the cycles
// with the selected edges removed.
std::array<ParallelClass, 2> MetaMatchingC4(int v, const ParallelClass& f,
                                            const ParallelClass& a);

std::array<ParallelClass, 4> MetaThreeC4(int v, const ParallelClass& a,
                                         const ParallelClass& b,
                                         const ParallelClass& c);

// Throws kTimeout when the budget runs out and kInternal if the search is
// exhausted without a solution.
std::array<ParallelClass, 3> MetaTwoK3(int v, const ParallelClass& a,
                                       const ParallelClass& b,
                                       const SearchBudget& budget = {});

struct ConjectureOutcome {
  // kFound: `classes` holds k path classes. kExhausted: no decomposition
  // exists for this input (a counterexample). kBudgetExceeded: inconclusive.
  SearchStatus status = SearchStatus::kBudgetExceeded;
  std::vector<ParallelClass> classes;
  std::int64_t nodes = 0;
};

ConjectureOutcome MetaCyclesConjecture(int v, int k,
                                       const std::vector<ParallelClass>& classes,
                                       const SearchBudget& budget = {});

// Exact-cover core shared by MetaTwoK3 and the probe: splits the edge set
// `edges` (a union of spanning classes) into `num_classes` spanning classes
// of k-vertex paths.
ConjectureOutcome DecomposeIntoPathClasses(int v, int k,
                                           const std::vector<Edge>& edges,
                                           int num_classes,
                                           const SearchBudget& budget);

// The path left by deleting edge `removed` from cycle block `cycle`.
Block CycleMinusEdge(const Block& cycle, Edge removed);

}  // namespace urd

#endif  // URD_METAMORPHOSIS_H_
