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

#ifndef URD_CONSTRUCTIONS_H_
#define URD_CONSTRUCTIONS_H_

// Ground-truth building blocks: round-robin 1-factorizations, the C4
// blow-up of a 1-factorization of K_{v/2}, searched matching/triangle
// systems, and a small catalog of explicit designs.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urd/exact_cover.h"
#include "urd/model.h"
#include "urd/search_budget.h"

namespace urd {

// Circle method: vertex v-1 is fixed, 0..v-2 rotate. Class r pairs v-1 with
// r and (r+i, r-i) mod (v-1).
std::vector<ParallelClass> OneFactorization(int v);

struct BlowUp {
  std::vector<ParallelClass> cycles;  // v/2 - 1 C4 classes
  ParallelClass matching;             // {2a, 2a+1}
};

// Each edge {a, b} of a 1-factorization of K_{v/2} becomes the 4-cycle
// (2a, 2b, 2a+1, 2b+1).
BlowUp C4Blowup(int v);

struct ReesSystem {
  std::vector<ParallelClass> matchings;
  std::vector<ParallelClass> triangles;
};

struct ReesResult {
  SearchStatus status = SearchStatus::kBudgetExceeded;
  std::optional<ReesSystem> system;
  std::int64_t nodes = 0;
  int restarts = 0;  // search attempts made
};

// m perfect matchings plus (v-1-m)/2 triangle classes decomposing K_v.
// Throws kInvalidParameters unless v % 6 == 0, m odd, 1 <= m <= v-1, and
// kKnownNonexistent for (6, 1) and (12, 1). Results are cached per
// (v, m, seed). Restarts rotate between models restricted to systems
// invariant under x -> x + v/n for n = 3, 4, 2 and an unrestricted model.
ReesResult ReesSearch(int v, int m, const SearchBudget& budget = {});

struct CatalogEntry {
  int v = 0;
  Profile profile;
  Decomposition decomposition;
  std::string source;
};

const std::vector<CatalogEntry>& Catalog();
std::optional<Decomposition> CatalogLookup(int v, const Profile& profile);

}  // namespace urd

#endif  // URD_CONSTRUCTIONS_H_
