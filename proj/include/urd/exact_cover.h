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

#ifndef URD_EXACT_COVER_H_
#define URD_EXACT_COVER_H_

// Exact cover by Algorithm X on dancing links, with secondary items
// (covered at most once) and minimum-remaining-values branching. The search
// order depends only on the insertion order of options, so results are
// reproducible for a fixed model.

#include <chrono>
#include <cstdint>
#include <span>
#include <vector>

namespace urd {

enum class SearchStatus { kFound, kExhausted, kBudgetExceeded };

struct SearchLimits {
  std::int64_t node_limit = -1;  // negative: unlimited
  std::chrono::steady_clock::time_point deadline =
      std::chrono::steady_clock::time_point::max();
};

class ExactCover {
 public:
  ExactCover(int num_primary, int num_secondary);

  // Items [0, num_primary) are primary, the rest secondary. Returns the
  // option id (its insertion index).
  int AddOption(std::span<const int> items);

  // On kFound, `solution` holds the chosen option ids in selection order.
  // Single-shot: a found cover leaves the links in the solved state.
  SearchStatus Solve(const SearchLimits& limits, std::vector<int>* solution);

  std::int64_t nodes() const { return nodes_; }
  int num_options() const { return num_options_; }

 private:
  void Cover(int c);
  void Uncover(int c);
  // Returns true on a complete cover; sets budget_hit_ on limits.
  bool Search(std::vector<int>* chosen);

  int num_items_;
  int num_options_ = 0;
  std::vector<int> left_, right_, up_, down_, column_, option_, size_;
  SearchLimits limits_;
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace urd

#endif  // URD_EXACT_COVER_H_
