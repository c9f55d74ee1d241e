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

#ifndef URD_SEARCH_BUDGET_H_
#define URD_SEARCH_BUDGET_H_

#include <chrono>
#include <cstdint>

#include "urd/exact_cover.h"

namespace urd {

struct SearchBudget {
  double time_limit_s = 60.0;
  std::int64_t node_limit = -1;  // negative: unlimited
  std::uint64_t seed = 1;

  std::chrono::steady_clock::time_point Deadline() const {
    return std::chrono::steady_clock::now() +
           std::chrono::duration_cast<std::chrono::steady_clock::duration>(
               std::chrono::duration<double>(time_limit_s));
  }
  SearchLimits Limits() const { return SearchLimits{node_limit, Deadline()}; }
};

}  // namespace urd

#endif  // URD_SEARCH_BUDGET_H_
