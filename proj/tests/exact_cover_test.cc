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

#include "urd/exact_cover.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

namespace urd {
namespace {

TEST(ExactCoverTest, SmallTextbookInstance) {
  // Items a..g = 0..6; the unique cover is {a,d,f}, {b,g}, {c,e}.
  ExactCover ec(7, 0);
  const std::vector<std::vector<int>> opts = {{2, 4}, {0, 3, 6}, {1, 2, 5}, {0, 3, 5}, {1, 6}, {3, 4, 6}};
  for (const auto& o : opts) ec.AddOption(o);
  std::vector<int> sol;
  ASSERT_EQ(ec.Solve({}, &sol), SearchStatus::kFound);
  std::sort(sol.begin(), sol.end());
  EXPECT_EQ(sol, (std::vector<int>{0, 3, 4}));
}

TEST(ExactCoverTest, Unsolvable) {
  ExactCover ec(3, 0);
  ec.AddOption(std::vector<int>{0, 1});
  ec.AddOption(std::vector<int>{1, 2});
  std::vector<int> sol;
  EXPECT_EQ(ec.Solve({}, &sol), SearchStatus::kExhausted);
}

TEST(ExactCoverTest, SecondaryItemsAtMostOnce) {
  // Primary 0,1; secondary 2. Options {0,2} and {1,2} clash on 2.
  ExactCover ec(2, 1);
  ec.AddOption(std::vector<int>{0, 2});
  ec.AddOption(std::vector<int>{1, 2});
  ec.AddOption(std::vector<int>{1});
  std::vector<int> sol;
  ASSERT_EQ(ec.Solve({}, &sol), SearchStatus::kFound);
  std::sort(sol.begin(), sol.end());
  EXPECT_EQ(sol, (std::vector<int>{0, 2}));
}

TEST(ExactCoverTest, SecondaryMayStayUncovered) {
  ExactCover ec(1, 2);
  ec.AddOption(std::vector<int>{0});
  std::vector<int> sol;
  EXPECT_EQ(ec.Solve({}, &sol), SearchStatus::kFound);
}

TEST(ExactCoverTest, NodeLimit) {
  // Pairs cannot cover 13 items; refuting that takes far more than 5 nodes.
  ExactCover ec(13, 0);
  for (int i = 0; i < 13; ++i)
    for (int j = i + 1; j < 13; ++j) ec.AddOption(std::vector<int>{i, j});
  std::vector<int> sol;
  EXPECT_EQ(ec.Solve({5, std::chrono::steady_clock::time_point::max()}, &sol),
            SearchStatus::kBudgetExceeded);
}

TEST(ExactCoverTest, PastDeadline) {
  ExactCover ec(15, 0);
  for (int i = 0; i < 15; ++i)
    for (int j = i + 1; j < 15; ++j) ec.AddOption(std::vector<int>{i, j});
  std::vector<int> sol;
  EXPECT_EQ(ec.Solve({-1, std::chrono::steady_clock::now()}, &sol), SearchStatus::kBudgetExceeded);
}

TEST(ExactCoverTest, AgreesWithSubsetEnumeration) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int items = 3 + static_cast<int>(rng() % 5);
    const int n_opts = 3 + static_cast<int>(rng() % 9);
    std::vector<std::vector<int>> opts;
    for (int o = 0; o < n_opts; ++o) {
      std::vector<int> opt;
      for (int i = 0; i < items; ++i) {
        if (rng() % 3 == 0) opt.push_back(i);
      }
      if (opt.empty()) opt.push_back(static_cast<int>(rng() % items));
      opts.push_back(opt);
    }
    bool brute = false;
    for (int mask = 0; mask < (1 << n_opts) && !brute; ++mask) {
      std::vector<int> hit(items, 0);
      for (int o = 0; o < n_opts; ++o) {
        if (mask >> o & 1) {
          for (int i : opts[o]) ++hit[i];
        }
      }
      brute = std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; });
    }
    ExactCover ec(items, 0);
    for (const auto& o : opts) ec.AddOption(o);
    std::vector<int> sol;
    const SearchStatus st = ec.Solve({}, &sol);
    ASSERT_EQ(st == SearchStatus::kFound, brute) << "trial " << trial;
    if (st == SearchStatus::kFound) {
      std::vector<int> hit(items, 0);
      for (int o : sol) {
        for (int i : opts[o]) ++hit[i];
      }
      EXPECT_TRUE(std::all_of(hit.begin(), hit.end(), [](int h) { return h == 1; }));
    }
  }
}

}  // namespace
}  // namespace urd
