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

#include <algorithm>
#include <limits>

#include "urd/model.h"

namespace urd {

// Node 0 is the root, nodes 1..num_items are item headers, option nodes
// follow. Only primary headers are linked into the root list.
ExactCover::ExactCover(int num_primary, int num_secondary)
    : num_items_(num_primary + num_secondary) {
  if (num_primary < 0 || num_secondary < 0) {
    throw UrdError(ErrorCode::kInvalidParameters, "negative item count");
  }
  const int n = num_items_ + 1;
  left_.resize(n);
  right_.resize(n);
  up_.resize(n);
  down_.resize(n);
  column_.resize(n);
  option_.assign(n, -1);
  size_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    up_[i] = down_[i] = column_[i] = i;
    left_[i] = right_[i] = i;
  }
  int prev = 0;
  for (int i = 1; i <= num_primary; ++i) {
    left_[i] = prev;
    right_[prev] = i;
    prev = i;
  }
  right_[prev] = 0;
  left_[0] = prev;
}

int ExactCover::AddOption(std::span<const int> items) {
  if (items.empty()) {
    throw UrdError(ErrorCode::kInvalidParameters, "empty option");
  }
  const int id = num_options_++;
  int first = -1;
  for (int item : items) {
    if (item < 0 || item >= num_items_) {
      throw UrdError(ErrorCode::kInvalidParameters, "option item out of range");
    }
    const int c = item + 1;
    const int x = static_cast<int>(up_.size());
    up_.push_back(up_[c]);
    down_.push_back(c);
    down_[up_[c]] = x;
    up_[c] = x;
    column_.push_back(c);
    option_.push_back(id);
    size_.push_back(0);
    ++size_[c];
    if (first < 0) {
      first = x;
      left_.push_back(x);
      right_.push_back(x);
    } else {
      left_.push_back(left_[first]);
      right_.push_back(first);
      right_[left_[first]] = x;
      left_[first] = x;
    }
  }
  return id;
}

void ExactCover::Cover(int c) {
  right_[left_[c]] = right_[c];
  left_[right_[c]] = left_[c];
  for (int i = down_[c]; i != c; i = down_[i]) {
    for (int j = right_[i]; j != i; j = right_[j]) {
      down_[up_[j]] = down_[j];
      up_[down_[j]] = up_[j];
      --size_[column_[j]];
    }
  }
}

void ExactCover::Uncover(int c) {
  for (int i = up_[c]; i != c; i = up_[i]) {
    for (int j = left_[i]; j != i; j = left_[j]) {
      ++size_[column_[j]];
      down_[up_[j]] = j;
      up_[down_[j]] = j;
    }
  }
  right_[left_[c]] = c;
  left_[right_[c]] = c;
}

bool ExactCover::Search(std::vector<int>* chosen) {
  if (right_[0] == 0) return true;
  ++nodes_;
  if (limits_.node_limit >= 0 && nodes_ > limits_.node_limit) {
    budget_hit_ = true;
    return false;
  }
  if ((nodes_ & 1023) == 0 &&
      std::chrono::steady_clock::now() >= limits_.deadline) {
    budget_hit_ = true;
    return false;
  }
  int best = -1;
  int best_size = std::numeric_limits<int>::max();
  for (int c = right_[0]; c != 0; c = right_[c]) {
    if (size_[c] < best_size) {
      best = c;
      best_size = size_[c];
      if (best_size == 0) break;
    }
  }
  if (best_size == 0) return false;

  Cover(best);
  for (int r = down_[best]; r != best; r = down_[r]) {
    chosen->push_back(option_[r]);
    for (int j = right_[r]; j != r; j = right_[j]) Cover(column_[j]);
    const bool done = Search(chosen);
    if (done) return true;
    for (int j = left_[r]; j != r; j = left_[j]) Uncover(column_[j]);
    chosen->pop_back();
    if (budget_hit_) break;
  }
  Uncover(best);
  return false;
}

SearchStatus ExactCover::Solve(const SearchLimits& limits,
                               std::vector<int>* solution) {
  limits_ = limits;
  nodes_ = 0;
  budget_hit_ = false;
  std::vector<int> chosen;
  const bool found = Search(&chosen);
  if (found) {
    *solution = std::move(chosen);
    return SearchStatus::kFound;
  }
  return budget_hit_ ? SearchStatus::kBudgetExceeded : SearchStatus::kExhausted;
}

}  // namespace urd
