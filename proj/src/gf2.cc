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

#include "urd/gf2.h"

#include <algorithm>
#include <bit>
#include <string>

#include "urd/model.h"

namespace urd {
namespace {

using Word = std::uint64_t;
constexpr int kWordBits = 64;

// Below this many row-words a sweep is not worth a parallel region.
constexpr long kParallelThreshold = 1 << 14;

class BitMatrix {
 public:
  BitMatrix(int rows, int cols)
      : rows_(rows), words_((cols + kWordBits - 1) / kWordBits),
        data_(static_cast<size_t>(rows) * words_, 0) {}

  int rows() const { return rows_; }
  int words() const { return words_; }
  bool Get(int r, int c) const {
    return (Row(r)[c / kWordBits] >> (c % kWordBits)) & 1U;
  }
  void Flip(int r, int c) { Row(r)[c / kWordBits] ^= Word{1} << (c % kWordBits); }
  Word* Row(int r) { return data_.data() + static_cast<size_t>(r) * words_; }
  const Word* Row(int r) const {
    return data_.data() + static_cast<size_t>(r) * words_;
  }
  void SwapRows(int a, int b) {
    if (a != b) std::swap_ranges(Row(a), Row(a) + words_, Row(b));
  }

 private:
  int rows_;
  int words_;
  std::vector<Word> data_;
};

}  // namespace

void ValidateSystem(const Gf2System& sys) {
  if (sys.n_vars < 0) {
    throw UrdError(ErrorCode::kInvalidParameters, "negative variable count");
  }
  auto check_set = [&](const std::vector<int>& s, const char* what) {
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw UrdError(ErrorCode::kInvalidParameters,
                     std::string("repeated index in ") + what);
    }
    for (int x : sorted) {
      if (x < 0 || x >= sys.n_vars) {
        throw UrdError(ErrorCode::kInvalidParameters,
                       std::string("index out of range in ") + what);
      }
    }
  };
  for (const Gf2Row& row : sys.rows) check_set(row.support, "row support");
  std::vector<char> seen(sys.n_vars, 0);
  for (const auto& block : sys.c_blocks) {
    check_set(block, "c_block");
    for (int x : block) {
      if (seen[x]++) {
        throw UrdError(ErrorCode::kInvalidParameters, "c_blocks overlap");
      }
    }
  }
}

bool Satisfies(const Gf2System& sys, std::span<const std::uint8_t> bits) {
  if (static_cast<int>(bits.size()) != sys.n_vars) return false;
  for (const Gf2Row& row : sys.rows) {
    int parity = 0;
    for (int x : row.support) parity ^= bits[x] & 1;
    if (parity != static_cast<int>(row.rhs)) return false;
  }
  return true;
}

std::optional<Gf2Solution> Gf2Solve(const Gf2System& sys) {
  ValidateSystem(sys);
  const int n = sys.n_vars;
  const int m = static_cast<int>(sys.rows.size());
  BitMatrix a(m, n + 1);
  for (int r = 0; r < m; ++r) {
    for (int x : sys.rows[r].support) a.Flip(r, x);
    if (sys.rows[r].rhs) a.Flip(r, n);
  }

  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = -1;
    for (int r = rank; r < m; ++r) {
      if (a.Get(r, col)) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    a.SwapRows(pivot, rank);

    // Rows >= rank are zero left of `col`, so the sweep starts at its word.
    const int first_word = col / kWordBits;
    const int words = a.words();
    const Word* prow = a.Row(rank);
    const Word mask = Word{1} << (col % kWordBits);
    const bool parallel =
        static_cast<long>(m) * (words - first_word) >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (parallel)
    for (int r = 0; r < m; ++r) {
      if (r == rank) continue;
      Word* row = a.Row(r);
      if (!(row[first_word] & mask)) continue;
      for (int w = first_word; w < words; ++w) row[w] ^= prow[w];
    }
    pivot_col.push_back(col);
    ++rank;
  }

  for (int r = rank; r < m; ++r) {
    if (a.Get(r, n)) return std::nullopt;
  }
  Gf2Solution sol;
  sol.bits.assign(n, 0);
  for (int r = 0; r < rank; ++r) sol.bits[pivot_col[r]] = a.Get(r, n);
  return sol;
}

std::optional<Gf2Solution> Gf2SolveReference(const Gf2System& sys) {
  ValidateSystem(sys);
  const int n = sys.n_vars;
  const int m = static_cast<int>(sys.rows.size());
  std::vector<std::vector<std::uint8_t>> a(m, std::vector<std::uint8_t>(n + 1, 0));
  for (int r = 0; r < m; ++r) {
    for (int x : sys.rows[r].support) a[r][x] ^= 1;
    a[r][n] = sys.rows[r].rhs;
  }
  std::vector<int> pivot_col;
  int rank = 0;
  for (int col = 0; col < n && rank < m; ++col) {
    int pivot = rank;
    while (pivot < m && !a[pivot][col]) ++pivot;
    if (pivot == m) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < m; ++r) {
      if (r != rank && a[r][col]) {
        for (int c = 0; c <= n; ++c) a[r][c] ^= a[rank][c];
      }
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (int r = rank; r < m; ++r) {
    if (a[r][n]) return std::nullopt;
  }
  Gf2Solution sol;
  sol.bits.assign(n, 0);
  for (int r = 0; r < rank; ++r) sol.bits[pivot_col[r]] = a[r][n];
  return sol;
}

bool RowImplied(const Gf2System& sys, const Gf2Row& row) {
  Gf2System negated = sys;
  negated.c_blocks.clear();
  negated.rows.push_back(Gf2Row{row.support, !row.rhs});
  return !Gf2Solve(negated).has_value();
}

Gf2Solution NormalizeToBasic(const Gf2System& sys, const Gf2Solution& sol) {
  ValidateSystem(sys);
  if (!Satisfies(sys, sol.bits)) {
    throw UrdError(ErrorCode::kNotASolution,
                   "input vector does not satisfy the system");
  }
  Gf2Solution out{sol.bits, false};
  for (size_t i = 0; i < sys.c_blocks.size(); ++i) {
    const auto& block = sys.c_blocks[i];
    int ones = 0;
    for (int x : block) ones += out.bits[x];
    if (ones == 1) continue;
    if (static_cast<int>(block.size()) - ones != 1) {
      throw UrdError(ErrorCode::kNormalizationImpossible,
                     "c_block " + std::to_string(i) + " holds " +
                         std::to_string(ones) + " ones out of " +
                         std::to_string(block.size()));
    }
    for (int x : block) out.bits[x] ^= 1;
  }
  if (!Satisfies(sys, out.bits)) {
    throw UrdError(ErrorCode::kNormalizationImpossible,
                   "complementing c_blocks broke a row");
  }
  out.basic = true;
  return out;
}

}  // namespace urd
