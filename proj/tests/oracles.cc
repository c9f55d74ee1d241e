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

#include "oracles.h"

#include <algorithm>
#include <numeric>
#include <set>

namespace urd::oracle {

bool RowsHold(const Gf2System& sys, const std::vector<std::uint8_t>& bits) {
  for (const Gf2Row& row : sys.rows) {
    int sum = 0;
    for (int x : row.support) sum ^= bits[x] & 1;
    if (sum != (row.rhs ? 1 : 0)) return false;
  }
  return true;
}

BruteForceResult BruteForceGf2(const Gf2System& sys) {
  BruteForceResult out;
  const int n = sys.n_vars;
  std::vector<std::uint8_t> bits(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // Bit n-1-i of the mask is variable i, so the scan is lexicographic.
    for (int i = 0; i < n; ++i) bits[i] = (mask >> (n - 1 - i)) & 1;
    if (RowsHold(sys, bits)) {
      if (!out.first) out.first = bits;
      ++out.count;
    }
  }
  return out;
}

Gf2System RandomGf2System(std::mt19937_64& rng, int n_vars, int n_rows) {
  Gf2System sys;
  sys.n_vars = n_vars;
  std::uniform_int_distribution<int> size(1, n_vars);
  std::bernoulli_distribution coin(0.5);
  std::vector<int> vars(n_vars);
  std::iota(vars.begin(), vars.end(), 0);
  for (int r = 0; r < n_rows; ++r) {
    std::shuffle(vars.begin(), vars.end(), rng);
    Gf2Row row;
    row.support.assign(vars.begin(), vars.begin() + size(rng));
    std::sort(row.support.begin(), row.support.end());
    row.rhs = coin(rng);
    sys.rows.push_back(std::move(row));
  }
  return sys;
}

std::vector<int> RandomPermutation(int v, std::mt19937_64& rng) {
  std::vector<int> p(v);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

EdgeCount CountEdges(const std::vector<ParallelClass>& classes) {
  EdgeCount out;
  for (const ParallelClass& c : classes) {
    for (const Block& b : c.blocks) {
      const auto& t = b.vertices;
      const size_t n = t.size();
      const size_t steps = b.kind.shape == Shape::kCycle ? n : n - 1;
      for (size_t i = 0; i < steps; ++i) {
        const int a = t[i], z = t[(i + 1) % n];
        ++out[{std::min(a, z), std::max(a, z)}];
      }
    }
  }
  return out;
}

std::string CheckClass(const ParallelClass& c, int v, BlockKind kind) {
  if (!(c.kind == kind)) return "class kind " + c.kind.Name() + " != " + kind.Name();
  std::vector<int> seen(v, 0);
  for (const Block& b : c.blocks) {
    if (!(b.kind == kind)) return "block kind mismatch";
    if (static_cast<int>(b.vertices.size()) != kind.order) return "block size";
    for (int x : b.vertices) {
      if (x < 0 || x >= v) return "vertex out of range";
      if (seen[x]++) return "vertex " + std::to_string(x) + " repeated";
    }
  }
  for (int x = 0; x < v; ++x) {
    if (!seen[x]) return "vertex " + std::to_string(x) + " missing";
  }
  return "";
}

std::string CheckDecomposition(const Decomposition& d) {
  for (const ParallelClass& c : d.classes) {
    if (std::string why = CheckClass(c, d.v, c.kind); !why.empty()) return why;
  }
  const EdgeCount edges = CountEdges(d.classes);
  if (static_cast<int>(edges.size()) != d.v * (d.v - 1) / 2) return "edge cover incomplete";
  for (const auto& [e, n] : edges) {
    if (n != 1) return "edge used twice";
  }
  return "";
}

std::vector<int> CountKinds(const Decomposition& d, const std::vector<BlockKind>& kinds) {
  std::vector<int> out(kinds.size(), 0);
  for (const ParallelClass& c : d.classes) {
    for (size_t i = 0; i < kinds.size(); ++i) {
      if (c.kind == kinds[i]) ++out[i];
    }
  }
  return out;
}

std::vector<std::vector<int>> AdmissibleByDefinition(Family family, int v, bool complex_only) {
  std::vector<std::vector<int>> out;
  auto positive = [](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x > 0; });
  };
  const int big = 2 * v;
  switch (family) {
    case Family::kK2P3K3:
      if (v % 6 != 0 || (complex_only && v < 12)) return out;
      for (int m = 0; m <= big; ++m)
        for (int p = 0; p <= big; ++p)
          for (int t = 0; t <= big; ++t) {
            if (3 * m + 4 * p + 6 * t != 3 * v - 3 || m % 2 == 0 || p % 3 != 0) continue;
            if (complex_only && !positive({m, p, t})) continue;
            if (!complex_only && v == 6 && m == 1 && p == 0 && t == 2) continue;
            if (!complex_only && v == 12 && m == 1 && p == 0 && t == 5) continue;
            out.push_back({m, p, t});
          }
      break;
    case Family::kK2P4C4:
      if (v % 4 != 0 || (complex_only && v < 8)) return out;
      for (int m = 0; m <= big; ++m)
        for (int p = 0; p <= big; ++p)
          for (int c = 0; c <= big; ++c) {
            if (2 * m + 3 * p + 4 * c != 2 * v - 2 || p % 2 != 0) continue;
            if (p % 4 == 2 && m % 2 != 0) continue;
            if (complex_only && !positive({m, p, c})) continue;
            out.push_back({m, p, c});
          }
      break;
    case Family::kP4C4:
      if (v % 4 != 0) return out;
      for (int p = 1; p <= big; ++p)
        for (int c = 1; c <= big; ++c) {
          if (3 * p + 4 * c == 2 * v - 2) out.push_back({p, c});
        }
      break;
    case Family::kRaw:
      break;
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

namespace {

// Fills `blocks` with vertex-disjoint k-cycles covering every vertex and
// avoiding `used`; random choices, bounded number of tries.
bool FillClass(int v, int k, std::set<std::pair<int, int>>& used, std::vector<int>& free,
               std::vector<std::vector<int>>& blocks, std::mt19937_64& rng, int& budget) {
  if (free.empty()) return true;
  if (--budget < 0) return false;
  const int first = free.front();
  for (int attempt = 0; attempt < 40; ++attempt) {
    std::vector<int> rest(free.begin() + 1, free.end());
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<int> cyc{first};
    cyc.insert(cyc.end(), rest.begin(), rest.begin() + (k - 1));
    bool ok = true;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < k && ok; ++i) {
      const int a = cyc[i], b = cyc[(i + 1) % k];
      const std::pair<int, int> e{std::min(a, b), std::max(a, b)};
      ok = !used.count(e);
      es.push_back(e);
    }
    if (!ok) continue;
    for (const auto& e : es) used.insert(e);
    std::vector<int> left;
    for (int x : free) {
      if (std::find(cyc.begin(), cyc.end(), x) == cyc.end()) left.push_back(x);
    }
    std::swap(free, left);
    blocks.push_back(cyc);
    if (FillClass(v, k, used, free, blocks, rng, budget)) return true;
    blocks.pop_back();
    std::swap(free, left);
    for (const auto& e : es) used.erase(e);
  }
  return false;
}

bool FillClasses(int v, int k, int count, std::set<std::pair<int, int>>& used,
                 std::vector<ParallelClass>& out, std::mt19937_64& rng, int& tries) {
  if (static_cast<int>(out.size()) == count) return true;
  for (int attempt = 0; attempt < 8 && tries > 0; ++attempt, --tries) {
    const std::set<std::pair<int, int>> saved = used;
    std::vector<int> free(v);
    std::iota(free.begin(), free.end(), 0);
    std::vector<std::vector<int>> blocks;
    int budget = 2000;
    if (!FillClass(v, k, used, free, blocks, rng, budget)) continue;
    out.push_back(MakeClass(BlockKind::Cycle(k), blocks));
    if (FillClasses(v, k, count, used, out, rng, tries)) return true;
    out.pop_back();
    used = saved;
  }
  return false;
}

}  // namespace

std::optional<std::vector<ParallelClass>> RandomCycleClasses(int v, int k, int count,
                                                             std::mt19937_64& rng) {
  std::set<std::pair<int, int>> used;
  std::vector<ParallelClass> out;
  int tries = 100000;
  if (FillClasses(v, k, count, used, out, rng, tries)) return out;
  return std::nullopt;
}

}  // namespace urd::oracle
