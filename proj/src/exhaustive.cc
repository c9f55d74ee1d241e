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

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <set>

#include "urd/spectrum.h"

namespace urd {
namespace {

constexpr int kMaxOrder = 16;  // 120 edges fit the two-word mask

using Mask = std::array<std::uint64_t, 2>;

bool Test(const Mask& m, int i) { return (m[i >> 6] >> (i & 63)) & 1U; }
void Set(Mask& m, int i) { m[i >> 6] |= std::uint64_t{1} << (i & 63); }
void Clear(Mask& m, int i) { m[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

// Enumerates whole factors and searches for a set of them covering K_v.
class FactorSearch {
 public:
  FactorSearch(int v, std::vector<BlockKind> kinds, std::vector<int> counts,
               SearchLimits limits)
      : v_(v), kinds_(std::move(kinds)), remaining_(std::move(counts)),
        limits_(limits), edge_id_(v * v, -1) {
    for (int u = 0; u < v; ++u) {
      for (int w = u + 1; w < v; ++w) {
        edge_id_[u * v + w] = edge_id_[w * v + u] = static_cast<int>(edges_.size());
        edges_.push_back({u, w});
      }
    }
  }

  // true = a decomposition was found (in chosen()).
  bool Run() { return Solve(); }
  bool budget_hit() const { return budget_hit_; }
  std::int64_t nodes() const { return nodes_; }
  const std::vector<ParallelClass>& chosen() const { return chosen_; }

 private:
  using Sink = std::function<bool(const std::vector<Block>&, const Mask&)>;

  bool EdgeFree(int a, int b) const { return !Test(used_, edge_id_[a * v_ + b]); }

  // Extends `seq` at its back by `steps` vertices through free vertices and
  // unused edges, calling `done` for each completion; stops when it returns
  // true.
  bool Extend(std::vector<int>& seq, int steps, const std::function<bool()>& done) {
    if (steps == 0) return done();
    const int last = seq.back();
    for (int y = 0; y < v_; ++y) {
      if (assigned_[y] || !EdgeFree(last, y)) continue;
      if (std::find(seq.begin(), seq.end(), y) != seq.end()) continue;
      seq.push_back(y);
      const bool stop = Extend(seq, steps - 1, done);
      seq.pop_back();
      if (stop) return true;
    }
    return false;
  }

  // Every block of `kind` through vertex u (all other vertices free), each
  // once in canonical orientation.
  bool BlocksThroughVertex(BlockKind kind, int u, const std::function<bool(std::vector<int>&)>& f) {
    const int k = kind.order;
    std::vector<int> seq{u};
    if (kind.shape == Shape::kCycle) {
      return Extend(seq, k - 1, [&] {
        if (seq[1] > seq.back() || !EdgeFree(seq.back(), u)) return false;
        return f(seq);
      });
    }
    for (int left = 0; left < k; ++left) {
      std::vector<int> l{u};
      const bool stop = Extend(l, left, [&] {
        std::vector<int> r{u};
        std::vector<char> mark(v_, 0);
        for (int y : l) mark[y] = 1;
        for (int y : l) assigned_[y] += 2;  // keep the right arm disjoint
        const bool s = Extend(r, k - 1 - left, [&] {
          std::vector<int> path(l.rbegin(), l.rend());
          path.insert(path.end(), r.begin() + 1, r.end());
          if (path.front() > path.back()) return false;
          return f(path);
        });
        for (int y : l) assigned_[y] -= 2;
        return s;
      });
      if (stop) return true;
    }
    return false;
  }

  // Every block of `kind` using edge {a, b}, each once.
  bool BlocksThroughEdge(BlockKind kind, int a, int b,
                         const std::function<bool(std::vector<int>&)>& f) {
    const int k = kind.order;
    assigned_[a] += 2;
    assigned_[b] += 2;
    bool stop = false;
    if (kind.shape == Shape::kCycle) {
      std::vector<int> seq{b};
      stop = Extend(seq, k - 2, [&] {
        if (!EdgeFree(seq.back(), a)) return false;
        std::vector<int> cyc{a};
        cyc.insert(cyc.end(), seq.begin(), seq.end());
        return f(cyc);
      });
    } else {
      for (int left = 0; left <= k - 2 && !stop; ++left) {
        std::vector<int> l{a};
        stop = Extend(l, left, [&] {
          for (size_t i = 1; i < l.size(); ++i) assigned_[l[i]] += 2;
          std::vector<int> r{b};
          const bool s = Extend(r, k - 2 - left, [&] {
            std::vector<int> path(l.rbegin(), l.rend());
            path.insert(path.end(), r.begin(), r.end());
            return f(path);
          });
          for (size_t i = 1; i < l.size(); ++i) assigned_[l[i]] -= 2;
          return s;
        });
      }
    }
    assigned_[a] -= 2;
    assigned_[b] -= 2;
    return stop;
  }

  void Place(const std::vector<int>& t, std::vector<Block>& blocks, Mask& m, BlockKind kind, int delta) {
    for (int x : t) assigned_[x] += delta;
    const int k = static_cast<int>(t.size());
    const int ne = kind.shape == Shape::kCycle ? k : k - 1;
    for (int i = 0; i < ne; ++i) {
      const int id = edge_id_[t[i] * v_ + t[(i + 1) % k]];
      if (delta > 0) Set(m, id); else Clear(m, id);
    }
    if (delta > 0) blocks.push_back(Block{kind, t}); else blocks.pop_back();
  }

  // Completes a factor whose blocks so far are in `blocks`.
  bool FillRest(BlockKind kind, std::vector<Block>& blocks, Mask& m, const Sink& sink) {
    int u = 0;
    while (u < v_ && assigned_[u]) ++u;
    if (u == v_) return sink(blocks, m);
    return BlocksThroughVertex(kind, u, [&](std::vector<int>& t) {
      std::vector<int> copy = t;
      Place(copy, blocks, m, kind, 1);
      const bool stop = FillRest(kind, blocks, m, sink);
      Place(copy, blocks, m, kind, -1);
      return stop;
    });
  }

  // Stabiliser-of-{0,1} orbit representatives of factors containing {0,1}:
  // the block through 0,1 lives on {0..k-1}, the rest is fixed.
  std::vector<std::vector<int>> RootBlockRepresentatives(BlockKind kind) {
    const int k = kind.order;
    std::vector<std::vector<int>> reps;
    std::set<std::vector<int>> seen;
    std::vector<int> perm(k);
    for (int i = 0; i < v_; ++i) assigned_[i] += (i >= k) ? 2 : 0;
    BlocksThroughEdge(kind, 0, 1, [&](std::vector<int>& t) {
      std::vector<int> best;
      std::vector<int> rest;
      for (int i = 2; i < k; ++i) rest.push_back(i);
      for (int swap01 = 0; swap01 < 2; ++swap01) {
        std::vector<int> r = rest;
        do {
          perm[0] = swap01; perm[1] = 1 - swap01;
          for (int i = 2; i < k; ++i) perm[i] = r[i - 2];
          std::vector<int> img;
          for (int x : t) img.push_back(perm[x]);
          img = CanonicalizeBlock(Block{kind, img}).vertices;
          if (best.empty() || img < best) best = img;
        } while (std::next_permutation(r.begin(), r.end()));
      }
      if (seen.insert(best).second) reps.push_back(t);
      return false;
    });
    for (int i = 0; i < v_; ++i) assigned_[i] -= (i >= k) ? 2 : 0;
    return reps;
  }

  bool CheckBudget() {
    ++nodes_;
    if ((limits_.node_limit >= 0 && nodes_ > limits_.node_limit) ||
        ((nodes_ & 255) == 0 && std::chrono::steady_clock::now() >= limits_.deadline)) {
      budget_hit_ = true;
    }
    return budget_hit_;
  }

  bool Solve() {
    if (CheckBudget()) return false;
    int idx = 0;
    while (idx < static_cast<int>(edges_.size()) && Test(used_, idx)) ++idx;
    if (idx == static_cast<int>(edges_.size())) {
      return std::all_of(remaining_.begin(), remaining_.end(), [](int r) { return r == 0; });
    }
    const bool root = idx == 0 && chosen_.empty();
    const Edge e = edges_[idx];
    for (size_t ki = 0; ki < kinds_.size(); ++ki) {
      if (remaining_[ki] == 0) continue;
      const BlockKind kind = kinds_[ki];
      std::vector<Block> blocks;
      Mask fm{0, 0};
      const Sink sink = [&](const std::vector<Block>& bs, const Mask& m) {
        --remaining_[ki];
        used_[0] |= m[0];
        used_[1] |= m[1];
        chosen_.push_back(ParallelClass{kind, bs});
        // The next factor starts from an empty vertex assignment.
        std::vector<int> saved(kMaxOrder, 0);
        std::swap(saved, assigned_);
        const bool found = Solve();
        std::swap(saved, assigned_);
        if (!found) {
          chosen_.pop_back();
          used_[0] &= ~m[0];
          used_[1] &= ~m[1];
        }
        ++remaining_[ki];
        return found || budget_hit_;
      };
      bool stop = false;
      if (root) {
        for (const auto& rep : RootBlockRepresentatives(kind)) {
          Place(rep, blocks, fm, kind, 1);
          // Fixed arrangement of the remaining vertices.
          std::vector<std::vector<int>> rest;
          for (int s = kind.order; s < v_; s += kind.order) {
            std::vector<int> t;
            for (int i = 0; i < kind.order; ++i) t.push_back(s + i);
            rest.push_back(t);
          }
          for (const auto& t : rest) Place(t, blocks, fm, kind, 1);
          stop = sink(blocks, fm);
          for (auto it = rest.rbegin(); it != rest.rend(); ++it) Place(*it, blocks, fm, kind, -1);
          Place(rep, blocks, fm, kind, -1);
          if (stop) break;
        }
      } else {
        stop = BlocksThroughEdge(kind, e.u, e.w, [&](std::vector<int>& t) {
          std::vector<int> copy = t;
          Place(copy, blocks, fm, kind, 1);
          const bool s = FillRest(kind, blocks, fm, sink);
          Place(copy, blocks, fm, kind, -1);
          return s;
        });
      }
      if (stop) return !budget_hit_;
    }
    return false;
  }

  int v_;
  std::vector<BlockKind> kinds_;
  std::vector<int> remaining_;
  SearchLimits limits_;
  std::vector<int> edge_id_;
  std::vector<Edge> edges_;
  std::vector<int> assigned_ = std::vector<int>(kMaxOrder, 0);
  Mask used_{0, 0};
  std::vector<ParallelClass> chosen_;
  std::int64_t nodes_ = 0;
  bool budget_hit_ = false;
};

std::vector<int> Coefficients(Family family) {
  switch (family) {
    case Family::kK2P3K3: return {3, 4, 6};
    case Family::kK2P4C4: return {2, 3, 4};
    case Family::kP4C4: return {3, 4};
    case Family::kRaw: break;
  }
  throw UrdError(ErrorCode::kInvalidParameters, "raw family has no equation");
}

int RightHandSide(Family family, int v) {
  return family == Family::kK2P3K3 ? 3 * v - 3 : 2 * v - 2;
}

ExhaustiveRow Decide(int v, Family family, const std::vector<int>& counts,
                     const SearchLimits& limits) {
  ExhaustiveRow row{counts, Feasibility::kUnknown, std::nullopt, 0};
  const std::vector<BlockKind> kinds = FamilyKinds(family);
  for (size_t i = 0; i < kinds.size(); ++i) {
    if (counts[i] > 0 && v % kinds[i].order != 0) {
      row.feasibility = Feasibility::kInfeasible;
      return row;
    }
  }
  long edges = 0;
  for (size_t i = 0; i < kinds.size(); ++i) {
    edges += static_cast<long>(counts[i]) * (v / kinds[i].order) * kinds[i].num_edges();
  }
  if (edges != NumEdges(v)) {
    row.feasibility = Feasibility::kInfeasible;
    return row;
  }
  FactorSearch search(v, kinds, counts, limits);
  const bool found = search.Run();
  row.nodes = search.nodes();
  if (found) {
    row.feasibility = Feasibility::kFeasible;
    std::vector<ParallelClass> classes;
    for (const BlockKind& kind : kinds) {
      for (const ParallelClass& c : search.chosen()) {
        if (c.kind == kind) classes.push_back(MakeClass(kind, c.blocks));
      }
    }
    row.witness = Decomposition{v, std::move(classes)};
  } else {
    row.feasibility = search.budget_hit() ? Feasibility::kUnknown : Feasibility::kInfeasible;
  }
  return row;
}

void CheckOrder(int v) {
  if (v < 2 || v > kMaxOrder) {
    throw UrdError(ErrorCode::kInvalidOrder,
                   "exhaustive search supports 2 <= v <= 16, got " + std::to_string(v));
  }
}

}  // namespace

std::vector<std::vector<int>> EquationSolutions(Family family, int v) {
  const std::vector<int> coef = Coefficients(family);
  const int rhs = RightHandSide(family, v);
  std::vector<std::vector<int>> out;
  std::vector<int> cur(coef.size(), 0);
  std::function<void(size_t, int)> rec = [&](size_t i, int left) {
    if (i + 1 == coef.size()) {
      if (left % coef[i] == 0) {
        cur[i] = left / coef[i];
        out.push_back(cur);
      }
      return;
    }
    for (int x = left / coef[i]; x >= 0; --x) {
      cur[i] = x;
      rec(i + 1, left - x * coef[i]);
    }
  };
  if (rhs >= 0) rec(0, rhs);
  return out;
}

std::vector<std::vector<int>> ExhaustiveSpectrum::Feasible() const {
  std::vector<std::vector<int>> out;
  for (const ExhaustiveRow& r : rows) {
    if (r.feasibility == Feasibility::kFeasible) out.push_back(r.counts);
  }
  return out;
}

ExhaustiveRow DecideProfileExhaustively(int v, Family family,
                                        const std::vector<int>& counts,
                                        const SearchBudget& budget) {
  CheckOrder(v);
  if (counts.size() != FamilyKinds(family).size()) {
    throw UrdError(ErrorCode::kInvalidParameters, "counts do not fit the family");
  }
  return Decide(v, family, counts, budget.Limits());
}

ExhaustiveSpectrum ExhaustiveSpectrumSearch(int v, Family family,
                                            const SearchBudget& budget,
                                            bool parallel) {
  CheckOrder(v);
  ExhaustiveSpectrum out{v, family, {}, false};
  const auto tuples = EquationSolutions(family, v);
  out.rows.resize(tuples.size());
  const SearchLimits limits = budget.Limits();
  const int n = static_cast<int>(tuples.size());
#pragma omp parallel for schedule(dynamic, 1) if (parallel)
  for (int i = 0; i < n; ++i) out.rows[i] = Decide(v, family, tuples[i], limits);
  out.partial = std::any_of(out.rows.begin(), out.rows.end(), [](const ExhaustiveRow& r) {
    return r.feasibility == Feasibility::kUnknown;
  });
  return out;
}

}  // namespace urd
