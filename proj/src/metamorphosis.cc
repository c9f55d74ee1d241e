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

#include "urd/metamorphosis.h"

#include <algorithm>
#include <set>
#include <string>

namespace urd {
namespace {

void Require(bool cond, const std::string& message) {
  if (!cond) throw UrdError(ErrorCode::kPrecondition, message);
}

void RequireSpanningClass(int v, const ParallelClass& c, BlockKind kind) {
  Require(c.kind == kind, "expected a " + kind.Name() + " class, got " +
                              c.kind.Name());
  std::vector<int> hits(v, 0);
  for (const Block& b : c.blocks) {
    Require(b.kind == kind, "block kind differs from class kind");
    for (int x : CanonicalizeBlock(b).vertices) {
      Require(x >= 0 && x < v, "vertex " + std::to_string(x) + " out of range");
      ++hits[x];
    }
  }
  for (int x = 0; x < v; ++x) {
    Require(hits[x] == 1, "vertex " + std::to_string(x) + " is covered " +
                              std::to_string(hits[x]) + " times by a " +
                              kind.Name() + " class");
  }
}

std::vector<Edge> UnionEdges(const std::vector<ParallelClass>& classes) {
  std::vector<Edge> edges;
  for (const ParallelClass& c : classes) {
    auto ce = ClassEdges(c);
    edges.insert(edges.end(), ce.begin(), ce.end());
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

// Edge variables of a canonical cycle in traversal order.
std::vector<Edge> CycleEdgesInOrder(const Block& cycle) {
  const auto& t = cycle.vertices;
  std::vector<Edge> out;
  for (size_t i = 0; i < t.size(); ++i) out.push_back(Edge::Of(t[i], t[(i + 1) % t.size()]));
  return out;
}

Gf2Solution SolveBasic(const MetaSystem& ms) {
  auto sol = Gf2Solve(ms.system);
  if (!sol) {
    throw UrdError(ErrorCode::kInconsistent,
                   "metamorphosis system has no solution; input is not a valid "
                   "pair of classes");
  }
  return NormalizeToBasic(ms.system, *sol);
}

}  // namespace

void CheckMetaInput(const MetaInput& inp) {
  const int v = inp.v;
  Require(v >= 1, "order must be positive");
  const auto& cs = inp.classes;
  auto require_count = [&](size_t n) {
    Require(cs.size() == n, "mode needs " + std::to_string(n) + " classes, got " +
                                std::to_string(cs.size()));
  };
  switch (inp.mode) {
    case MetaMode::kTwoC4:
    case MetaMode::kThreeC4:
      require_count(inp.mode == MetaMode::kTwoC4 ? 2 : 3);
      Require(v % 4 == 0, "v must be a multiple of 4");
      for (const auto& c : cs) RequireSpanningClass(v, c, BlockKind::C4());
      break;
    case MetaMode::kMatchingC4:
      require_count(2);
      Require(v % 4 == 0, "v must be a multiple of 4");
      RequireSpanningClass(v, cs[0], BlockKind::K2());
      RequireSpanningClass(v, cs[1], BlockKind::C4());
      break;
    case MetaMode::kTwoK3:
      require_count(2);
      Require(v % 3 == 0, "v must be a multiple of 3");
      for (const auto& c : cs) RequireSpanningClass(v, c, BlockKind::K3());
      break;
    case MetaMode::kCycleK:
      Require(inp.k >= 3, "cycle length must be at least 3");
      require_count(static_cast<size_t>(inp.k - 1));
      Require(v % inp.k == 0, "v must be a multiple of k");
      for (const auto& c : cs) RequireSpanningClass(v, c, BlockKind::Cycle(inp.k));
      break;
  }
  auto edges = UnionEdges(cs);
  Require(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
          "input classes share an edge");
}

MetaSystem BuildSystem(const MetaInput& inp) {
  Require(inp.mode == MetaMode::kTwoC4 || inp.mode == MetaMode::kMatchingC4,
          "GF(2) system exists only for two-c4 and matching-c4");
  CheckMetaInput(inp);
  const int v = inp.v;
  MetaSystem ms;
  std::vector<int> var_of(NumEdges(v), -1);
  // (cycle, var list) for every C4 that contributes variables.
  std::vector<std::vector<int>> cycle_vars;
  for (const ParallelClass& c : inp.classes) {
    if (c.kind != BlockKind::C4()) continue;
    for (const Block& b : c.blocks) {
      std::vector<int> vars;
      for (Edge e : CycleEdgesInOrder(CanonicalizeBlock(b))) {
        const int id = static_cast<int>(ms.var_edges.size());
        ms.var_edges.push_back(e);
        var_of[EdgeIndex(v, e)] = id;
        vars.push_back(id);
      }
      cycle_vars.push_back(std::move(vars));
    }
  }
  Gf2System& sys = ms.system;
  sys.n_vars = static_cast<int>(ms.var_edges.size());
  for (auto vars : cycle_vars) {
    std::sort(vars.begin(), vars.end());
    sys.rows.push_back({vars, true});
    sys.c_blocks.push_back(std::move(vars));
  }
  ms.num_c_rows = static_cast<int>(sys.rows.size());

  std::vector<std::vector<int>> incident(v);
  for (int i = 0; i < sys.n_vars; ++i) {
    incident[ms.var_edges[i].u].push_back(i);
    incident[ms.var_edges[i].w].push_back(i);
  }
  if (inp.mode == MetaMode::kTwoC4) {
    // The row of the last vertex is the sum of the others.
    for (int x = 0; x + 1 < v; ++x) sys.rows.push_back({incident[x], true});
    ms.num_other_rows = v - 1;
    if (!RowImplied(sys, Gf2Row{incident[v - 1], true})) {
      throw UrdError(ErrorCode::kInternal,
                     "omitted V-equation is not implied by the others");
    }
  } else {
    for (const Block& b : inp.classes[0].blocks) {
      const Block e = CanonicalizeBlock(b);
      std::vector<int> support = incident[e.vertices[0]];
      support.insert(support.end(), incident[e.vertices[1]].begin(),
                     incident[e.vertices[1]].end());
      std::sort(support.begin(), support.end());
      sys.rows.push_back({support, true});
    }
    ms.num_other_rows = v / 2;
  }
  return ms;
}

Block CycleMinusEdge(const Block& cycle, Edge removed) {
  const Block c = CanonicalizeBlock(cycle);
  const auto& t = c.vertices;
  const int k = static_cast<int>(t.size());
  for (int i = 0; i < k; ++i) {
    const int a = t[i];
    const int b = t[(i + 1) % k];
    if (Edge::Of(a, b) != removed) continue;
    std::vector<int> path;
    for (int j = 1; j <= k; ++j) path.push_back(t[(i + j) % k]);
    // Start from the removed edge's endpoint with the smaller label.
    if (path.front() > path.back()) std::reverse(path.begin(), path.end());
    return CanonicalizeBlock(Block{BlockKind::Path(k), path});
  }
  throw UrdError(ErrorCode::kInternal, "edge is not on the cycle");
}

TwoC4Result MetaTwoC4(int v, const ParallelClass& a, const ParallelClass& b) {
  MetaInput inp{v, {a, b}, MetaMode::kTwoC4};
  const MetaSystem ms = BuildSystem(inp);
  const Gf2Solution basic = SolveBasic(ms);

  std::vector<Block> paths[2];
  std::vector<Block> matching;
  int var = 0;
  for (int side = 0; side < 2; ++side) {
    for (const Block& cycle : inp.classes[side].blocks) {
      std::optional<Edge> chosen;
      for (int j = 0; j < 4; ++j, ++var) {
        if (basic.bits[var]) chosen = ms.var_edges[var];
      }
      paths[side].push_back(CycleMinusEdge(cycle, *chosen));
      matching.push_back(Block{BlockKind::K2(), {chosen->u, chosen->w}});
    }
  }
  std::vector<int> degree(v, 0);
  for (const Block& e : matching) {
    ++degree[e.vertices[0]];
    ++degree[e.vertices[1]];
  }
  if (std::any_of(degree.begin(), degree.end(), [](int d) { return d != 1; })) {
    throw UrdError(ErrorCode::kInternal, "selected edges are not a perfect matching");
  }
  return {MakeClass(BlockKind::P4(), std::move(paths[0])),
          MakeClass(BlockKind::P4(), std::move(paths[1])),
          MakeClass(BlockKind::K2(), std::move(matching))};
}

std::array<ParallelClass, 2> MetaMatchingC4(int v, const ParallelClass& f,
                                            const ParallelClass& a) {
  MetaInput inp{v, {f, a}, MetaMode::kMatchingC4};
  const MetaSystem ms = BuildSystem(inp);
  const Gf2Solution basic = SolveBasic(ms);

  std::vector<Block> remainder;
  std::vector<std::vector<int>> adj(v);
  int var = 0;
  for (const Block& cycle : inp.classes[1].blocks) {
    std::optional<Edge> chosen;
    for (int j = 0; j < 4; ++j, ++var) {
      if (basic.bits[var]) chosen = ms.var_edges[var];
    }
    remainder.push_back(CycleMinusEdge(cycle, *chosen));
    adj[chosen->u].push_back(chosen->w);
    adj[chosen->w].push_back(chosen->u);
  }
  for (const Block& e : f.blocks) {
    adj[e.vertices[0]].push_back(e.vertices[1]);
    adj[e.vertices[1]].push_back(e.vertices[0]);
  }

  // Every component of I + F must be a 4-vertex path.
  std::vector<Block> joined;
  std::vector<char> seen(v, 0);
  for (int s = 0; s < v; ++s) {
    if (seen[s] || adj[s].size() != 1) continue;
    std::vector<int> path{s};
    seen[s] = 1;
    int prev = -1;
    int cur = s;
    while (true) {
      int next = -1;
      for (int y : adj[cur]) {
        if (y != prev) next = y;
      }
      if (next < 0 || seen[next]) break;
      prev = cur;
      cur = next;
      seen[cur] = 1;
      path.push_back(cur);
    }
    if (path.size() != 4) {
      throw UrdError(ErrorCode::kInternal,
                     "matching plus selected edges has a component with " +
                         std::to_string(path.size()) + " vertices");
    }
    joined.push_back(Block{BlockKind::P4(), path});
  }
  if (std::count(seen.begin(), seen.end(), 1) != v) {
    throw UrdError(ErrorCode::kInternal, "matching plus selected edges has a cycle");
  }
  return {MakeClass(BlockKind::P4(), std::move(joined)),
          MakeClass(BlockKind::P4(), std::move(remainder))};
}

std::array<ParallelClass, 4> MetaThreeC4(int v, const ParallelClass& a,
                                         const ParallelClass& b,
                                         const ParallelClass& c) {
  CheckMetaInput(MetaInput{v, {a, b, c}, MetaMode::kThreeC4});
  TwoC4Result first = MetaTwoC4(v, a, b);
  auto second = MetaMatchingC4(v, first.matching, c);
  return {std::move(first.paths_a), std::move(first.paths_b),
          std::move(second[0]), std::move(second[1])};
}

ConjectureOutcome DecomposeIntoPathClasses(int v, int k,
                                           const std::vector<Edge>& edges,
                                           int num_classes,
                                           const SearchBudget& budget) {
  ConjectureOutcome out;
  const int num_edges = static_cast<int>(edges.size());
  std::vector<int> edge_item(NumEdges(v), -1);
  std::vector<std::vector<int>> adj(v);
  for (int i = 0; i < num_edges; ++i) {
    edge_item[EdgeIndex(v, edges[i])] = i;
    adj[edges[i].u].push_back(edges[i].w);
    adj[edges[i].w].push_back(edges[i].u);
  }
  for (auto& nb : adj) std::sort(nb.begin(), nb.end());

  // All simple k-vertex paths, each once (front < back), in lex order.
  std::vector<std::vector<int>> paths;
  std::vector<int> seq;
  std::vector<char> on_path(v, 0);
  auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(seq.size()) == k) {
      if (seq.front() < seq.back()) paths.push_back(seq);
      return;
    }
    for (int y : adj[seq.back()]) {
      if (on_path[y]) continue;
      on_path[y] = 1;
      seq.push_back(y);
      self(self);
      seq.pop_back();
      on_path[y] = 0;
    }
  };
  for (int s = 0; s < v; ++s) {
    seq = {s};
    on_path[s] = 1;
    extend(extend);
    on_path[s] = 0;
  }

  // Output classes are interchangeable: pin the smallest edge at vertex 0 to
  // class 0.
  int pinned = -1;
  if (!adj[0].empty()) pinned = edge_item[EdgeIndex(v, Edge::Of(0, adj[0][0]))];

  ExactCover ec(num_edges + v * num_classes, 0);
  std::vector<std::pair<int, int>> option_path;  // (path index, class)
  std::vector<int> items;
  for (size_t p = 0; p < paths.size(); ++p) {
    std::vector<int> path_edges;
    for (int i = 0; i + 1 < k; ++i) {
      path_edges.push_back(edge_item[EdgeIndex(v, Edge::Of(paths[p][i], paths[p][i + 1]))]);
    }
    const bool has_pinned =
        std::find(path_edges.begin(), path_edges.end(), pinned) != path_edges.end();
    for (int c = 0; c < num_classes; ++c) {
      if (has_pinned && c != 0) continue;
      items = path_edges;
      for (int x : paths[p]) items.push_back(num_edges + x * num_classes + c);
      ec.AddOption(items);
      option_path.emplace_back(static_cast<int>(p), c);
    }
  }

  std::vector<int> solution;
  out.status = ec.Solve(budget.Limits(), &solution);
  out.nodes = ec.nodes();
  if (out.status != SearchStatus::kFound) return out;
  std::vector<std::vector<Block>> blocks(num_classes);
  for (int opt : solution) {
    const auto [p, c] = option_path[opt];
    blocks[c].push_back(Block{BlockKind::Path(k), paths[p]});
  }
  for (auto& b : blocks) out.classes.push_back(MakeClass(BlockKind::Path(k), std::move(b)));
  return out;
}

std::array<ParallelClass, 3> MetaTwoK3(int v, const ParallelClass& a,
                                       const ParallelClass& b,
                                       const SearchBudget& budget) {
  CheckMetaInput(MetaInput{v, {a, b}, MetaMode::kTwoK3});
  ConjectureOutcome r =
      DecomposeIntoPathClasses(v, 3, UnionEdges({a, b}), 3, budget);
  switch (r.status) {
    case SearchStatus::kFound:
      return {std::move(r.classes[0]), std::move(r.classes[1]),
              std::move(r.classes[2])};
    case SearchStatus::kBudgetExceeded:
      throw UrdError(ErrorCode::kTimeout,
                     "triangle-to-P3 search exceeded its budget after " +
                         std::to_string(r.nodes) + " nodes");
    case SearchStatus::kExhausted:
      break;
  }
  throw UrdError(ErrorCode::kInternal,
                 "two triangle classes admit no three P3 classes");
}

ConjectureOutcome MetaCyclesConjecture(int v, int k,
                                       const std::vector<ParallelClass>& classes,
                                       const SearchBudget& budget) {
  CheckMetaInput(MetaInput{v, classes, MetaMode::kCycleK, k});
  if (k == 4) {
    auto four = MetaThreeC4(v, classes[0], classes[1], classes[2]);
    ConjectureOutcome out;
    out.status = SearchStatus::kFound;
    out.classes.assign(four.begin(), four.end());
    return out;
  }
  return DecomposeIntoPathClasses(v, k, UnionEdges(classes), k, budget);
}

}  // namespace urd
