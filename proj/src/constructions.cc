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

#include "urd/constructions.h"

#include <algorithm>
#include <chrono>
#include <map>
#include <mutex>
#include <random>
#include <shared_mutex>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "urd/urd_format.h"

namespace urd {
namespace {

constexpr std::pair<std::string_view, std::string_view> kCatalogFiles[] = {
#include "catalog_data.inc"
};

// Rees search restarts: first attempt gets this many nodes, then x1.5.
constexpr std::int64_t kFirstRestartNodes = 20000;

struct ReesCache {
  std::shared_mutex mu;
  std::map<std::tuple<int, int, std::uint64_t>, ReesSystem> entries;
};

ReesCache& GetReesCache() {
  static ReesCache cache;
  return cache;
}

// Rees search model. Items: (vertex, slot) for t triangle slots then m
// matching slots, then every edge of K_v. An option places one or more
// blocks, each into its own slot.
struct ReesShape {
  int v;
  int t;
  int m;
  int slots() const { return t + m; }
  int edge_base() const { return v * slots(); }
  int num_items() const { return edge_base() + NumEdges(v); }
};

struct Placement {
  int slot;
  std::vector<int> block;
};

using ReesOption = std::vector<Placement>;

// Items covered by `opt`; empty if the placements clash.
std::vector<int> OptionItems(const ReesShape& sh, const ReesOption& opt) {
  std::vector<int> items;
  for (const Placement& p : opt) {
    for (int x : p.block) items.push_back(x * sh.slots() + p.slot);
    for (size_t i = 0; i < p.block.size(); ++i) {
      for (size_t j = i + 1; j < p.block.size(); ++j) {
        items.push_back(sh.edge_base() + EdgeIndex(sh.v, Edge::Of(p.block[i], p.block[j])));
      }
    }
  }
  std::vector<int> sorted = items;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return {};
  return items;
}

template <typename Fn>
void ForEachBlock(const ReesShape& sh, int slot, Fn&& fn) {
  const int v = sh.v;
  if (slot < sh.t) {
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b)
        for (int c = b + 1; c < v; ++c) fn(std::vector<int>{a, b, c});
  } else {
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) fn(std::vector<int>{a, b});
  }
}

// One block per option. The neighbours of vertex 0 are distinct across
// classes, so after relabelling triangle class s holds {0, 2s+1, 2s+2} and
// matching class j pairs 0 with 2t+1+j.
std::vector<ReesOption> PlainOptions(const ReesShape& sh) {
  std::vector<ReesOption> out;
  for (int s = 0; s < sh.slots(); ++s) {
    ForEachBlock(sh, s, [&](const std::vector<int>& b) {
      if (b[0] == 0) {
        const bool keep = b.size() == 3 ? b[1] == 2 * s + 1 && b.back() == 2 * s + 2
                                        : b[1] == s + sh.t + 1;
        if (!keep) return;
      }
      out.push_back({{s, b}});
    });
  }
  return out;
}

// A search model. order 1 is the plain model. Otherwise designs are
// restricted to those invariant under x -> x + v/order (mod v): the first
// `tri_orbits` * order triangle slots and the first `match_orbits` * order
// matching slots form orbits of that size, the remaining slots are fixed.
struct Layout {
  int order;
  int tri_orbits;
  int match_orbits;
};

std::vector<ReesOption> LayoutOptions(const ReesShape& sh, const Layout& lay) {
  if (lay.order == 1) return PlainOptions(sh);
  const int shift = sh.v / lay.order;
  std::vector<int> next(sh.slots());
  std::vector<bool> fixed(sh.slots(), true);
  std::vector<bool> rep(sh.slots(), true);
  auto make_orbits = [&](int begin, int count, int orbits) {
    int s = begin;
    for (int i = 0; i < orbits; ++i) {
      for (int k = 0; k < lay.order; ++k, ++s) {
        next[s] = k + 1 < lay.order ? s + 1 : s + 1 - lay.order;
        fixed[s] = false;
        rep[s] = k == 0;
      }
    }
    for (; s < begin + count; ++s) next[s] = s;
  };
  make_orbits(0, sh.t, lay.tri_orbits);
  make_orbits(sh.t, sh.m, lay.match_orbits);

  std::vector<ReesOption> out;
  for (int s = 0; s < sh.slots(); ++s) {
    if (!rep[s]) continue;
    ForEachBlock(sh, s, [&](const std::vector<int>& b) {
      ReesOption opt;
      int slot = s;
      std::vector<int> img = b;
      for (int k = 0; k < lay.order; ++k) {
        std::sort(img.begin(), img.end());
        // A block can be its own image inside a fixed class.
        const bool repeat = fixed[s] && std::any_of(opt.begin(), opt.end(), [&](const Placement& p) {
                              return p.block == img;
                            });
        if (!repeat) opt.push_back({slot, img});
        for (int& x : img) x = (x + shift) % sh.v;
        slot = next[slot];
      }
      if (!OptionItems(sh, opt).empty()) out.push_back(std::move(opt));
    });
  }
  return out;
}

// Symmetric layouts first (small models, fast when they have solutions),
// the plain model last.
std::vector<Layout> Layouts(const ReesShape& sh) {
  std::vector<Layout> out;
  for (int order : {3, 4, 2}) {
    if (sh.v % order != 0) continue;
    for (int dt : {0, 1}) {
      const int c = sh.t / order - dt;
      const int a = sh.m / order;
      if (c < 0) continue;
      out.push_back({order, c, a});
    }
  }
  out.push_back({1, 0, 0});
  return out;
}

struct RestartRun {
  std::uint64_t seed;
  std::chrono::steady_clock::time_point deadline;
  std::int64_t node_limit;  // negative: unlimited
};

ReesSystem SystemFrom(const ReesShape& sh, const std::vector<ReesOption>& options,
                      const std::vector<int>& order, const std::vector<int>& solution) {
  std::vector<std::vector<std::vector<int>>> blocks(sh.slots());
  for (int opt : solution) {
    for (const Placement& p : options[order[opt]]) blocks[p.slot].push_back(p.block);
  }
  ReesSystem sys;
  for (int s = 0; s < sh.t; ++s) sys.triangles.push_back(MakeClass(BlockKind::K3(), blocks[s]));
  for (int s = sh.t; s < sh.slots(); ++s) {
    sys.matchings.push_back(MakeClass(BlockKind::K2(), blocks[s]));
  }
  return sys;
}

// Round-robin over the layouts with shuffled option order; the node limit
// per attempt grows by half after each round. A layout whose unshuffled
// first attempt is exhausted has no solution and leaves the rotation; if
// that happens to the plain model, no system exists.
SearchStatus RunRestarts(const ReesShape& sh, const RestartRun& run, ReesResult* result) {
  std::vector<Layout> layouts = Layouts(sh);
  std::vector<bool> tried(layouts.size(), false);
  std::int64_t used = 0;
  std::int64_t attempt_nodes = kFirstRestartNodes;
  for (int round = 0;; ++round) {
    for (size_t li = 0; li < layouts.size(); ++li) {
      std::int64_t limit = attempt_nodes;
      if (run.node_limit >= 0) {
        limit = std::min(limit, run.node_limit - used);
        if (limit <= 0) return SearchStatus::kBudgetExceeded;
      }
      if (std::chrono::steady_clock::now() >= run.deadline) return SearchStatus::kBudgetExceeded;
      const std::vector<ReesOption> options = LayoutOptions(sh, layouts[li]);
      std::vector<int> order(options.size());
      for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
      const bool first = !tried[li];
      tried[li] = true;
      if (!first) {
        std::mt19937_64 rng(run.seed * 0x9E3779B97F4A7C15ULL + round * 64 + li);
        std::shuffle(order.begin(), order.end(), rng);
      }

      ExactCover ec(sh.num_items(), 0);
      for (int oi : order) ec.AddOption(OptionItems(sh, options[oi]));
      std::vector<int> solution;
      const SearchStatus status = ec.Solve(SearchLimits{limit, run.deadline}, &solution);
      used += ec.nodes();
      result->nodes += ec.nodes();
      ++result->restarts;
      if (status == SearchStatus::kFound) {
        result->system = SystemFrom(sh, options, order, solution);
        return SearchStatus::kFound;
      }
      if (status == SearchStatus::kExhausted && first) {
        if (layouts[li].order == 1) return SearchStatus::kExhausted;
        layouts.erase(layouts.begin() + li);
        tried.erase(tried.begin() + li);
        --li;
      }
    }
    attempt_nodes += attempt_nodes / 2;
  }
}

}  // namespace

std::vector<ParallelClass> OneFactorization(int v) {
  if (v < 2 || v % 2 != 0) {
    throw UrdError(ErrorCode::kInvalidOrder,
                   "1-factorization needs even v >= 2, got " + std::to_string(v));
  }
  const int n = v - 1;
  std::vector<ParallelClass> classes;
  for (int r = 0; r < n; ++r) {
    std::vector<std::vector<int>> pairs{{v - 1, r}};
    for (int i = 1; i < v / 2; ++i) pairs.push_back({(r + i) % n, (r - i + n) % n});
    classes.push_back(MakeClass(BlockKind::K2(), pairs));
  }
  return classes;
}

BlowUp C4Blowup(int v) {
  if (v < 4 || v % 4 != 0) {
    throw UrdError(ErrorCode::kInvalidOrder,
                   "C4 blow-up needs v divisible by 4, got " + std::to_string(v));
  }
  BlowUp out;
  for (const ParallelClass& f : OneFactorization(v / 2)) {
    std::vector<std::vector<int>> cycles;
    for (const Block& e : f.blocks) {
      const int a = e.vertices[0], b = e.vertices[1];
      cycles.push_back({2 * a, 2 * b, 2 * a + 1, 2 * b + 1});
    }
    out.cycles.push_back(MakeClass(BlockKind::C4(), cycles));
  }
  std::vector<std::vector<int>> pairs;
  for (int a = 0; a < v / 2; ++a) pairs.push_back({2 * a, 2 * a + 1});
  out.matching = MakeClass(BlockKind::K2(), pairs);
  return out;
}

ReesResult ReesSearch(int v, int m, const SearchBudget& budget) {
  if (v < 6 || v % 6 != 0 || m < 1 || m > v - 1 || m % 2 == 0) {
    throw UrdError(ErrorCode::kInvalidParameters,
                   "matching/triangle system needs v % 6 == 0 and odd m in [1, v-1]; "
                   "got v=" + std::to_string(v) + " m=" + std::to_string(m));
  }
  if (m == 1 && (v == 6 || v == 12)) {
    throw UrdError(ErrorCode::kKnownNonexistent,
                   "no nearly Kirkman triple system of order " + std::to_string(v));
  }
  const auto key = std::make_tuple(v, m, budget.seed);
  ReesCache& cache = GetReesCache();
  {
    std::shared_lock lock(cache.mu);
    if (auto it = cache.entries.find(key); it != cache.entries.end()) {
      return ReesResult{SearchStatus::kFound, it->second, 0, 0};
    }
  }

  ReesResult result;
  const int t = (v - 1 - m) / 2;
  if (t == 0) {
    result.status = SearchStatus::kFound;
    result.system = ReesSystem{OneFactorization(v), {}};
  } else {
    const ReesShape shape{v, t, m};
    const SearchStatus status =
        RunRestarts(shape, RestartRun{budget.seed, budget.Deadline(), budget.node_limit}, &result);
    result.status = status;
  }

  if (result.status == SearchStatus::kFound) {
    std::unique_lock lock(cache.mu);
    cache.entries.emplace(key, *result.system);
  }
  return result;
}

const std::vector<CatalogEntry>& Catalog() {
  static const std::vector<CatalogEntry> catalog = [] {
    std::vector<CatalogEntry> out;
    for (const auto& [name, text] : kCatalogFiles) {
      UrdDocument doc = ParseUrd(text);
      if (!doc.profile) {
        throw UrdError(ErrorCode::kInternal, "catalog file without profile: " + std::string(name));
      }
      std::string source = "unknown";
      if (size_t at = text.find("# source: "); at != std::string_view::npos) {
        const size_t start = at + 10;
        source = std::string(text.substr(start, text.find('\n', start) - start));
      }
      out.push_back(CatalogEntry{doc.decomposition.v, *doc.profile,
                                 std::move(doc.decomposition), std::move(source)});
    }
    return out;
  }();
  return catalog;
}

std::optional<Decomposition> CatalogLookup(int v, const Profile& profile) {
  for (const CatalogEntry& e : Catalog()) {
    if (e.v == v && e.profile == profile) return e.decomposition;
  }
  return std::nullopt;
}

}  // namespace urd
