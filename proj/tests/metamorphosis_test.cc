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

#include <gtest/gtest.h>

#include <random>

#include "oracles.h"
#include "urd/constructions.h"
#include "urd/gf2.h"
#include "urd/model.h"
#include "urd/verifier.h"

namespace urd {
namespace {

// Lines of the affine plane of order 3 on (x, y) -> 3x + y: four triangle
// classes decomposing K9.
std::vector<ParallelClass> AffinePlaneClasses() {
  std::vector<ParallelClass> out;
  auto id = [](int x, int y) { return 3 * ((x % 3 + 3) % 3) + (y % 3 + 3) % 3; };
  std::vector<std::vector<int>> horiz, vert, diag, anti;
  for (int c = 0; c < 3; ++c) {
    horiz.push_back({id(0, c), id(1, c), id(2, c)});
    vert.push_back({id(c, 0), id(c, 1), id(c, 2)});
    diag.push_back({id(0, c), id(1, c + 1), id(2, c + 2)});
    anti.push_back({id(0, c), id(1, c - 1), id(2, c - 2)});
  }
  for (const auto* t : {&horiz, &vert, &diag, &anti}) out.push_back(MakeClass(BlockKind::K3(), *t));
  return out;
}

void ExpectSameEdges(const std::vector<ParallelClass>& in, const std::vector<ParallelClass>& out) {
  const oracle::EdgeCount a = oracle::CountEdges(in);
  const oracle::EdgeCount b = oracle::CountEdges(out);
  EXPECT_EQ(a, b);
  for (const auto& [e, n] : b) EXPECT_EQ(n, 1);
}

void ExpectClasses(const std::vector<ParallelClass>& out, int v, BlockKind kind, int count) {
  int n = 0;
  for (const ParallelClass& c : out) {
    if (c.kind == kind) {
      ++n;
      EXPECT_EQ(oracle::CheckClass(c, v, kind), "");
    }
  }
  EXPECT_EQ(n, count) << kind.Name();
}

TEST(BuildSystemTest, TwoC4CountsAtEight) {
  const BlowUp b = C4Blowup(8);
  const MetaSystem ms = BuildSystem({8, {b.cycles[0], b.cycles[1]}, MetaMode::kTwoC4});
  EXPECT_EQ(ms.system.n_vars, 16);
  EXPECT_EQ(ms.num_c_rows, 4);
  EXPECT_EQ(ms.num_other_rows, 7);
  EXPECT_EQ(ms.system.rows.size(), 11u);
  EXPECT_EQ(ms.system.c_blocks.size(), 4u);
  for (const Gf2Row& r : ms.system.rows) EXPECT_TRUE(r.rhs);
}

TEST(BuildSystemTest, MatchingC4CountsAtEight) {
  const BlowUp b = C4Blowup(8);
  const MetaSystem ms = BuildSystem({8, {b.matching, b.cycles[0]}, MetaMode::kMatchingC4});
  EXPECT_EQ(ms.system.n_vars, 8);
  EXPECT_EQ(ms.num_c_rows, 2);
  EXPECT_EQ(ms.num_other_rows, 4);
}

TEST(BuildSystemTest, VariablesBijectWithEdges) {
  const BlowUp b = C4Blowup(12);
  const MetaSystem ms = BuildSystem({12, {b.cycles[2], b.cycles[4]}, MetaMode::kTwoC4});
  std::vector<Edge> expect = ClassEdges(b.cycles[2]);
  const std::vector<Edge> more = ClassEdges(b.cycles[4]);
  expect.insert(expect.end(), more.begin(), more.end());
  std::vector<Edge> got = ms.var_edges;
  std::sort(expect.begin(), expect.end());
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, expect);
}

TEST(BuildSystemTest, OmittedVertexRowIsImplied) {
  const BlowUp b = C4Blowup(16);
  const MetaSystem ms = BuildSystem({16, {b.cycles[0], b.cycles[3]}, MetaMode::kTwoC4});
  Gf2Row last{{}, true};
  for (int i = 0; i < ms.system.n_vars; ++i) {
    if (ms.var_edges[i].u == 15 || ms.var_edges[i].w == 15) last.support.push_back(i);
  }
  EXPECT_TRUE(RowImplied(ms.system, last));
}

// Cycles 0-1-2-3 and 4-5-6-7; the matching uses both diagonals of each.
TEST(BuildSystemTest, DiagonalMatchingRowEqualsCycleRow) {
  const ParallelClass cyc = MakeClass(BlockKind::C4(), {{0, 1, 2, 3}, {4, 5, 6, 7}});
  const ParallelClass mat = MakeClass(BlockKind::K2(), {{0, 2}, {1, 3}, {4, 6}, {5, 7}});
  const MetaSystem ms = BuildSystem({8, {mat, cyc}, MetaMode::kMatchingC4});
  for (int r = ms.num_c_rows; r < static_cast<int>(ms.system.rows.size()); ++r) {
    std::vector<int> s = ms.system.rows[r].support;
    std::sort(s.begin(), s.end());
    bool equals_a_cycle = false;
    for (const auto& blk : ms.system.c_blocks) {
      std::vector<int> t = blk;
      std::sort(t.begin(), t.end());
      equals_a_cycle |= s == t;
    }
    EXPECT_TRUE(equals_a_cycle) << "row " << r;
  }
  const auto out = MetaMatchingC4(8, mat, cyc);
  ExpectSameEdges({mat, cyc}, {out[0], out[1]});
  ExpectClasses({out[0], out[1]}, 8, BlockKind::P4(), 2);
}

TEST(MetaTwoC4Test, BlowUpAtEightAndTwelve) {
  for (int v : {8, 12}) {
    const BlowUp b = C4Blowup(v);
    const TwoC4Result r = MetaTwoC4(v, b.cycles[0], b.cycles[1]);
    const std::vector<ParallelClass> out{r.paths_a, r.paths_b, r.matching};
    ExpectSameEdges({b.cycles[0], b.cycles[1]}, out);
    ExpectClasses(out, v, BlockKind::P4(), 2);
    ExpectClasses(out, v, BlockKind::K2(), 1);
  }
}

TEST(MetaTwoC4Test, RandomRelabelingsAtSixteen) {
  std::mt19937_64 rng(16);
  const BlowUp b = C4Blowup(16);
  for (int trial = 0; trial < 100; ++trial) {
    const auto perm = oracle::RandomPermutation(16, rng);
    const int i = static_cast<int>(rng() % b.cycles.size());
    const int j = (i + 1 + static_cast<int>(rng() % (b.cycles.size() - 1))) % b.cycles.size();
    const ParallelClass a = RelabelClass(b.cycles[i], perm);
    const ParallelClass c = RelabelClass(b.cycles[j], perm);
    const TwoC4Result r = MetaTwoC4(16, a, c);
    ExpectSameEdges({a, c}, {r.paths_a, r.paths_b, r.matching});
    ExpectClasses({r.paths_a, r.paths_b, r.matching}, 16, BlockKind::P4(), 2);
  }
}

TEST(MetaTwoC4Test, Deterministic) {
  const BlowUp b = C4Blowup(12);
  const TwoC4Result x = MetaTwoC4(12, b.cycles[1], b.cycles[2]);
  const TwoC4Result y = MetaTwoC4(12, b.cycles[1], b.cycles[2]);
  EXPECT_EQ(x.paths_a, y.paths_a);
  EXPECT_EQ(x.paths_b, y.paths_b);
  EXPECT_EQ(x.matching, y.matching);
}

TEST(MetaTwoC4Test, PreconditionViolations) {
  const BlowUp b = C4Blowup(8);
  const auto expect_precondition = [](auto&& fn) {
    try {
      fn();
      ADD_FAILURE() << "no throw";
    } catch (const UrdError& e) {
      EXPECT_EQ(e.code(), ErrorCode::kPrecondition);
    }
  };
  expect_precondition([&] { MetaTwoC4(8, b.cycles[0], b.cycles[0]); });
  expect_precondition([&] { MetaTwoC4(8, b.cycles[0], b.matching); });
  expect_precondition([&] { MetaMatchingC4(8, b.cycles[0], b.cycles[1]); });
  const ParallelClass partial = MakeClass(BlockKind::C4(), {{0, 2, 1, 3}});
  expect_precondition([&] { MetaTwoC4(8, partial, b.cycles[1]); });
}

TEST(MetaMatchingC4Test, BlowUpMatching) {
  for (int v : {8, 12, 16, 20}) {
    const BlowUp b = C4Blowup(v);
    const auto out = MetaMatchingC4(v, b.matching, b.cycles.back());
    ExpectSameEdges({b.matching, b.cycles.back()}, {out[0], out[1]});
    ExpectClasses({out[0], out[1]}, v, BlockKind::P4(), 2);
  }
}

TEST(MetaThreeC4Test, FourPathClasses) {
  for (int v : {8, 16}) {
    const BlowUp b = C4Blowup(v);
    const auto out = MetaThreeC4(v, b.cycles[0], b.cycles[1], b.cycles[2]);
    const std::vector<ParallelClass> outs(out.begin(), out.end());
    ExpectSameEdges({b.cycles[0], b.cycles[1], b.cycles[2]}, outs);
    ExpectClasses(outs, v, BlockKind::P4(), 4);
    EXPECT_EQ(oracle::CountEdges(outs).size(), static_cast<size_t>(3 * v));
  }
}

TEST(CycleMinusEdgeTest, StartsAtSmallerEndpoint) {
  const Block cyc{BlockKind::C4(), {0, 1, 2, 3}};
  EXPECT_EQ(CycleMinusEdge(cyc, Edge{1, 2}).vertices, (std::vector<int>{1, 0, 3, 2}));
  EXPECT_EQ(CycleMinusEdge(cyc, Edge{0, 3}).vertices, (std::vector<int>{0, 1, 2, 3}));
  EXPECT_THROW(CycleMinusEdge(cyc, Edge{0, 2}), UrdError);
}

TEST(MetaTwoK3Test, AffinePlaneOfOrderThree) {
  const auto classes = AffinePlaneClasses();
  ASSERT_EQ(oracle::CheckDecomposition({9, classes}), "");
  const auto out = MetaTwoK3(9, classes[0], classes[2]);
  const std::vector<ParallelClass> outs(out.begin(), out.end());
  ExpectSameEdges({classes[0], classes[2]}, outs);
  ExpectClasses(outs, 9, BlockKind::P3(), 3);
}

TEST(MetaTwoK3Test, TriangleClassesOfTwelve) {
  std::optional<Decomposition> d = CatalogLookup(12, Profile{Family::kK2P3K3, {1, 3, 3}});
  ASSERT_TRUE(d);
  std::vector<ParallelClass> tri;
  for (const ParallelClass& c : d->classes) {
    if (c.kind == BlockKind::K3()) tri.push_back(c);
  }
  ASSERT_EQ(tri.size(), 3u);
  const auto out = MetaTwoK3(12, tri[0], tri[1]);
  const std::vector<ParallelClass> outs(out.begin(), out.end());
  ExpectSameEdges({tri[0], tri[1]}, outs);
  ExpectClasses(outs, 12, BlockKind::P3(), 3);
  EXPECT_EQ(oracle::CountEdges(outs).size(), 24u);
}

TEST(CyclesKTest, ThreeMatchesTwoK3) {
  const auto classes = AffinePlaneClasses();
  const ConjectureOutcome r = MetaCyclesConjecture(9, 3, {classes[1], classes[3]});
  ASSERT_EQ(r.status, SearchStatus::kFound);
  ExpectSameEdges({classes[1], classes[3]}, r.classes);
  ExpectClasses(r.classes, 9, BlockKind::P3(), 3);
}

TEST(CyclesKTest, FourMatchesThreeC4) {
  const BlowUp b = C4Blowup(8);
  const ConjectureOutcome r = MetaCyclesConjecture(8, 4, {b.cycles[0], b.cycles[1], b.cycles[2]});
  ASSERT_EQ(r.status, SearchStatus::kFound);
  ExpectSameEdges({b.cycles[0], b.cycles[1], b.cycles[2]}, r.classes);
  ExpectClasses(r.classes, 8, BlockKind::P4(), 4);
}

TEST(CyclesKTest, FiveOnTenVertices) {
  std::mt19937_64 rng(10);
  const auto input = oracle::RandomCycleClasses(10, 5, 4, rng);
  ASSERT_TRUE(input);
  const ConjectureOutcome r = MetaCyclesConjecture(10, 5, *input, SearchBudget{60, -1, 1});
  if (r.status == SearchStatus::kFound) {
    ExpectSameEdges(*input, r.classes);
    ExpectClasses(r.classes, 10, BlockKind::Path(5), 5);
  } else {
    EXPECT_TRUE(r.classes.empty());
  }
}

TEST(CyclesKTest, RejectsWrongInput) {
  const BlowUp b = C4Blowup(8);
  EXPECT_THROW(MetaCyclesConjecture(8, 4, {b.cycles[0], b.cycles[1]}), UrdError);
  EXPECT_THROW(MetaCyclesConjecture(8, 2, {b.cycles[0]}), UrdError);
}

}  // namespace
}  // namespace urd
