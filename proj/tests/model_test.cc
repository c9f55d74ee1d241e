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

#include "urd/model.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "oracles.h"

namespace urd {
namespace {

TEST(EdgeTest, OfIsCanonical) {
  EXPECT_EQ(Edge::Of(5, 2), (Edge{2, 5}));
  EXPECT_EQ(Edge::Of(2, 5), (Edge{2, 5}));
}

TEST(EdgeTest, LoopThrows) {
  try {
    Edge::Of(3, 3);
    FAIL();
  } catch (const UrdError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kMalformedBlock);
  }
}

TEST(EdgeTest, IndexIsDenseBijection) {
  for (int v : {2, 3, 7, 12}) {
    const std::vector<Edge> edges = CompleteGraphEdges(v);
    ASSERT_EQ(static_cast<int>(edges.size()), NumEdges(v));
    for (int i = 0; i < NumEdges(v); ++i) EXPECT_EQ(EdgeIndex(v, edges[i]), i);
  }
}

TEST(EdgeTest, CompleteGraphNeedsTwoVertices) {
  EXPECT_THROW(CompleteGraphEdges(1), UrdError);
}

TEST(BlockKindTest, NamesRoundTrip) {
  for (BlockKind k : {BlockKind::K2(), BlockKind::P3(), BlockKind::P4(), BlockKind::K3(),
                      BlockKind::C4(), BlockKind::Path(7), BlockKind::Cycle(5)}) {
    EXPECT_EQ(BlockKind::FromName(k.Name()), k) << k.Name();
  }
  EXPECT_EQ(BlockKind::K2().Name(), "k2");
  EXPECT_EQ(BlockKind::K3().Name(), "k3");
  EXPECT_EQ(BlockKind::Cycle(5).Name(), "c5");
}

TEST(BlockKindTest, RejectsAliasesAndJunk) {
  EXPECT_FALSE(BlockKind::FromName("p2"));
  EXPECT_FALSE(BlockKind::FromName("c3"));
  EXPECT_FALSE(BlockKind::FromName("p1"));
  EXPECT_FALSE(BlockKind::FromName("x4"));
  EXPECT_FALSE(BlockKind::FromName("c"));
}

TEST(BlockKindTest, EdgeCounts) {
  EXPECT_EQ(BlockKind::K2().num_edges(), 1);
  EXPECT_EQ(BlockKind::P4().num_edges(), 3);
  EXPECT_EQ(BlockKind::K3().num_edges(), 3);
  EXPECT_EQ(BlockKind::C4().num_edges(), 4);
}

TEST(CanonicalizeTest, PathReversedWhenFrontIsLarger) {
  const Block b = CanonicalizeBlock({BlockKind::P4(), {5, 1, 2, 0}});
  EXPECT_EQ(b.vertices, (std::vector<int>{0, 2, 1, 5}));
}

TEST(CanonicalizeTest, CycleRotatedAndReflected) {
  // 3-1-4-0: rotate to 0-3-1-4, then reflect so the second vertex is the
  // smaller neighbour of 0.
  const Block b = CanonicalizeBlock({BlockKind::C4(), {3, 1, 4, 0}});
  EXPECT_EQ(b.vertices, (std::vector<int>{0, 3, 1, 4}));
  const Block r = CanonicalizeBlock({BlockKind::C4(), {2, 0, 4, 1}});
  EXPECT_EQ(r.vertices, (std::vector<int>{0, 2, 1, 4}));
}

TEST(CanonicalizeTest, AllRotationsAgree) {
  std::vector<int> cyc{4, 7, 1, 9, 3};
  const Block ref = CanonicalizeBlock({BlockKind::Cycle(5), cyc});
  for (int r = 0; r < 5; ++r) {
    std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
    EXPECT_EQ(CanonicalizeBlock({BlockKind::Cycle(5), cyc}), ref);
    std::vector<int> rev(cyc.rbegin(), cyc.rend());
    EXPECT_EQ(CanonicalizeBlock({BlockKind::Cycle(5), rev}), ref);
  }
}

TEST(CanonicalizeTest, MalformedBlocksThrow) {
  EXPECT_THROW(CanonicalizeBlock({BlockKind::C4(), {0, 1, 2}}), UrdError);
  EXPECT_THROW(CanonicalizeBlock({BlockKind::P3(), {0, 1, 0}}), UrdError);
}

TEST(ClassTest, EdgesOfCycleAndPath) {
  const ParallelClass c = MakeClass(BlockKind::C4(), {{0, 1, 2, 3}});
  EXPECT_EQ(ClassEdges(c), (std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}, {2, 3}}));
  const ParallelClass p = MakeClass(BlockKind::P3(), {{2, 0, 1}});
  EXPECT_EQ(ClassEdges(p), (std::vector<Edge>{{0, 1}, {0, 2}}));
}

TEST(FamilyTest, ParseAndName) {
  for (Family f : {Family::kK2P3K3, Family::kK2P4C4, Family::kP4C4, Family::kRaw}) {
    EXPECT_EQ(ParseFamily(FamilyName(f)), f);
  }
  EXPECT_FALSE(ParseFamily("k2p3"));
}

TEST(FamilyTest, Infer) {
  const ParallelClass m = MakeClass(BlockKind::K2(), {{0, 1}, {2, 3}});
  const ParallelClass p4 = MakeClass(BlockKind::P4(), {{0, 1, 2, 3}});
  const ParallelClass c4 = MakeClass(BlockKind::C4(), {{0, 1, 2, 3}});
  const ParallelClass k3 = MakeClass(BlockKind::K3(), {{0, 1, 2}});
  const ParallelClass c5 = MakeClass(BlockKind::Cycle(5), {{0, 1, 2, 3, 4}});
  EXPECT_EQ(InferFamily({4, {m}}), Family::kK2P3K3);
  EXPECT_EQ(InferFamily({4, {m, p4}}), Family::kK2P4C4);
  EXPECT_EQ(InferFamily({4, {p4, c4}}), Family::kP4C4);
  EXPECT_EQ(InferFamily({6, {m, k3}}), Family::kK2P3K3);
  EXPECT_EQ(InferFamily({6, {k3, c4}}), Family::kRaw);
  EXPECT_EQ(InferFamily({5, {c5}}), Family::kRaw);
}

TEST(ProfileTest, MakeProfileChecksArity) {
  EXPECT_NO_THROW(MakeProfile(Family::kP4C4, {2, 2}));
  EXPECT_THROW(MakeProfile(Family::kP4C4, {2, 2, 1}), UrdError);
  EXPECT_THROW(MakeProfile(Family::kK2P3K3, {1, -1, 3}), UrdError);
  EXPECT_THROW(MakeProfile(Family::kRaw, {}), UrdError);
}

TEST(ProfileTest, FormatCounts) {
  const std::vector<int> c{1, 3, 3};
  EXPECT_EQ(FormatCounts(c), "(1,3,3)");
}

TEST(RelabelTest, InversePermutationRestores) {
  std::mt19937_64 rng(7);
  const Decomposition d{8,
                        {MakeClass(BlockKind::C4(), {{0, 2, 1, 3}, {4, 6, 5, 7}}),
                         MakeClass(BlockKind::K2(), {{0, 1}, {2, 3}, {4, 5}, {6, 7}})}};
  for (int trial = 0; trial < 50; ++trial) {
    const std::vector<int> perm = oracle::RandomPermutation(8, rng);
    std::vector<int> inv(8);
    for (int i = 0; i < 8; ++i) inv[perm[i]] = i;
    const Decomposition moved = RelabelDecomposition(d, perm);
    EXPECT_EQ(oracle::CountEdges(moved.classes).size(), oracle::CountEdges(d.classes).size());
    EXPECT_TRUE(SameDecomposition(RelabelDecomposition(moved, inv), d));
  }
}

TEST(SameDecompositionTest, ClassOrderIgnored) {
  const ParallelClass a = MakeClass(BlockKind::K2(), {{0, 1}, {2, 3}});
  const ParallelClass b = MakeClass(BlockKind::K2(), {{0, 2}, {1, 3}});
  EXPECT_TRUE(SameDecomposition({4, {a, b}}, {4, {b, a}}));
  EXPECT_FALSE(SameDecomposition({4, {a, b}}, {4, {a, a}}));
  EXPECT_FALSE(SameDecomposition({4, {a}}, {5, {a}}));
}

TEST(ErrorTest, MessageCarriesCodeName) {
  const UrdError e(ErrorCode::kKnownNonexistent, "x");
  EXPECT_EQ(std::string(e.what()), "known-nonexistent: x");
  EXPECT_EQ(ErrorCodeName(ErrorCode::kTimeout), "timeout");
}

}  // namespace
}  // namespace urd
