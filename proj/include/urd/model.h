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

#ifndef URD_MODEL_H_
#define URD_MODEL_H_

// Data model shared by every module: vertices are 0..v-1, edges are stored
// with u < w, and blocks carry an ordered vertex tuple whose canonical form
// is unique per block (sorted for K2/K3, smaller endpoint first for paths,
// minimum vertex first and smaller neighbour second for cycles).

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace urd {

enum class ErrorCode {
  kInvalidOrder,
  kMalformedBlock,
  kInvalidParameters,
  kInadmissible,
  kKnownNonexistent,
  kNotASolution,
  kNormalizationImpossible,
  kPrecondition,
  kInconsistent,
  kTimeout,
  kParse,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

class UrdError : public std::runtime_error {
 public:
  UrdError(ErrorCode code, const std::string& message);
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

struct Edge {
  int u = 0;
  int w = 0;

  // Canonical edge {a, b}; throws kMalformedBlock on a loop.
  static Edge Of(int a, int b);

  auto operator<=>(const Edge&) const = default;
};

enum class Shape : std::uint8_t { kPath, kCycle };

// A block kind is a path or cycle on `order` vertices. K2 is the 2-vertex
// path and K3 the 3-cycle.
struct BlockKind {
  Shape shape = Shape::kPath;
  int order = 2;

  static constexpr BlockKind K2() { return {Shape::kPath, 2}; }
  static constexpr BlockKind P3() { return {Shape::kPath, 3}; }
  static constexpr BlockKind P4() { return {Shape::kPath, 4}; }
  static constexpr BlockKind K3() { return {Shape::kCycle, 3}; }
  static constexpr BlockKind C4() { return {Shape::kCycle, 4}; }
  static constexpr BlockKind Path(int k) { return {Shape::kPath, k}; }
  static constexpr BlockKind Cycle(int k) { return {Shape::kCycle, k}; }

  int num_edges() const { return shape == Shape::kPath ? order - 1 : order; }
  bool valid() const {
    return shape == Shape::kPath ? order >= 2 : order >= 3;
  }

  // "k2", "p3", "p4", "k3", "c4", "p<k>", "c<k>".
  std::string Name() const;
  static std::optional<BlockKind> FromName(std::string_view name);

  auto operator<=>(const BlockKind&) const = default;
};

struct Block {
  BlockKind kind;
  std::vector<int> vertices;

  auto operator<=>(const Block&) const = default;
};

struct ParallelClass {
  BlockKind kind;
  std::vector<Block> blocks;

  auto operator<=>(const ParallelClass&) const = default;
};

struct Decomposition {
  int v = 0;
  std::vector<ParallelClass> classes;
};

enum class Family { kK2P3K3, kK2P4C4, kP4C4, kRaw };

std::string_view FamilyName(Family family);
std::optional<Family> ParseFamily(std::string_view name);
// Kinds in the family's canonical count order; empty for kRaw.
std::vector<BlockKind> FamilyKinds(Family family);

// Class-count vector: (m,p,t) for k2p3k3, (m,p,c) for k2p4c4, (p,c) for p4c4.
struct Profile {
  Family family = Family::kRaw;
  std::vector<int> counts;

  bool operator==(const Profile&) const = default;
};

// Family whose kinds cover every class of `d`: k2p3k3 when a P3 or K3 class
// is present (or only K2 classes), k2p4c4 for K2 with P4/C4, p4c4 for P4/C4
// alone, raw otherwise.
Family InferFamily(const Decomposition& d);

// Throws kInvalidParameters if counts do not fit the family.
Profile MakeProfile(Family family, std::vector<int> counts);
std::string FormatCounts(std::span<const int> counts);

// ---- Edges of K_v -------------------------------------------------------

inline int NumEdges(int v) { return v * (v - 1) / 2; }
// Dense index of a canonical edge in K_v, row-major over u < w.
inline int EdgeIndex(int v, Edge e) {
  return e.u * v - e.u * (e.u + 1) / 2 + (e.w - e.u - 1);
}

std::vector<Edge> CompleteGraphEdges(int v);

// ---- Blocks and classes -------------------------------------------------

Block CanonicalizeBlock(const Block& b);
std::vector<Edge> BlockEdges(const Block& b);

// Canonicalizes every block and sorts them; no structural checks beyond
// block shape.
ParallelClass MakeClass(BlockKind kind, std::vector<Block> blocks);
ParallelClass MakeClass(BlockKind kind,
                        const std::vector<std::vector<int>>& tuples);
std::vector<Edge> ClassEdges(const ParallelClass& c);
std::vector<Edge> DecompositionEdges(const Decomposition& d);

// Applies vertex map `perm` (perm[old] = new) and re-canonicalizes.
ParallelClass RelabelClass(const ParallelClass& c, std::span<const int> perm);
Decomposition RelabelDecomposition(const Decomposition& d,
                                   std::span<const int> perm);

// Equality on canonical forms, classes compared as a multiset.
bool SameDecomposition(const Decomposition& a, const Decomposition& b);

}  // namespace urd

#endif  // URD_MODEL_H_
