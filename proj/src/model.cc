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

#include <algorithm>
#include <charconv>
#include <sstream>

namespace urd {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidOrder: return "invalid-order";
    case ErrorCode::kMalformedBlock: return "malformed-block";
    case ErrorCode::kInvalidParameters: return "invalid-parameters";
    case ErrorCode::kInadmissible: return "inadmissible";
    case ErrorCode::kKnownNonexistent: return "known-nonexistent";
    case ErrorCode::kNotASolution: return "not-a-solution";
    case ErrorCode::kNormalizationImpossible: return "normalization-impossible";
    case ErrorCode::kPrecondition: return "precondition";
    case ErrorCode::kInconsistent: return "inconsistent";
    case ErrorCode::kTimeout: return "timeout";
    case ErrorCode::kParse: return "parse-error";
    case ErrorCode::kInternal: return "internal-error";
  }
  return "unknown";
}

UrdError::UrdError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

Edge Edge::Of(int a, int b) {
  if (a == b) {
    throw UrdError(ErrorCode::kMalformedBlock,
                   "loop edge at vertex " + std::to_string(a));
  }
  return a < b ? Edge{a, b} : Edge{b, a};
}

std::string BlockKind::Name() const {
  if (shape == Shape::kPath && order == 2) return "k2";
  if (shape == Shape::kCycle && order == 3) return "k3";
  return (shape == Shape::kPath ? "p" : "c") + std::to_string(order);
}

std::optional<BlockKind> BlockKind::FromName(std::string_view name) {
  if (name.size() < 2) return std::nullopt;
  int k = 0;
  auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
  if (ec != std::errc() || ptr != name.data() + name.size()) return std::nullopt;
  BlockKind kind;
  switch (name[0]) {
    case 'k':
      if (k == 2) return K2();
      if (k == 3) return K3();
      return std::nullopt;
    case 'p': kind = Path(k); break;
    case 'c': kind = Cycle(k); break;
    default: return std::nullopt;
  }
  // p2 and c3 are spelled k2 and k3.
  if (!kind.valid() || kind == K2() || kind == K3()) return std::nullopt;
  return kind;
}

std::string_view FamilyName(Family family) {
  switch (family) {
    case Family::kK2P3K3: return "k2p3k3";
    case Family::kK2P4C4: return "k2p4c4";
    case Family::kP4C4: return "p4c4";
    case Family::kRaw: return "raw";
  }
  return "raw";
}

std::optional<Family> ParseFamily(std::string_view name) {
  for (Family f : {Family::kK2P3K3, Family::kK2P4C4, Family::kP4C4,
                   Family::kRaw}) {
    if (FamilyName(f) == name) return f;
  }
  return std::nullopt;
}

std::vector<BlockKind> FamilyKinds(Family family) {
  switch (family) {
    case Family::kK2P3K3:
      return {BlockKind::K2(), BlockKind::P3(), BlockKind::K3()};
    case Family::kK2P4C4:
      return {BlockKind::K2(), BlockKind::P4(), BlockKind::C4()};
    case Family::kP4C4:
      return {BlockKind::P4(), BlockKind::C4()};
    case Family::kRaw:
      return {};
  }
  return {};
}

Family InferFamily(const Decomposition& d) {
  bool k2 = false, p3k3 = false, p4c4 = false, other = false;
  for (const ParallelClass& c : d.classes) {
    if (c.kind == BlockKind::K2()) {
      k2 = true;
    } else if (c.kind == BlockKind::P3() || c.kind == BlockKind::K3()) {
      p3k3 = true;
    } else if (c.kind == BlockKind::P4() || c.kind == BlockKind::C4()) {
      p4c4 = true;
    } else {
      other = true;
    }
  }
  if (other || (p3k3 && p4c4)) return Family::kRaw;
  if (p4c4) return k2 ? Family::kK2P4C4 : Family::kP4C4;
  if (p3k3 || k2) return Family::kK2P3K3;
  return Family::kRaw;
}

Profile MakeProfile(Family family, std::vector<int> counts) {
  if (family == Family::kRaw) {
    throw UrdError(ErrorCode::kInvalidParameters, "raw family has no profile");
  }
  if (counts.size() != FamilyKinds(family).size()) {
    throw UrdError(ErrorCode::kInvalidParameters,
                   "profile for " + std::string(FamilyName(family)) +
                       " needs " + std::to_string(FamilyKinds(family).size()) +
                       " counts");
  }
  for (int c : counts) {
    if (c < 0) {
      throw UrdError(ErrorCode::kInvalidParameters, "negative class count");
    }
  }
  return Profile{family, std::move(counts)};
}

std::string FormatCounts(std::span<const int> counts) {
  std::ostringstream out;
  out << '(';
  for (size_t i = 0; i < counts.size(); ++i) {
    if (i) out << ',';
    out << counts[i];
  }
  out << ')';
  return out.str();
}

std::vector<Edge> CompleteGraphEdges(int v) {
  if (v < 2) {
    throw UrdError(ErrorCode::kInvalidOrder,
                   "complete graph needs v >= 2, got " + std::to_string(v));
  }
  std::vector<Edge> edges;
  edges.reserve(NumEdges(v));
  for (int u = 0; u < v; ++u) {
    for (int w = u + 1; w < v; ++w) edges.push_back({u, w});
  }
  return edges;
}

Block CanonicalizeBlock(const Block& b) {
  const int k = b.kind.order;
  if (!b.kind.valid() || static_cast<int>(b.vertices.size()) != k) {
    throw UrdError(ErrorCode::kMalformedBlock,
                   b.kind.Name() + " block needs " + std::to_string(k) +
                       " vertices, got " + std::to_string(b.vertices.size()));
  }
  std::vector<int> sorted = b.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0 ||
      std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw UrdError(ErrorCode::kMalformedBlock,
                   "repeated or negative vertex in " + b.kind.Name() + " block");
  }
  Block out{b.kind, b.vertices};
  std::vector<int>& t = out.vertices;
  if (b.kind.shape == Shape::kPath) {
    if (t.front() > t.back()) std::reverse(t.begin(), t.end());
  } else {
    std::rotate(t.begin(), std::min_element(t.begin(), t.end()), t.end());
    if (t[1] > t.back()) std::reverse(t.begin() + 1, t.end());
  }
  return out;
}

std::vector<Edge> BlockEdges(const Block& b) {
  const Block c = CanonicalizeBlock(b);
  const auto& t = c.vertices;
  std::vector<Edge> edges;
  edges.reserve(c.kind.num_edges());
  for (size_t i = 0; i + 1 < t.size(); ++i) edges.push_back(Edge::Of(t[i], t[i + 1]));
  if (c.kind.shape == Shape::kCycle) edges.push_back(Edge::Of(t.back(), t.front()));
  std::sort(edges.begin(), edges.end());
  return edges;
}

ParallelClass MakeClass(BlockKind kind, std::vector<Block> blocks) {
  for (Block& b : blocks) {
    if (b.kind != kind) {
      throw UrdError(ErrorCode::kMalformedBlock,
                     b.kind.Name() + " block in a " + kind.Name() + " class");
    }
    b = CanonicalizeBlock(b);
  }
  std::sort(blocks.begin(), blocks.end());
  return ParallelClass{kind, std::move(blocks)};
}

ParallelClass MakeClass(BlockKind kind,
                        const std::vector<std::vector<int>>& tuples) {
  std::vector<Block> blocks;
  blocks.reserve(tuples.size());
  for (const auto& t : tuples) blocks.push_back(Block{kind, t});
  return MakeClass(kind, std::move(blocks));
}

std::vector<Edge> ClassEdges(const ParallelClass& c) {
  std::vector<Edge> edges;
  for (const Block& b : c.blocks) {
    auto be = BlockEdges(b);
    edges.insert(edges.end(), be.begin(), be.end());
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

std::vector<Edge> DecompositionEdges(const Decomposition& d) {
  std::vector<Edge> edges;
  for (const ParallelClass& c : d.classes) {
    auto ce = ClassEdges(c);
    edges.insert(edges.end(), ce.begin(), ce.end());
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

ParallelClass RelabelClass(const ParallelClass& c, std::span<const int> perm) {
  std::vector<Block> blocks = c.blocks;
  for (Block& b : blocks) {
    for (int& x : b.vertices) x = perm[x];
  }
  return MakeClass(c.kind, std::move(blocks));
}

Decomposition RelabelDecomposition(const Decomposition& d,
                                   std::span<const int> perm) {
  Decomposition out{d.v, {}};
  for (const ParallelClass& c : d.classes) out.classes.push_back(RelabelClass(c, perm));
  return out;
}

bool SameDecomposition(const Decomposition& a, const Decomposition& b) {
  if (a.v != b.v || a.classes.size() != b.classes.size()) return false;
  auto canonical = [](const Decomposition& d) {
    std::vector<ParallelClass> cs;
    for (const ParallelClass& c : d.classes) cs.push_back(MakeClass(c.kind, c.blocks));
    std::sort(cs.begin(), cs.end());
    return cs;
  };
  return canonical(a) == canonical(b);
}

}  // namespace urd
