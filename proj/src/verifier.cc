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

#include "urd/verifier.h"

#include <algorithm>
#include <sstream>

namespace urd {
namespace {

std::string VertexList(const std::vector<int>& xs) {
  std::ostringstream out;
  for (size_t i = 0; i < xs.size() && i < 8; ++i) out << (i ? "," : "") << xs[i];
  if (xs.size() > 8) out << ",...";
  return out.str();
}

std::string TupleText(const Block& b) {
  std::ostringstream out;
  out << b.kind.Name() << '(';
  for (size_t i = 0; i < b.vertices.size(); ++i) out << (i ? "-" : "") << b.vertices[i];
  out << ')';
  return out.str();
}

// Edges straight from the tuple; the caller has checked the shape.
std::vector<std::pair<int, int>> RawEdges(const Block& b) {
  std::vector<std::pair<int, int>> out;
  const auto& t = b.vertices;
  for (size_t i = 0; i + 1 < t.size(); ++i) out.emplace_back(t[i], t[i + 1]);
  if (b.kind.shape == Shape::kCycle) out.emplace_back(t.back(), t.front());
  return out;
}

bool ShapeOk(const Block& b, int v) {
  if (!b.kind.valid() || static_cast<int>(b.vertices.size()) != b.kind.order) return false;
  std::vector<int> s = b.vertices;
  std::sort(s.begin(), s.end());
  return s.front() >= 0 && s.back() < v &&
         std::adjacent_find(s.begin(), s.end()) == s.end();
}

}  // namespace

std::string_view ViolationCodeName(ViolationCode code) {
  switch (code) {
    case ViolationCode::kBadBlockShape: return "BadBlockShape";
    case ViolationCode::kRepeatedVertexInClass: return "RepeatedVertexInClass";
    case ViolationCode::kNotSpanning: return "NotSpanning";
    case ViolationCode::kEdgeReuse: return "EdgeReuse";
    case ViolationCode::kIncompleteCover: return "IncompleteCover";
    case ViolationCode::kProfileMismatch: return "ProfileMismatch";
    case ViolationCode::kWrongOrder: return "WrongOrder";
  }
  return "Unknown";
}

bool VerificationReport::Has(ViolationCode code) const {
  return std::any_of(violations.begin(), violations.end(),
                     [&](const Violation& x) { return x.code == code; });
}

void VerificationReport::Add(ViolationCode code, std::string detail) {
  ok = false;
  violations.push_back({code, std::move(detail)});
}

void VerificationReport::Merge(const VerificationReport& other) {
  for (const Violation& x : other.violations) Add(x.code, x.detail);
}

std::string VerificationReport::Text() const {
  if (ok) return "ok\n";
  std::string out;
  for (const Violation& x : violations) {
    out += std::string(ViolationCodeName(x.code)) + ": " + x.detail + "\n";
  }
  return out;
}

std::string VerificationReport::MachineLines() const {
  std::string out;
  for (const Violation& x : violations) {
    out += std::string(ViolationCodeName(x.code)) + "\t" + x.detail + "\n";
  }
  return out;
}

VerificationReport VerifyClass(const ParallelClass& c, int v) {
  VerificationReport r;
  if (v < 1) {
    r.Add(ViolationCode::kWrongOrder, "order " + std::to_string(v));
    return r;
  }
  if (!c.kind.valid()) {
    r.Add(ViolationCode::kBadBlockShape, "invalid class kind");
    return r;
  }
  if (v % c.kind.order != 0) {
    r.Add(ViolationCode::kWrongOrder, c.kind.Name() + " class cannot span " +
                                          std::to_string(v) + " vertices");
  }
  std::vector<int> hits(v, 0);
  for (const Block& b : c.blocks) {
    if (b.kind != c.kind) {
      r.Add(ViolationCode::kBadBlockShape,
            TupleText(b) + " in a " + c.kind.Name() + " class");
      continue;
    }
    if (!ShapeOk(b, v)) {
      const bool out_of_range = std::any_of(b.vertices.begin(), b.vertices.end(),
                                            [&](int x) { return x < 0 || x >= v; });
      r.Add(out_of_range ? ViolationCode::kWrongOrder : ViolationCode::kBadBlockShape,
            TupleText(b));
      continue;
    }
    for (int x : b.vertices) ++hits[x];
  }
  std::vector<int> repeated, missing;
  for (int x = 0; x < v; ++x) {
    if (hits[x] > 1) repeated.push_back(x);
    if (hits[x] == 0) missing.push_back(x);
  }
  if (!repeated.empty()) {
    r.Add(ViolationCode::kRepeatedVertexInClass,
          c.kind.Name() + " class repeats vertices " + VertexList(repeated));
  }
  if (!missing.empty()) {
    r.Add(ViolationCode::kNotSpanning,
          c.kind.Name() + " class misses vertices " + VertexList(missing));
  }
  return r;
}

VerificationReport Verify(const Decomposition& d,
                          const std::optional<Profile>& expected,
                          bool require_complex) {
  VerificationReport r;
  const int v = d.v;
  if (v < 2) {
    r.Add(ViolationCode::kWrongOrder, "order " + std::to_string(v));
    return r;
  }
  // owner[u * v + w] = 1 + index of the class that used edge {u, w}.
  std::vector<int> owner(static_cast<size_t>(v) * v, 0);
  long covered = 0;
  long weighted = 0;  // sum over classes of (blocks per class) * (edges per block)
  for (size_t ci = 0; ci < d.classes.size(); ++ci) {
    const ParallelClass& c = d.classes[ci];
    VerificationReport cr = VerifyClass(c, v);
    for (Violation& x : cr.violations) x.detail = "class " + std::to_string(ci) + ": " + x.detail;
    r.Merge(cr);
    if (c.kind.valid() && v % c.kind.order == 0) {
      weighted += static_cast<long>(v / c.kind.order) * c.kind.num_edges();
    }
    for (const Block& b : c.blocks) {
      if (b.kind != c.kind || !ShapeOk(b, v)) continue;
      for (auto [a, bb] : RawEdges(b)) {
        const int u = std::min(a, bb), w = std::max(a, bb);
        int& slot = owner[static_cast<size_t>(u) * v + w];
        if (slot) {
          r.Add(ViolationCode::kEdgeReuse,
                "edge " + std::to_string(u) + "-" + std::to_string(w) +
                    " in classes " + std::to_string(slot - 1) + " and " +
                    std::to_string(ci));
        } else {
          slot = static_cast<int>(ci) + 1;
          ++covered;
        }
      }
    }
  }
  if (covered != NumEdges(v)) {
    r.Add(ViolationCode::kIncompleteCover,
          std::to_string(NumEdges(v) - covered) + " of " + std::to_string(NumEdges(v)) +
              " edges uncovered");
  } else if (weighted != NumEdges(v)) {
    r.Add(ViolationCode::kIncompleteCover,
          "class edge counts sum to " + std::to_string(weighted) + ", expected " +
              std::to_string(NumEdges(v)));
  }

  if (!expected && !require_complex) return r;
  const Family family = expected ? expected->family : InferFamily(d);
  const std::vector<BlockKind> kinds = FamilyKinds(family);
  std::vector<int> counts(kinds.size(), 0);
  for (const ParallelClass& c : d.classes) {
    auto it = std::find(kinds.begin(), kinds.end(), c.kind);
    if (it == kinds.end()) {
      r.Add(ViolationCode::kProfileMismatch,
            c.kind.Name() + " class outside family " + std::string(FamilyName(family)));
    } else {
      ++counts[it - kinds.begin()];
    }
  }
  if (expected && counts != expected->counts) {
    r.Add(ViolationCode::kProfileMismatch,
          "profile " + FormatCounts(counts) + ", expected " + FormatCounts(expected->counts));
  }
  if (require_complex && std::count(counts.begin(), counts.end(), 0) > 0) {
    r.Add(ViolationCode::kProfileMismatch,
          "complex decomposition needs every kind, got " + FormatCounts(counts));
  }
  return r;
}

Profile ProfileOf(const Decomposition& d, Family family) {
  const VerificationReport r = Verify(d);
  for (const Violation& x : r.violations) {
    if (x.code != ViolationCode::kIncompleteCover) {
      throw UrdError(ErrorCode::kInvalidParameters,
                     "cannot profile an invalid decomposition: " + x.detail);
    }
  }
  const std::vector<BlockKind> kinds = FamilyKinds(family);
  std::vector<int> counts(kinds.size(), 0);
  for (const ParallelClass& c : d.classes) {
    auto it = std::find(kinds.begin(), kinds.end(), c.kind);
    if (it == kinds.end()) {
      throw UrdError(ErrorCode::kInvalidParameters,
                     c.kind.Name() + " class outside family " +
                         std::string(FamilyName(family)));
    }
    ++counts[it - kinds.begin()];
  }
  return Profile{family, counts};
}

Profile ProfileOf(const Decomposition& d) { return ProfileOf(d, InferFamily(d)); }

}  // namespace urd
