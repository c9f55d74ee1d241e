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

#include "urd/spectrum.h"

#include <algorithm>

#include "urd/constructions.h"
#include "urd/metamorphosis.h"
#include "urd/verifier.h"

namespace urd {
namespace {

bool Contains(const AdmissibleSet& s, const std::vector<int>& t) {
  return std::find(s.tuples.begin(), s.tuples.end(), t) != s.tuples.end();
}

Decomposition Finish(int v, std::vector<ParallelClass> classes, const Profile& profile) {
  Decomposition d{v, std::move(classes)};
  const VerificationReport r = Verify(d, profile);
  if (!r.ok) {
    throw UrdError(ErrorCode::kInternal, "pipeline produced an invalid design: " +
                                             r.violations.front().detail);
  }
  return d;
}

void RequireAdmissible(Family family, int v, const std::vector<int>& counts) {
  if (KnownNonexistent(family, v, counts)) {
    throw UrdError(ErrorCode::kKnownNonexistent,
                   std::string(FamilyName(family)) + " " + FormatCounts(counts) +
                       " does not exist at v=" + std::to_string(v));
  }
  const AdmissibleSet s = family == Family::kP4C4 ? AdmissibleP4C4(v)
                                                  : Admissible(family, v, false);
  if (!Contains(s, counts)) {
    std::string why = s.diagnostic.empty() ? "" : " (" + s.diagnostic + ")";
    throw UrdError(ErrorCode::kInadmissible,
                   std::string(FamilyName(family)) + " " + FormatCounts(counts) +
                       " is not admissible at v=" + std::to_string(v) + why);
  }
}

}  // namespace

AdmissibleSet AdmissibleK2P3K3(int v, bool complex_only) {
  AdmissibleSet s{v, Family::kK2P3K3, {}, complex_only, ""};
  if (v < 6 || v % 6 != 0) {
    s.diagnostic = "v must be a positive multiple of 6";
    return s;
  }
  if (complex_only && v < 12) {
    s.diagnostic = "complex designs need v >= 12";
    return s;
  }
  for (int m = v - 1; m >= 1; m -= 2) {
    for (int p = 3 * ((3 * v - 3 - 3 * m) / 12); p >= 0; p -= 3) {
      const int rest = 3 * v - 3 - 3 * m - 4 * p;
      if (rest < 0 || rest % 6 != 0) continue;
      const int t = rest / 6;
      if (complex_only && (p == 0 || t == 0)) continue;
      if (!complex_only && KnownNonexistent(Family::kK2P3K3, v, {m, p, t})) continue;
      s.tuples.push_back({m, p, t});
    }
  }
  return s;
}

AdmissibleSet AdmissibleK2P4C4(int v, bool complex_only) {
  AdmissibleSet s{v, Family::kK2P4C4, {}, complex_only, ""};
  if (v < 4 || v % 4 != 0) {
    s.diagnostic = "v must be a positive multiple of 4";
    return s;
  }
  if (complex_only && v < 8) {
    s.diagnostic = "complex designs need v >= 8";
    return s;
  }
  const int rhs = 2 * v - 2;
  for (int m = rhs / 2; m >= 0; --m) {
    for (int p = (rhs - 2 * m) / 3; p >= 0; --p) {
      const int rest = rhs - 2 * m - 3 * p;
      if (rest % 4 != 0) continue;
      const int c = rest / 4;
      if (p % 2 != 0) continue;
      if (p % 4 == 2 && m % 2 != 0) continue;
      if (complex_only && (m == 0 || p == 0 || c == 0)) continue;
      s.tuples.push_back({m, p, c});
    }
  }
  return s;
}

AdmissibleSet AdmissibleP4C4(int v) {
  AdmissibleSet s{v, Family::kP4C4, {}, true, ""};
  if (v < 4 || v % 4 != 0) {
    s.diagnostic = "v must be a positive multiple of 4";
    return s;
  }
  const int rhs = 2 * v - 2;
  for (int p = rhs / 3; p >= 1; --p) {
    const int rest = rhs - 3 * p;
    if (rest < 4 || rest % 4 != 0) continue;
    if (p % 4 != 2) {
      throw UrdError(ErrorCode::kInternal, "p4c4 solution with p != 2 mod 4");
    }
    s.tuples.push_back({p, rest / 4});
  }
  return s;
}

AdmissibleSet Admissible(Family family, int v, bool complex_only) {
  switch (family) {
    case Family::kK2P3K3: return AdmissibleK2P3K3(v, complex_only);
    case Family::kK2P4C4: return AdmissibleK2P4C4(v, complex_only);
    case Family::kP4C4: return AdmissibleP4C4(v);
    case Family::kRaw: break;
  }
  throw UrdError(ErrorCode::kInvalidParameters, "raw family has no spectrum");
}

bool KnownNonexistent(Family family, int v, const std::vector<int>& counts) {
  if (family != Family::kK2P3K3 || counts.size() != 3) return false;
  // Complex designs need v >= 12; no nearly Kirkman triple system of order 6
  // or 12.
  const bool complex = counts[0] > 0 && counts[1] > 0 && counts[2] > 0;
  if (v == 6 && complex) return true;
  if (v == 6 && counts == std::vector<int>{1, 0, 2}) return true;
  if (v == 12 && counts == std::vector<int>{1, 0, 5}) return true;
  return false;
}

std::array<ParallelClass, 2> SplitC4Class(const ParallelClass& c) {
  if (c.kind != BlockKind::C4()) {
    throw UrdError(ErrorCode::kPrecondition, "can only split a C4 class");
  }
  std::vector<std::vector<int>> even, odd;
  for (const Block& b : c.blocks) {
    const auto& t = b.vertices;
    even.push_back({t[0], t[1]});
    even.push_back({t[2], t[3]});
    odd.push_back({t[1], t[2]});
    odd.push_back({t[3], t[0]});
  }
  return {MakeClass(BlockKind::K2(), even), MakeClass(BlockKind::K2(), odd)};
}

Decomposition ConstructK2P3K3(int v, int m, int p, int t, const SearchBudget& budget) {
  const std::vector<int> counts{m, p, t};
  RequireAdmissible(Family::kK2P3K3, v, counts);
  const Profile profile{Family::kK2P3K3, counts};
  if (auto d = CatalogLookup(v, profile)) return Finish(v, std::move(d->classes), profile);

  const int x = p / 3;
  std::vector<ParallelClass> matchings, triangles;
  if (v == 12 && m == 1) {
    // Only the catalog design supplies a single matching at v=12; spend its
    // triangle classes on P3s.
    auto base = CatalogLookup(12, Profile{Family::kK2P3K3, {1, 3, 3}});
    if (!base || p < 3) {
      throw UrdError(ErrorCode::kInternal, "catalog lacks the (1,3,3) design at v=12");
    }
    std::vector<ParallelClass> paths;
    for (ParallelClass& c : base->classes) {
      if (c.kind == BlockKind::K2()) matchings.push_back(c);
      if (c.kind == BlockKind::P3()) paths.push_back(c);
      if (c.kind == BlockKind::K3()) triangles.push_back(c);
    }
    for (int j = 0; 3 * j + 3 < p; ++j) {
      auto three = MetaTwoK3(v, triangles[2 * j], triangles[2 * j + 1], budget);
      paths.insert(paths.end(), three.begin(), three.end());
    }
    triangles.erase(triangles.begin(), triangles.begin() + 2 * (x - 1));
    std::vector<ParallelClass> out = matchings;
    out.insert(out.end(), paths.begin(), paths.end());
    out.insert(out.end(), triangles.begin(), triangles.end());
    return Finish(v, std::move(out), profile);
  }

  const ReesResult rees = ReesSearch(v, m, budget);
  if (rees.status == SearchStatus::kBudgetExceeded) {
    throw UrdError(ErrorCode::kTimeout,
                   "matching/triangle search for v=" + std::to_string(v) +
                       " m=" + std::to_string(m) + " ran out of budget");
  }
  if (rees.status == SearchStatus::kExhausted) {
    throw UrdError(ErrorCode::kInternal, "matching/triangle search exhausted");
  }
  matchings = rees.system->matchings;
  triangles = rees.system->triangles;
  std::vector<ParallelClass> out = matchings;
  for (int j = 0; j < x; ++j) {
    auto three = MetaTwoK3(v, triangles[2 * j], triangles[2 * j + 1], budget);
    out.insert(out.end(), three.begin(), three.end());
  }
  out.insert(out.end(), triangles.begin() + 2 * x, triangles.end());
  return Finish(v, std::move(out), profile);
}

Decomposition ConstructK2P4C4(int v, int m, int p, int c) {
  const std::vector<int> counts{m, p, c};
  RequireAdmissible(Family::kK2P4C4, v, counts);
  const Profile profile{Family::kK2P4C4, counts};
  if (m == 0) {
    Decomposition d = ConstructP4C4(v, p, c);
    return Finish(v, std::move(d.classes), profile);
  }
  const int x = p / 2;
  BlowUp blow = C4Blowup(v);
  const std::vector<ParallelClass>& cyc = blow.cycles;
  std::vector<ParallelClass> matchings{blow.matching};
  std::vector<ParallelClass> paths;
  size_t next = 0;
  for (int j = 0; j < x / 2; ++j, next += 3) {
    auto four = MetaThreeC4(v, cyc[next], cyc[next + 1], cyc[next + 2]);
    paths.insert(paths.end(), four.begin(), four.end());
  }
  if (x % 2 == 1) {
    TwoC4Result two = MetaTwoC4(v, cyc[next], cyc[next + 1]);
    paths.push_back(std::move(two.paths_a));
    paths.push_back(std::move(two.paths_b));
    matchings.push_back(std::move(two.matching));
    next += 2;
  }
  const int remaining = static_cast<int>(cyc.size() - next);
  if (remaining < c) {
    throw UrdError(ErrorCode::kInadmissible, "not enough C4 classes left");
  }
  for (int j = 0; j < remaining - c; ++j, ++next) {
    auto two = SplitC4Class(cyc[next]);
    matchings.insert(matchings.end(), two.begin(), two.end());
  }
  std::vector<ParallelClass> out = std::move(matchings);
  out.insert(out.end(), paths.begin(), paths.end());
  out.insert(out.end(), cyc.begin() + next, cyc.end());
  return Finish(v, std::move(out), profile);
}

Decomposition ConstructP4C4(int v, int p, int c) {
  const std::vector<int> counts{p, c};
  // Pure P4 factorizations (c = 0) come out of the same pipeline.
  const bool pure_paths = v % 4 == 0 && v >= 4 && c == 0 && 3 * p == 2 * v - 2 &&
                          p % 4 == 2;
  if (!pure_paths) RequireAdmissible(Family::kP4C4, v, counts);
  const Profile profile{Family::kP4C4, counts};
  const int x = (p - 2) / 4;
  BlowUp blow = C4Blowup(v);
  const std::vector<ParallelClass>& cyc = blow.cycles;
  auto first = MetaMatchingC4(v, blow.matching, cyc[0]);
  std::vector<ParallelClass> out(first.begin(), first.end());
  size_t next = 1;
  for (int j = 0; j < x; ++j, next += 3) {
    auto four = MetaThreeC4(v, cyc[next], cyc[next + 1], cyc[next + 2]);
    out.insert(out.end(), four.begin(), four.end());
  }
  if (cyc.size() - next != static_cast<size_t>(c)) {
    throw UrdError(ErrorCode::kInternal, "C4 class budget does not match c");
  }
  out.insert(out.end(), cyc.begin() + next, cyc.end());
  return Finish(v, std::move(out), profile);
}

Decomposition Construct(int v, const Profile& profile, const SearchBudget& budget) {
  const auto& n = profile.counts;
  switch (profile.family) {
    case Family::kK2P3K3:
      if (n.size() == 3) return ConstructK2P3K3(v, n[0], n[1], n[2], budget);
      break;
    case Family::kK2P4C4:
      if (n.size() == 3) return ConstructK2P4C4(v, n[0], n[1], n[2]);
      break;
    case Family::kP4C4:
      if (n.size() == 2) return ConstructP4C4(v, n[0], n[1]);
      break;
    case Family::kRaw:
      break;
  }
  throw UrdError(ErrorCode::kInvalidParameters, "profile does not fit its family");
}

}  // namespace urd
