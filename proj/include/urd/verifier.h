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

#ifndef URD_VERIFIER_H_
#define URD_VERIFIER_H_

// Independent validation of parallel classes and decompositions. Works on
// raw vertex tuples and only relies on the core data types, so it can check
// the output of every construction path.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "urd/model.h"

namespace urd {

enum class ViolationCode {
  kBadBlockShape,
  kRepeatedVertexInClass,
  kNotSpanning,
  kEdgeReuse,
  kIncompleteCover,
  kProfileMismatch,
  kWrongOrder,
};

std::string_view ViolationCodeName(ViolationCode code);

struct Violation {
  ViolationCode code;
  std::string detail;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;

  bool Has(ViolationCode code) const;
  void Add(ViolationCode code, std::string detail);
  void Merge(const VerificationReport& other);
  // "ok" or one "CODE: detail" line per violation.
  std::string Text() const;
  // One "CODE<TAB>detail" line per violation; empty when ok.
  std::string MachineLines() const;
};

VerificationReport VerifyClass(const ParallelClass& c, int v);

// Checks every class, pairwise edge-disjointness and exact cover of E(K_v).
// With `expected`, class counts per kind must match. `require_complex`
// demands every kind of the family occur; without `expected` the family is
// inferred.
VerificationReport Verify(const Decomposition& d,
                          const std::optional<Profile>& expected = std::nullopt,
                          bool require_complex = false);

// Counts classes by kind in the family's order. Throws kInvalidParameters
// when `d` fails structural checks or has a kind outside the family.
Profile ProfileOf(const Decomposition& d, Family family);
Profile ProfileOf(const Decomposition& d);

}  // namespace urd

#endif  // URD_VERIFIER_H_
