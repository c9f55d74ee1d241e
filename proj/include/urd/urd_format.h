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

#ifndef URD_URD_FORMAT_H_
#define URD_URD_FORMAT_H_

// Line-oriented text format for decompositions (UTF-8, LF):
//
//   urd 1 v=<v> family=<k2p3k3|k2p4c4|p4c4|raw>
//   profile <counts>                       (optional)
//   class <kind>: <block> <block> ...      (one line per class)
//
// A block is its canonical vertex tuple joined by '-'; '#' starts a comment.
// Blocks are sorted within a class, classes keep their list order, so a
// canonical decomposition always serializes to the same bytes.

#include <optional>
#include <string>
#include <string_view>

#include "urd/model.h"

namespace urd {

struct UrdDocument {
  Decomposition decomposition;
  Family family = Family::kRaw;
  std::optional<Profile> profile;
};

// Throws kInvalidParameters for a structurally invalid decomposition
// (malformed block, vertex out of range). Incomplete decompositions get a
// "# incomplete" line after the header.
std::string SerializeUrd(const UrdDocument& doc);
// Family inferred, no profile line.
std::string SerializeUrd(const Decomposition& d);

// Strict parse; throws kParse with "line L, col C" in the message. Semantic
// problems (overlapping blocks, missing edges) are left to the verifier.
UrdDocument ParseUrd(std::string_view text);

}  // namespace urd

#endif  // URD_URD_FORMAT_H_
