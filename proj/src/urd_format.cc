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

#include "urd/urd_format.h"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>
#include <vector>

namespace urd {
namespace {

[[noreturn]] void ParseFail(int line, int col, const std::string& message) {
  throw UrdError(ErrorCode::kParse, "line " + std::to_string(line) + ", col " +
                                        std::to_string(col) + ": " + message);
}

struct Token {
  std::string_view text;
  int col;  // 1-based
};

std::vector<Token> Tokenize(std::string_view line) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    out.push_back({line.substr(i, j - i), static_cast<int>(i) + 1});
    i = j;
  }
  return out;
}

std::optional<int> ParseInt(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return value;
}

std::string BlockText(const Block& b) {
  std::string s;
  for (size_t i = 0; i < b.vertices.size(); ++i) {
    if (i) s += '-';
    s += std::to_string(b.vertices[i]);
  }
  return s;
}

}  // namespace

std::string SerializeUrd(const UrdDocument& doc) {
  const Decomposition& d = doc.decomposition;
  if (d.v < 1) throw UrdError(ErrorCode::kInvalidParameters, "order must be positive");
  std::ostringstream out;
  out << "urd 1 v=" << d.v << " family=" << FamilyName(doc.family) << '\n';
  if (doc.profile) {
    out << "profile";
    for (int c : doc.profile->counts) out << ' ' << c;
    out << '\n';
  }
  std::vector<ParallelClass> classes;
  std::set<Edge> covered;
  for (const ParallelClass& c : d.classes) {
    ParallelClass canon;
    try {
      canon = MakeClass(c.kind, c.blocks);
    } catch (const UrdError& e) {
      throw UrdError(ErrorCode::kInvalidParameters, e.what());
    }
    for (const Block& b : canon.blocks) {
      for (int x : b.vertices) {
        if (x >= d.v) {
          throw UrdError(ErrorCode::kInvalidParameters,
                         "vertex " + std::to_string(x) + " >= v");
        }
      }
      for (Edge e : BlockEdges(b)) covered.insert(e);
    }
    classes.push_back(std::move(canon));
  }
  if (d.v < 2 || static_cast<int>(covered.size()) != NumEdges(d.v)) {
    out << "# incomplete\n";
  }
  for (const ParallelClass& c : classes) {
    out << "class " << c.kind.Name() << ':';
    for (const Block& b : c.blocks) out << ' ' << BlockText(b);
    out << '\n';
  }
  return out.str();
}

std::string SerializeUrd(const Decomposition& d) {
  return SerializeUrd(UrdDocument{d, InferFamily(d), std::nullopt});
}

UrdDocument ParseUrd(std::string_view text) {
  UrdDocument doc;
  bool have_header = false;
  bool seen_class = false;
  int line_no = 0;
  size_t pos = 0;
  while (pos <= text.size()) {
    size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const size_t hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::vector<Token> tokens = Tokenize(line);
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }

    if (!have_header) {
      if (tokens[0].text != "urd") ParseFail(line_no, tokens[0].col, "expected 'urd' header");
      if (tokens.size() != 4) ParseFail(line_no, 1, "header needs: urd 1 v=<v> family=<f>");
      if (tokens[1].text != "1") ParseFail(line_no, tokens[1].col, "unsupported format version");
      if (!tokens[2].text.starts_with("v=")) ParseFail(line_no, tokens[2].col, "expected v=<order>");
      auto v = ParseInt(tokens[2].text.substr(2));
      if (!v || *v < 1) ParseFail(line_no, tokens[2].col + 2, "bad order");
      if (!tokens[3].text.starts_with("family=")) {
        ParseFail(line_no, tokens[3].col, "expected family=<name>");
      }
      auto family = ParseFamily(tokens[3].text.substr(7));
      if (!family) ParseFail(line_no, tokens[3].col + 7, "unknown family");
      doc.decomposition.v = *v;
      doc.family = *family;
      have_header = true;
    } else if (tokens[0].text == "profile") {
      if (seen_class || doc.profile) ParseFail(line_no, 1, "profile must directly follow the header");
      std::vector<int> counts;
      for (size_t i = 1; i < tokens.size(); ++i) {
        auto c = ParseInt(tokens[i].text);
        if (!c || *c < 0) ParseFail(line_no, tokens[i].col, "bad class count");
        counts.push_back(*c);
      }
      try {
        doc.profile = MakeProfile(doc.family, std::move(counts));
      } catch (const UrdError& e) {
        ParseFail(line_no, 1, e.what());
      }
    } else if (tokens[0].text == "class") {
      seen_class = true;
      if (tokens.size() < 2 || !tokens[1].text.ends_with(':')) {
        ParseFail(line_no, tokens.size() < 2 ? 6 : tokens[1].col, "expected '<kind>:'");
      }
      std::string_view kind_name = tokens[1].text;
      kind_name.remove_suffix(1);
      auto kind = BlockKind::FromName(kind_name);
      if (!kind) ParseFail(line_no, tokens[1].col, "unknown block kind");
      const int v = doc.decomposition.v;
      std::vector<Block> blocks;
      std::set<Edge> line_edges;
      for (size_t i = 2; i < tokens.size(); ++i) {
        const Token& tok = tokens[i];
        std::vector<int> verts;
        size_t s = 0;
        while (true) {
          size_t dash = tok.text.find('-', s);
          auto x = ParseInt(tok.text.substr(s, dash == std::string_view::npos
                                                    ? std::string_view::npos
                                                    : dash - s));
          if (!x || *x < 0) ParseFail(line_no, tok.col + static_cast<int>(s), "bad vertex label");
          if (*x >= v) {
            ParseFail(line_no, tok.col + static_cast<int>(s),
                      "vertex " + std::to_string(*x) + " >= v=" + std::to_string(v));
          }
          verts.push_back(*x);
          if (dash == std::string_view::npos) break;
          s = dash + 1;
        }
        if (static_cast<int>(verts.size()) != kind->order) {
          ParseFail(line_no, tok.col,
                    kind->Name() + " block needs " + std::to_string(kind->order) +
                        " vertices, got " + std::to_string(verts.size()));
        }
        Block b;
        try {
          b = CanonicalizeBlock(Block{*kind, verts});
        } catch (const UrdError& e) {
          ParseFail(line_no, tok.col, e.what());
        }
        for (Edge e : BlockEdges(b)) {
          if (!line_edges.insert(e).second) {
            ParseFail(line_no, tok.col,
                      "edge " + std::to_string(e.u) + "-" + std::to_string(e.w) +
                          " repeated within the class");
          }
        }
        blocks.push_back(std::move(b));
      }
      doc.decomposition.classes.push_back(MakeClass(*kind, std::move(blocks)));
    } else {
      ParseFail(line_no, tokens[0].col, "unexpected '" + std::string(tokens[0].text) + "'");
    }
    if (end == text.size()) break;
  }
  if (!have_header) ParseFail(line_no, 1, "missing 'urd' header");
  return doc;
}

}  // namespace urd
