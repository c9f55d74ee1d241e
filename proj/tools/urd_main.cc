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

// Command-line front end: construct, metamorph, verify, spectrum, search.
// Exit codes: 0 ok/feasible, 1 verification failure or infeasible request,
// 2 usage error, 3 timeout.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "urd/constructions.h"
#include "urd/metamorphosis.h"
#include "urd/model.h"
#include "urd/search_budget.h"
#include "urd/spectrum.h"
#include "urd/urd_format.h"
#include "urd/verifier.h"

namespace urd {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTimeout = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int ExitCodeFor(ErrorCode code) {
  switch (code) {
    case ErrorCode::kTimeout:
      return kExitTimeout;
    case ErrorCode::kInvalidParameters:
    case ErrorCode::kInvalidOrder:
      return kExitUsage;
    default:
      return kExitFail;
  }
}

Family FamilyArg(const std::string& name) {
  std::optional<Family> f = ParseFamily(name);
  if (!f || *f == Family::kRaw) throw UsageError("unknown family: " + name);
  return *f;
}

// "1 3 3", "1,3,3" and "(1,3,3)" are all accepted.
std::vector<int> CountsArg(std::string text) {
  for (char& ch : text) {
    if (ch == ',' || ch == '(' || ch == ')') ch = ' ';
  }
  std::istringstream in(text);
  std::vector<int> out;
  std::string tok;
  while (in >> tok) {
    try {
      size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::logic_error&) {
      throw UsageError("bad count in profile: " + tok);
    }
  }
  return out;
}

std::vector<int> IndexListArg(const std::string& text) {
  std::vector<int> out = CountsArg(text);
  if (out.empty()) throw UsageError("empty class list");
  return out;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void WriteOutput(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

SearchBudget MakeBudget(double seconds, std::uint64_t seed) {
  SearchBudget b;
  b.time_limit_s = seconds;
  b.seed = seed;
  return b;
}

std::string StatusName(SearchStatus s) {
  switch (s) {
    case SearchStatus::kFound:
      return "found";
    case SearchStatus::kExhausted:
      return "exhausted";
    case SearchStatus::kBudgetExceeded:
      return "timeout";
  }
  return "timeout";
}

// construct ---------------------------------------------------------------

struct ConstructArgs {
  std::string family;
  int v = 0;
  std::string profile;
  std::string out;
  double budget = 60.0;
  std::uint64_t seed = 1;
};

int RunConstruct(const ConstructArgs& a) {
  const Profile profile = MakeProfile(FamilyArg(a.family), CountsArg(a.profile));
  const Decomposition d = Construct(a.v, profile, MakeBudget(a.budget, a.seed));
  WriteOutput(a.out, SerializeUrd(UrdDocument{d, profile.family, profile}));
  return kExitOk;
}

// metamorph ---------------------------------------------------------------

struct MetamorphArgs {
  std::vector<std::string> mode;
  std::string in;
  std::string classes;
  std::string out;
  double budget = 60.0;
  std::uint64_t seed = 1;
};

int RunMetamorph(const MetamorphArgs& a) {
  const std::string& mode = a.mode.at(0);
  int k = 0;
  if (mode == "cycles-k") {
    if (a.mode.size() != 2) throw UsageError("cycles-k needs the cycle length");
    k = CountsArg(a.mode[1]).at(0);
    if (k < 3) throw UsageError("cycle length must be at least 3");
  } else if (a.mode.size() != 1) {
    throw UsageError("only cycles-k takes an argument");
  }
  const int wanted = mode == "two-c4" || mode == "matching-c4" || mode == "two-k3" ? 2
                     : mode == "three-c4"                                        ? 3
                     : mode == "cycles-k"                                        ? k - 1
                                                                                 : -1;
  if (wanted < 0) throw UsageError("unknown mode: " + mode);

  UrdDocument doc = ParseUrd(ReadFile(a.in));
  const Decomposition& d = doc.decomposition;
  std::vector<int> idx;
  if (a.classes.empty()) {
    for (int i = 0; i < wanted && i < static_cast<int>(d.classes.size()); ++i) idx.push_back(i);
  } else {
    idx = IndexListArg(a.classes);
  }
  if (static_cast<int>(idx.size()) != wanted) {
    throw UsageError(mode + " takes " + std::to_string(wanted) + " classes");
  }
  std::vector<ParallelClass> in;
  for (int i : idx) {
    if (i < 0 || i >= static_cast<int>(d.classes.size())) {
      throw UsageError("class index out of range: " + std::to_string(i));
    }
    if (std::count(idx.begin(), idx.end(), i) > 1) throw UsageError("class index repeated");
    in.push_back(d.classes[i]);
  }

  std::vector<ParallelClass> produced;
  const SearchBudget budget = MakeBudget(a.budget, a.seed);
  if (mode == "two-c4") {
    TwoC4Result r = MetaTwoC4(d.v, in[0], in[1]);
    produced = {r.paths_a, r.paths_b, r.matching};
  } else if (mode == "matching-c4") {
    // Either order on the command line; the matching goes first.
    if (in[1].kind == BlockKind::K2()) std::swap(in[0], in[1]);
    auto r = MetaMatchingC4(d.v, in[0], in[1]);
    produced.assign(r.begin(), r.end());
  } else if (mode == "three-c4") {
    auto r = MetaThreeC4(d.v, in[0], in[1], in[2]);
    produced.assign(r.begin(), r.end());
  } else if (mode == "two-k3") {
    auto r = MetaTwoK3(d.v, in[0], in[1], budget);
    produced.assign(r.begin(), r.end());
  } else {
    ConjectureOutcome r = MetaCyclesConjecture(d.v, k, in, budget);
    std::cerr << "status: " << StatusName(r.status) << " nodes=" << r.nodes << '\n';
    if (r.status == SearchStatus::kExhausted) return kExitFail;
    if (r.status == SearchStatus::kBudgetExceeded) return kExitTimeout;
    produced = std::move(r.classes);
  }

  Decomposition out{d.v, {}};
  for (int i = 0; i < static_cast<int>(d.classes.size()); ++i) {
    if (std::find(idx.begin(), idx.end(), i) == idx.end()) out.classes.push_back(d.classes[i]);
  }
  for (ParallelClass& c : produced) out.classes.push_back(std::move(c));
  if (mode != "cycles-k") std::cerr << "status: found\n";
  WriteOutput(a.out, SerializeUrd(out));
  return kExitOk;
}

// verify ------------------------------------------------------------------

struct VerifyArgs {
  std::string in;
  std::string profile;
  bool require_complex = false;
  bool machine = false;
};

int RunVerify(const VerifyArgs& a) {
  UrdDocument doc = ParseUrd(ReadFile(a.in));
  std::optional<Profile> expected = doc.profile;
  if (!a.profile.empty()) {
    const Family f = doc.family == Family::kRaw ? InferFamily(doc.decomposition) : doc.family;
    expected = MakeProfile(f, CountsArg(a.profile));
  }
  const VerificationReport rep = Verify(doc.decomposition, expected, a.require_complex);
  std::cout << (a.machine ? rep.MachineLines() : rep.Text());
  return rep.ok ? kExitOk : kExitFail;
}

// spectrum ----------------------------------------------------------------

struct SpectrumArgs {
  std::string family;
  int v = 0;
  bool all = false;
  bool complex = false;
  bool exhaustive = false;
  std::string format = "tsv";
  std::string witness_dir;
  double budget = 60.0;
  std::uint64_t seed = 1;
};

struct SpectrumRow {
  std::vector<int> counts;
  std::string feasible;  // yes, no or unknown
  std::optional<Decomposition> witness;
  std::string witness_file = "-";
};

std::string CountsSlug(const std::vector<int>& counts) {
  std::string s;
  for (size_t i = 0; i < counts.size(); ++i) s += (i ? "-" : "") + std::to_string(counts[i]);
  return s;
}

int RunSpectrum(const SpectrumArgs& a) {
  if (a.all && a.complex) throw UsageError("--all and --complex are exclusive");
  const Family family = FamilyArg(a.family);
  const bool complex_only = !a.all;
  const SearchBudget budget = MakeBudget(a.budget, a.seed);
  auto positive = [](const std::vector<int>& t) {
    return std::all_of(t.begin(), t.end(), [](int x) { return x > 0; });
  };

  std::vector<SpectrumRow> rows;
  if (a.exhaustive) {
    const ExhaustiveSpectrum ex = ExhaustiveSpectrumSearch(a.v, family, budget);
    for (const ExhaustiveRow& r : ex.rows) {
      if (complex_only && !positive(r.counts)) continue;
      rows.push_back({r.counts,
                      r.feasibility == Feasibility::kFeasible     ? "yes"
                      : r.feasibility == Feasibility::kInfeasible ? "no"
                                                                  : "unknown",
                      r.witness});
    }
  } else {
    const AdmissibleSet adm = Admissible(family, a.v, complex_only);
    if (adm.tuples.empty() && !adm.diagnostic.empty()) std::cerr << adm.diagnostic << '\n';
    std::vector<std::vector<int>> tuples = adm.tuples;
    for (const auto& t : EquationSolutions(family, a.v)) {
      if (KnownNonexistent(family, a.v, t) && (!complex_only || positive(t))) tuples.push_back(t);
    }
    std::sort(tuples.begin(), tuples.end(), std::greater<>());
    for (const auto& t : tuples) {
      SpectrumRow row{t, "unknown", std::nullopt};
      if (KnownNonexistent(family, a.v, t)) {
        row.feasible = "no";
      } else {
        try {
          row.witness = Construct(a.v, Profile{family, t}, budget);
          row.feasible = "yes";
        } catch (const UrdError& e) {
          std::cerr << FormatCounts(t) << ": " << e.what() << '\n';
        }
      }
      rows.push_back(std::move(row));
    }
  }

  if (!a.witness_dir.empty()) {
    std::filesystem::create_directories(a.witness_dir);
    for (SpectrumRow& r : rows) {
      if (!r.witness) continue;
      const std::string name = std::string(FamilyName(family)) + "_v" + std::to_string(a.v) +
                               "_" + CountsSlug(r.counts) + ".urd";
      const std::string path = (std::filesystem::path(a.witness_dir) / name).string();
      WriteOutput(path, SerializeUrd(UrdDocument{*r.witness, family, Profile{family, r.counts}}));
      r.witness_file = path;
    }
  }

  if (a.format == "tsv") {
    std::cout << "v\tfamily\tm\tp\tc/t\tfeasible\twitness_file\n";
    for (const SpectrumRow& r : rows) {
      std::cout << a.v << '\t' << FamilyName(family) << '\t';
      if (family == Family::kP4C4) std::cout << "-\t";
      for (int x : r.counts) std::cout << x << '\t';
      std::cout << r.feasible << '\t' << r.witness_file << '\n';
    }
  } else {
    for (const SpectrumRow& r : rows) {
      std::cout << FormatCounts(r.counts) << ' '
                << (r.feasible == "yes" ? "feasible" : r.feasible == "no" ? "infeasible" : "unknown")
                << '\n';
    }
  }
  const bool unknown = std::any_of(rows.begin(), rows.end(),
                                   [](const SpectrumRow& r) { return r.feasible == "unknown"; });
  return unknown ? kExitTimeout : kExitOk;
}

// search ------------------------------------------------------------------

struct SearchArgs {
  bool rees = false;
  int v = 0;
  int m = 0;
  std::string out;
  double budget = 60.0;
  std::uint64_t seed = 1;
};

int RunSearch(const SearchArgs& a) {
  if (!a.rees) throw UsageError("search needs --rees");
  const ReesResult r = ReesSearch(a.v, a.m, MakeBudget(a.budget, a.seed));
  std::cerr << "status: " << StatusName(r.status) << " nodes=" << r.nodes
            << " restarts=" << r.restarts << '\n';
  if (r.status == SearchStatus::kExhausted) return kExitFail;
  if (r.status == SearchStatus::kBudgetExceeded) return kExitTimeout;
  Decomposition d{a.v, r.system->matchings};
  d.classes.insert(d.classes.end(), r.system->triangles.begin(), r.system->triangles.end());
  WriteOutput(a.out, SerializeUrd(d));
  return kExitOk;
}

int Main(int argc, char** argv) {
  CLI::App app{"Uniformly resolvable decompositions of complete graphs"};
  app.require_subcommand(1);

  ConstructArgs ca;
  CLI::App* construct = app.add_subcommand("construct", "Build a URD with a given profile");
  construct->add_option("--family", ca.family, "k2p3k3, k2p4c4 or p4c4")->required();
  construct->add_option("--v", ca.v, "Order of the complete graph")->required();
  construct->add_option("--profile", ca.profile, "Class counts, e.g. \"1 3 3\"")->required();
  construct->add_option("--out", ca.out, "Output file (default stdout)");
  construct->add_option("--budget", ca.budget, "Search budget in seconds");
  construct->add_option("--seed", ca.seed, "Restart seed");

  MetamorphArgs ma;
  CLI::App* metamorph = app.add_subcommand("metamorph", "Reassemble classes of a URD file");
  metamorph
      ->add_option("--mode", ma.mode,
                   "two-c4 | matching-c4 | three-c4 | two-k3 | cycles-k K")
      ->required()
      ->expected(1, 2);
  metamorph->add_option("--in", ma.in, "Input URD file")->required();
  metamorph->add_option("--classes", ma.classes, "0-based class indices, e.g. 0,1");
  metamorph->add_option("--out", ma.out, "Output file (default stdout)");
  metamorph->add_option("--budget", ma.budget, "Search budget in seconds");
  metamorph->add_option("--seed", ma.seed, "Seed");

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand("verify", "Check a URD file");
  verify->add_option("--in", va.in, "Input URD file")->required();
  verify->add_option("--profile", va.profile, "Expected class counts");
  verify->add_flag("--complex", va.require_complex, "Require every kind to occur");
  verify->add_flag("--machine", va.machine, "Tab-separated violation lines");

  SpectrumArgs sa;
  CLI::App* spectrum = app.add_subcommand("spectrum", "Tabulate profiles for one order");
  spectrum->add_option("--family", sa.family, "k2p3k3, k2p4c4 or p4c4")->required();
  spectrum->add_option("--v", sa.v, "Order")->required();
  spectrum->add_flag("--all", sa.all, "Include non-complex profiles");
  spectrum->add_flag("--complex", sa.complex, "Only complex profiles (default)");
  spectrum->add_flag("--exhaustive", sa.exhaustive, "Decide every profile by search (v <= 16)");
  spectrum->add_option("--format", sa.format, "tsv or text")
      ->check(CLI::IsMember({"tsv", "text"}));
  spectrum->add_option("--witness-dir", sa.witness_dir, "Write witnesses here");
  spectrum->add_option("--budget", sa.budget, "Budget in seconds");
  spectrum->add_option("--seed", sa.seed, "Seed");

  SearchArgs sea;
  CLI::App* search = app.add_subcommand("search", "Search for auxiliary designs");
  search->add_flag("--rees", sea.rees, "Matchings plus triangle classes")->required();
  search->add_option("--v", sea.v, "Order")->required();
  search->add_option("--m", sea.m, "Number of matchings")->required();
  search->add_option("--out", sea.out, "Output file (default stdout)");
  search->add_option("--budget", sea.budget, "Budget in seconds");
  search->add_option("--seed", sea.seed, "Seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*construct) return RunConstruct(ca);
    if (*metamorph) return RunMetamorph(ma);
    if (*verify) return RunVerify(va);
    if (*spectrum) return RunSpectrum(sa);
    return RunSearch(sea);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UrdError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  }
}

}  // namespace
}  // namespace urd

int main(int argc, char** argv) { return urd::Main(argc, argv); }
