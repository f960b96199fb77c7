// Copyright 2026 The plog Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

#include "derivation_gen.h"
#include "plog/checker.h"
#include "plog/normalizer.h"
#include "plog/render.h"
#include "plog/search.h"
#include "search_workload.h"
#include "test_util.h"

namespace plog {
namespace {

using testing::LoadFixture;
using testing::Only;
using testing::Seq;

// Tolerances.
constexpr double kSecondsPerCriterion = 10.0;
constexpr int kGeneratedPerRuleSet = 100;
constexpr int kMaxGeneratedHeight = 6;
constexpr int kFuzzInputs = 1000;
constexpr long kAllowedViolations = 0;

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records a failed requirement; the first few are kept for the report.
  void Require(bool cond, const std::string& what) {
    if (cond) return;
    if (pass || detail.size() < 400) detail += (detail.empty() ? "" : "; ") + what;
    pass = false;
  }
};

std::set<std::string> OpenSet(const Derivation& d) {
  std::set<std::string> out;
  for (const OpenAssumption& o : OpenAssumptions(d)) out.insert(AlphaKey(o.judgment));
  return out;
}

// A search result that concludes the goal, checks, and uses only hypotheses.
bool SoundResult(const SearchResult& r, const Sequent& s, const RuleSet& rs, int depth) {
  if (!r.derivation) return false;
  CheckReport report = Check(*r.derivation, rs);
  if (!report.ok || !AlphaEqual(r.derivation->conclusion(), s.goal)) return false;
  if (r.derivation->height() > depth) return false;
  for (const OpenAssumption& o : report.open_assumptions) {
    bool listed = false;
    for (const Judgment& h : s.hypotheses) listed |= AlphaEqual(h, o.judgment);
    if (!listed) return false;
  }
  return true;
}

Outcome FixtureFidelity() {
  Outcome out;
  for (const Fixture& fx : testing::Fixtures()) {
    if (fx.id != "F1" && fx.id != "F2" && fx.id != "F3" && fx.id != "F4") continue;
    Script s = ParseScript(ReadFile(fx.file));
    bool ok = s.ruleset == fx.ruleset;
    for (const NamedDerivation& nd : s.derivations) ok &= Check(nd.derivation, BuildRuleSet(fx.ruleset)).ok;
    out.Require(ok, fx.id + " under " + fx.ruleset);
  }
  out.detail = out.pass ? "F1-F4 check" : out.detail;
  return out;
}

Outcome TennantInterderivability() {
  Outcome out;
  RuleSet rs = BuildRuleSet("tennant");
  Judgment e = ParseJudgment("+ E! t");
  out.Require(Interderivable(e, ParseJudgment("+ t = t"), rs, 4), "E! t vs t = t at 4");
  out.Require(Interderivable(e, ParseJudgment("+ exists x. x = t"), rs, 5),
              "E! t vs exists x. x = t at 5");
  return out;
}

Outcome IdentityRuleEquivalence() {
  Outcome out;
  RuleSet id2 = BuildRuleSet("free-base+id2");
  Sequent step = Seq({"+ E! t"}, "+ t = t");
  out.Require(SoundResult(Search(step, id2, 3), step, id2, 3), "id3 step under id2");
  RuleSet id3 = BuildRuleSet("free-base+id3");
  Sequent axiom = Seq({}, "+ forall x. x = x");
  out.Require(SoundResult(Search(axiom, id3, 3), axiom, id3, 3), "id2 axiom under id3");
  return out;
}

Outcome IrreducibleMaxima() {
  Outcome out;
  Script s = LoadFixture("F11");
  RuleSet rs = BuildRuleSet(s.ruleset);
  const Derivation& d = Only(s);
  NormalizeResult n = Normalize(d, rs);
  out.Require(n.steps == 0 && n.derivation == d, "normal form differs from input");
  int ad = 0;
  for (const MaximalOccurrence& m : n.surviving)
    ad += m.kind == MaximalOccurrence::Kind::kAdIrreducible;
  out.Require(n.surviving.size() == 1 && ad == 1,
              "surviving=" + std::to_string(n.surviving.size()) + " ad=" + std::to_string(ad));
  out.Require(!SubformulaCheck(d, rs, SubformulaMode::kFull).holds, "full mode holds");
  out.Require(SubformulaCheck(d, rs, SubformulaMode::kRestricted).holds,
              "restricted mode fails");
  return out;
}

Outcome MutationRejection() {
  Outcome out;
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"M1", diag::kEigenvariable}, {"M2", diag::kDischarge}, {"M3", diag::kPolarity},
      {"M4", diag::kArity},         {"M5", diag::kAlphaRange}, {"M6", diag::kAtomicity}};
  for (const auto& [id, cls] : expected) {
    Script s = LoadFixture(id);
    CheckReport r = Check(Only(s), BuildRuleSet(s.ruleset));
    out.Require(!r.ok && r.HasClass(cls), id + " lacks " + cls);
  }
  return out;
}

// Generated derivations that contain a reducible maximum.
std::vector<Derivation> WithDetours(const RuleSet& rs, const std::vector<std::string>& hyps,
                                    unsigned seed) {
  testing::DerivationGen gen(rs, hyps, seed);
  std::vector<Derivation> out;
  for (int round = 0; round < 50 && out.size() < kGeneratedPerRuleSet; ++round) {
    for (const Derivation& d : gen.Grow(300, kMaxGeneratedHeight)) {
      if (out.size() == kGeneratedPerRuleSet) break;
      for (const MaximalOccurrence& m : FindMaximal(d, rs)) {
        if (m.kind != MaximalOccurrence::Kind::kReducible) continue;
        out.push_back(d);
        break;
      }
    }
  }
  return out;
}

Outcome SubjectReduction() {
  Outcome out;
  long violations = 0, reductions = 0, total = 0;
  struct Source {
    const char* rules;
    const std::vector<std::string>& hyps;
    unsigned seed;
  };
  for (const Source& src : {Source{"free-base", testing::FreeBaseHypotheses(), 101},
                            Source{"textor-prime+bilateral-q", testing::SignedHypotheses(), 202}}) {
    RuleSet rs = BuildRuleSet(src.rules);
    std::vector<Derivation> sample = WithDetours(rs, src.hyps, src.seed);
    out.Require(sample.size() == kGeneratedPerRuleSet, std::string("short sample for ") + src.rules);
    for (const Derivation& d : sample) {
      ++total;
      bool fine = d.height() <= kMaxGeneratedHeight && Check(d, rs).ok;
      std::set<std::string> before = OpenSet(d);
      for (const MaximalOccurrence& m : FindMaximal(d, rs)) {
        if (m.kind != MaximalOccurrence::Kind::kReducible) continue;
        ++reductions;
        Derivation r = ReduceStep(d, m, rs);
        fine &= Check(r, rs).ok && AlphaEqual(r.conclusion(), d.conclusion());
        std::set<std::string> after = OpenSet(r);
        fine &= std::includes(before.begin(), before.end(), after.begin(), after.end());
      }
      try {
        NormalizeResult once = Normalize(d, rs);
        NormalizeResult twice = Normalize(once.derivation, rs);
        fine &= Check(once.derivation, rs).ok && twice.steps == 0 &&
                EquivalentTrees(twice.derivation, once.derivation);
      } catch (const std::exception&) {
        fine = false;  // step budget exhausted
      }
      violations += !fine;
    }
  }
  out.Require(violations <= kAllowedViolations, std::to_string(violations) + " violations");
  if (out.pass)
    out.detail = std::to_string(total) + " derivations, " + std::to_string(reductions) +
                 " single reductions, 0 violations";
  return out;
}

Outcome OracleAgreement() {
  Outcome out;
  long before = SearchDiscrepancies();
  int found = 0, sound = 0;
  for (const testing::SearchCase& c : testing::SearchWorkload()) {
    RuleSet rs = BuildRuleSet(c.rules);
    Sequent s = Seq(c.hyps, c.goal);
    for (int depth = 0; depth <= 6; ++depth) {
      SearchResult r = Search(s, rs, depth);
      if (!r.derivation) continue;
      ++found;
      sound += SoundResult(r, s, rs, depth);
    }
  }
  out.Require(found == sound, std::to_string(found - sound) + " unsound results");
  out.Require(SearchDiscrepancies() - before <= kAllowedViolations, "internal discrepancies");
  out.Require(found > 0, "nothing found");
  if (out.pass) out.detail = std::to_string(found) + " results, 0 discrepancies";
  return out;
}

Outcome BoundedNonDerivability() {
  Outcome out;
  Sequent s = Seq({"+ F(t)"}, "! t");
  RuleSet without = BuildRuleSet("textor-prime+impasse+bilateral-q");
  SearchResult none = Search(s, without, 6);
  out.Require(!none.derivation, "found without bilateral denotation");
  out.Require(!none.budget_exhausted, "budget exhausted");
  RuleSet with = BuildRuleSet("textor-prime+impasse+bilateral-q+ad-bilateral");
  out.Require(SoundResult(Search(s, with, 1), s, with, 1), "+ F(t) => ! t at depth 1");
  Sequent dual = Seq({"/ t"}, "- F(t)");
  out.Require(SoundResult(Search(dual, with, 1), dual, with, 1), "/ t => - F(t) at depth 1");
  return out;
}

std::vector<std::string> Tokens(const std::string& text) {
  static const std::regex kToken(R"([A-Za-z0-9_!]+|\s+|.)");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(text.begin(), text.end(), kToken);
       it != std::sregex_iterator(); ++it)
    out.push_back(it->str());
  return out;
}

Outcome RoundTrips() {
  Outcome out;
  std::vector<std::string> texts;
  for (const Fixture& fx : testing::Fixtures()) {
    texts.push_back(ReadFile(fx.file));
    Script original = ParseScript(texts.back());
    std::string emitted = EmitScript(original);
    Script again = ParseScript(emitted);
    bool same = again.ruleset == original.ruleset &&
                again.derivations.size() == original.derivations.size() &&
                EmitScript(again) == emitted;
    for (size_t i = 0; same && i < again.derivations.size(); ++i)
      same = again.derivations[i].derivation == original.derivations[i].derivation;
    out.Require(same, fx.id + " round trip");
  }
  std::mt19937 rng(9);
  int errors = 0, bad = 0;
  for (int n = 0; n < kFuzzInputs; ++n) {
    std::vector<std::string> tokens = Tokens(texts[n % texts.size()]);
    std::vector<size_t> solid;
    for (size_t i = 0; i < tokens.size(); ++i)
      if (!std::isspace(static_cast<unsigned char>(tokens[i][0]))) solid.push_back(i);
    for (int k = 0, m = 1 + n % 3; k < m; ++k)
      tokens[solid[std::uniform_int_distribution<size_t>(0, solid.size() - 1)(rng)]].clear();
    std::string joined;
    for (const std::string& t : tokens) joined += t;
    int lines = static_cast<int>(std::count(joined.begin(), joined.end(), '\n')) + 1;
    try {
      ParseScript(joined);
    } catch (const SyntaxError& e) {
      ++errors;
      bad += e.line() < 1 || e.line() > lines || e.column() < 1;
    } catch (...) {
      ++bad;
    }
  }
  out.Require(bad <= kAllowedViolations, std::to_string(bad) + " unpositioned or foreign errors");
  if (out.pass)
    out.detail = std::to_string(texts.size()) + " scripts round trip; " +
                 std::to_string(kFuzzInputs) + " fuzz inputs, " + std::to_string(errors) +
                 " positioned syntax errors";
  return out;
}

struct Criterion {
  int number;
  const char* title;
  std::function<Outcome()> run;
};

int Main() {
  const std::vector<Criterion> criteria = {
      {1, "fixture fidelity", FixtureFidelity},
      {2, "tennant interderivability", TennantInterderivability},
      {3, "identity rule equivalence", IdentityRuleEquivalence},
      {4, "irreducible maxima", IrreducibleMaxima},
      {5, "mutation rejection", MutationRejection},
      {6, "subject reduction suite", SubjectReduction},
      {7, "search oracle agreement", OracleAgreement},
      {8, "bounded non-derivability", BoundedNonDerivability},
      {9, "round trips and fuzzing", RoundTrips},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.Require(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.Require(secs < kSecondsPerCriterion, "over time budget");
    failures += !o.pass;
    std::printf("%s [%d] %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", c.number, c.title, secs,
                o.detail.empty() ? "" : ": ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}

}  // namespace
}  // namespace plog

int main() { return plog::Main(); }
