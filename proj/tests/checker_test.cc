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

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "derivation_gen.h"
#include "plog/checker.h"
#include "plog/parser.h"
#include "plog/render.h"
#include "test_util.h"

namespace plog {
namespace {

using testing::LoadFixture;
using testing::Only;
using testing::ParseTreeText;

std::set<std::string> OpenKeys(const Derivation& d) {
  std::set<std::string> out;
  for (const OpenAssumption& o : OpenAssumptions(d))
    out.insert(std::to_string(o.label) + ":" + AlphaKey(o.judgment));
  return out;
}

// Corpus trees that check, with their rule sets, plus generated ones.
struct Sample {
  Derivation derivation;
  RuleSet rules;
};

std::vector<Sample> CheckedSamples() {
  std::vector<Sample> out;
  for (const Fixture& fx : testing::Fixtures()) {
    if (!fx.expected.ok) continue;
    RuleSet rs = BuildRuleSet(fx.ruleset);
    for (const NamedDerivation& nd : ParseScript(ReadFile(fx.file)).derivations)
      out.push_back({nd.derivation, rs});
  }
  struct Source {
    const char* rules;
    const std::vector<std::string>& hyps;
  };
  for (const Source& src : {Source{"free-base+id1", testing::FreeBaseHypotheses()},
                            Source{"textor-prime+impasse+bilateral-q",
                                   testing::SignedHypotheses()}}) {
    RuleSet rs = BuildRuleSet(src.rules);
    testing::DerivationGen gen(rs, src.hyps, 11);
    for (int round = 0; round < 5; ++round)
      for (const Derivation& d : gen.Grow(300, 6)) out.push_back({d, rs});
  }
  return out;
}

TEST(Check, FirstIdentityFixture) {
  Script s = LoadFixture("F1");
  CheckReport r = Check(Only(s), BuildRuleSet(s.ruleset));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.conclusion, ParseJudgment("+ exists x. x = t"));
  ASSERT_EQ(r.open_assumptions.size(), 1u);
  EXPECT_EQ(r.open_assumptions[0].judgment, ParseJudgment("+ E! t"));
}

TEST(Check, SingleAssumption) {
  Derivation d = Derivation::Assume(1, ParseJudgment("+ A"));
  CheckReport r = Check(d, BuildRuleSet("free-base"));
  EXPECT_TRUE(r.ok);
  EXPECT_EQ(r.conclusion, ParseJudgment("+ A"));
  ASSERT_EQ(r.open_assumptions.size(), 1u);
  EXPECT_EQ(r.open_assumptions[0].label, 1);
  EXPECT_TRUE(r.diagnostics.empty());
}

TEST(Check, EigenvariableInstantiatedByWitnessIsRejected) {
  Script s = LoadFixture("F4");
  RuleSet rs = BuildRuleSet(s.ruleset);
  Derivation d = Only(s);
  ASSERT_TRUE(Check(d, rs).ok);
  d.mutable_premises()[1] = SubstituteTree(d.premises()[1], "a", Term::Var("t"));
  CheckReport r = Check(d, rs);
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.HasClass(diag::kEigenvariable)) << FormatReport("F4-mutated", r);
}

TEST(OpenAssumptions, ClosedUniversalIdentity) {
  Derivation d = ParseTreeText(
      "(rule ForallI :discharges (1)"
      "  (premise (rule EqI3 (premise (assume 1 \"+ E! a\")) (concl \"+ a = a\")))"
      "  (concl \"+ forall x. x = x\"))");
  CheckReport r = Check(d, BuildRuleSet("free-base+id3"));
  EXPECT_TRUE(r.ok) << FormatReport("d", r);
  EXPECT_TRUE(r.open_assumptions.empty());
  EXPECT_TRUE(OpenAssumptions(d).empty());
}

TEST(OpenAssumptions, ExistentialEliminationFixture) {
  std::vector<OpenAssumption> open = OpenAssumptions(Only(LoadFixture("F4")));
  ASSERT_EQ(open.size(), 1u);
  EXPECT_EQ(open[0].judgment, ParseJudgment("+ exists x. x = t"));
}

TEST(Check, ReportOkIffNoDiagnostics) {
  for (const Fixture& fx : testing::Fixtures()) {
    RuleSet rs = BuildRuleSet(fx.ruleset);
    for (const NamedDerivation& nd : ParseScript(ReadFile(fx.file)).derivations) {
      CheckReport r = Check(nd.derivation, rs);
      EXPECT_EQ(r.ok, r.diagnostics.empty()) << fx.id;
    }
  }
}

TEST(Check, UnknownRule) {
  Derivation d = ParseTreeText("(rule Bogus (premise (assume 1 \"+ A\")) (concl \"+ A\"))");
  CheckReport r = Check(d, BuildRuleSet("free-base"));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.HasClass(diag::kUnknownRule));
  ASSERT_FALSE(r.diagnostics.empty());
  EXPECT_EQ(PathString(r.diagnostics[0].path), ".");
}

TEST(Check, DiagnosticPathsPointIntoTheTree) {
  Derivation d = ParseTreeText(
      "(rule ExistsI"
      "  (premise (rule EqI1 (concl \"+ t = u\")))"
      "  (premise (assume 1 \"+ E! t\"))"
      "  (concl \"+ exists x. x = t\"))");
  CheckReport r = Check(d, BuildRuleSet("free-base+id1"));
  EXPECT_FALSE(r.ok);
  bool at_axiom = false;
  for (const Diagnostic& g : r.diagnostics) at_axiom |= PathString(g.path) == "0";
  EXPECT_TRUE(at_axiom) << FormatReport("d", r);
}

TEST(Check, InconsistentLabelsAreDiagnosed) {
  Derivation d = ParseTreeText(
      "(rule ExistsI (premise (assume 1 \"+ F(t)\")) (premise (assume 1 \"+ E! t\"))"
      "  (concl \"+ exists x. F(x)\"))");
  CheckReport r = Check(d, BuildRuleSet("free-base"));
  EXPECT_FALSE(r.ok);
  EXPECT_TRUE(r.HasClass(diag::kLabel)) << FormatReport("d", r);
}

TEST(CheckProperty, PolarityGuard) {
  RuleSet rs = BuildRuleSet("free-base+id1");
  for (const char* j : {"- F(t)", "! t", "/ t"}) {
    Derivation leaf = Derivation::Assume(1, ParseJudgment(j));
    CheckReport r = Check(leaf, rs);
    EXPECT_FALSE(r.ok) << j;
    EXPECT_TRUE(r.HasClass(diag::kPolarity)) << j;
    // Also when buried under a valid-looking step.
    Derivation step = Derivation::Step(
        "ExistsI", {Derivation::Assume(2, ParseJudgment("+ F(t)")), leaf},
        ParseJudgment("+ exists x. F(x)"));
    EXPECT_TRUE(Check(step, rs).HasClass(diag::kPolarity)) << j;
  }
}

TEST(CheckProperty, MatchingIsSound) {
  int steps = 0;
  for (const Sample& s : CheckedSamples()) {
    CheckReport report = Check(s.derivation, s.rules);
    ASSERT_TRUE(report.ok) << EmitDerivation(s.derivation);
    PostOrder(s.derivation, [&](const Derivation& node, const TreePath& path) {
      if (node.is_assumption()) return;
      const RuleSchema& schema = LookupRule(s.rules, node.rule());
      std::optional<Bindings> b = MatchStep(node, schema);
      ASSERT_TRUE(b.has_value()) << PathString(path);
      std::optional<Judgment> replay;
      if (schema.rewrite) {
        const Formula& eq = node.premises()[0].conclusion().formula();
        replay = Judgment::Asserted(Substitute(*node.context(), *node.context_var(), eq.right()));
      } else {
        replay = Instantiate(schema.conclusion, *b);
      }
      ASSERT_TRUE(replay.has_value()) << node.rule();
      EXPECT_TRUE(AlphaEqual(*replay, node.conclusion()))
          << node.rule() << ": " << ToString(*replay) << " vs " << ToString(node.conclusion());
      ++steps;
    });
  }
  EXPECT_GT(steps, 1000);
}

TEST(CheckProperty, DischargeMonotonicity) {
  for (const Sample& s : CheckedSamples()) {
    PostOrder(s.derivation, [&](const Derivation& node, const TreePath& path) {
      if (node.is_assumption()) return;
      std::set<std::string> allowed;
      for (size_t i = 0; i < node.premises().size(); ++i) {
        for (const OpenAssumption& o : OpenAssumptions(node.premises()[i])) {
          bool closed = false;
          for (const Discharge& d : node.discharges())
            closed |= d.premise == i && d.label == o.label;
          if (!closed) allowed.insert(std::to_string(o.label) + ":" + AlphaKey(o.judgment));
        }
      }
      for (const std::string& k : OpenKeys(node))
        EXPECT_TRUE(allowed.count(k)) << k << " at " << PathString(path);
    });
  }
}

TEST(CheckProperty, Deterministic) {
  for (const Sample& s : CheckedSamples()) {
    CheckReport a = Check(s.derivation, s.rules);
    CheckReport b = Check(s.derivation, s.rules);
    EXPECT_EQ(FormatReport("d", a), FormatReport("d", b));
  }
  for (const Fixture& fx : testing::Fixtures()) {
    RuleSet rs = BuildRuleSet(fx.ruleset);
    Script script = ParseScript(ReadFile(fx.file));
    for (const NamedDerivation& nd : script.derivations)
      EXPECT_EQ(FormatReport(nd.name, Check(nd.derivation, rs)),
                FormatReport(nd.name, Check(nd.derivation, rs)));
  }
}

}  // namespace
}  // namespace plog
