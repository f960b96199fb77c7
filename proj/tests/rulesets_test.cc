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

#include "plog/parser.h"
#include "plog/rulesets.h"
#include "test_util.h"

namespace plog {
namespace {

std::set<std::string> Names(const RuleSet& rs) {
  std::set<std::string> out;
  for (const RuleSchema& s : rs.schemas) out.insert(s.name);
  return out;
}

// Every configuration string exercised by the tests and the corpus.
const std::vector<std::string>& Configurations() {
  static const std::vector<std::string> kAll = {
      "free-base",       "free-base+id1",
      "free-base+id2",   "free-base+id3",
      "id1",             "tennant",
      "rumfitt-neg",     "textor",
      "textor-prime",    "textor+impasse",
      "textor-prime+impasse+bilateral-q",
      "textor-prime+impasse+bilateral-q+iota-ext+ad-bilateral",
      "rumfitt-neg+bilateral-q",
      "impasse",         "bilateral-q",
      "iota-ext",        "ad-bilateral"};
  return kAll;
}

TEST(BuildRuleSet, FreeBaseWithFirstIdentityRule) {
  RuleSet rs = BuildRuleSet("free-base+id1");
  EXPECT_EQ(rs.schemas.size(), 6u);
  EXPECT_EQ(Names(rs), (std::set<std::string>{"ForallI", "ForallE", "ExistsI", "ExistsE",
                                              "EqE", "EqI1"}));
  EXPECT_EQ(rs.polarity, Polarity::kUnilateral);
}

TEST(BuildRuleSet, SignedComposition) {
  RuleSet rs = BuildRuleSet("textor-prime+impasse+bilateral-q");
  // Four negation rules, two pairs of existence rules, three impasse rules,
  // eight signed quantifier rules.
  std::set<std::string> expected = {
      "NegAssertI", "NegAssertE", "NegDenialI", "NegDenialE",
      "EBangI1",    "EBangE1",    "EBangI2p",   "EBangE2p",
      "Incompat",   "ImpasseReject", "ImpasseAck",
      "PForallI",   "PForallE",   "PExistsI",   "PExistsE",
      "NForallI",   "NForallE",   "NExistsI",   "NExistsE"};
  EXPECT_EQ(expected.size(), 4u + 4u + 3u + 8u);
  EXPECT_EQ(rs.schemas.size(), expected.size());
  EXPECT_EQ(Names(rs), expected);
  EXPECT_EQ(rs.polarity, Polarity::kBilateral);
}

TEST(BuildRuleSet, IncompatibleComposition) {
  try {
    BuildRuleSet("free-base+textor");
    FAIL() << "accepted";
  } catch (const RuleSetError& e) {
    EXPECT_EQ(e.kind(), RuleSetError::Kind::kIncompatibleComposition);
  }
}

TEST(BuildRuleSet, UnknownConfig) {
  try {
    BuildRuleSet("free-base+nonsense");
    FAIL() << "accepted";
  } catch (const RuleSetError& e) {
    EXPECT_EQ(e.kind(), RuleSetError::Kind::kUnknownConfig);
  }
}

TEST(BuildRuleSet, NamesAreCaseInsensitive) {
  EXPECT_EQ(Names(BuildRuleSet("TEXTOR-Prime+Impasse")),
            Names(BuildRuleSet("textor-prime+impasse")));
}

TEST(BuildRuleSet, IdentityParameter) {
  EXPECT_EQ(BuildRuleSet("free-base").schemas.size(), 5u);
  EXPECT_TRUE(BuildRuleSet("free-base+id2").Find("EqI2"));
  EXPECT_TRUE(BuildRuleSet("free-base+id3").Find("EqI3"));
  EXPECT_FALSE(BuildRuleSet("tennant").Find("EqI1"));
}

TEST(BuildRuleSet, IotaConverseIsOptIn) {
  EXPECT_FALSE(BuildRuleSet("textor+iota-ext").Find("IotaI"));
  EXPECT_TRUE(BuildRuleSet("textor+iota-ext", {false, true}).Find("IotaI"));
  EXPECT_TRUE(BuildRuleSet("textor+iota-ext").Find("IotaE"));
}

TEST(RuleLookup, UniversalElimination) {
  RuleSet rs = BuildRuleSet("free-base");
  const RuleSchema& s = LookupRule(rs, "ForallE");
  ASSERT_EQ(s.premises.size(), 2u);
  EXPECT_EQ(s.classification, RuleClass::kElim);
  // Instantiating the schema on concrete bindings yields the displayed shape.
  Bindings b;
  b.formulas.emplace("A", ParseFormula("F(x)"));
  b.vars.emplace("x", "x");
  b.terms.emplace("t", ParseTerm("t"));
  EXPECT_EQ(Instantiate(s.premises[0].judgment, b), ParseJudgment("+ forall x. F(x)"));
  EXPECT_EQ(Instantiate(s.premises[1].judgment, b), ParseJudgment("+ E! t"));
  EXPECT_EQ(Instantiate(s.conclusion, b), ParseJudgment("+ F(t)"));
}

TEST(RuleLookup, NotFound) {
  RuleSet rs = BuildRuleSet("textor");
  try {
    LookupRule(rs, "ForallE");
    FAIL() << "found";
  } catch (const RuleSetError& e) {
    EXPECT_EQ(e.kind(), RuleSetError::Kind::kNotFound);
  }
}

TEST(RuleLookup, AtomicDenotation) {
  RuleSet rs = BuildRuleSet("tennant");
  const RuleSchema& ad = LookupRule(rs, "AD");
  ASSERT_EQ(ad.premises.size(), 1u);
  EXPECT_TRUE(ad.atomic_denotation);
  Bindings b;
  b.formulas.emplace("F", ParseFormula("G(t, u)"));
  b.terms.emplace("t", ParseTerm("t"));
  EXPECT_EQ(Instantiate(ad.conclusion, b), ParseJudgment("+ E! t"));
}

TEST(RuleSetInvariant, MetavariableClosure) {
  for (const std::string& config : Configurations()) {
    for (bool printed : {false, true}) {
      RuleSet rs = BuildRuleSet(config, {printed, true});
      for (const RuleSchema& s : rs.schemas)
        EXPECT_TRUE(UncoveredMetas(s).empty()) << config << " " << s.name;
    }
  }
}

TEST(RuleSetInvariant, UniqueNames) {
  for (const std::string& config : Configurations()) {
    RuleSet rs = BuildRuleSet(config, {false, true});
    EXPECT_EQ(Names(rs).size(), rs.schemas.size()) << config;
  }
}

bool AssertedOnly(const JudgmentPattern& p) {
  if (p.kind == JudgmentPattern::Kind::kAny)
    return p.allowed == std::set<Judgment::Kind>{Judgment::Kind::kAsserted};
  return p.kind == JudgmentPattern::Kind::kAsserted;
}

TEST(RuleSetInvariant, UnilateralSetsOnlyAssert) {
  for (const std::string& config : Configurations()) {
    RuleSet rs = BuildRuleSet(config, {false, true});
    if (rs.polarity != Polarity::kUnilateral) continue;
    for (const RuleSchema& s : rs.schemas) {
      EXPECT_TRUE(AssertedOnly(s.conclusion)) << s.name;
      for (const PremiseSlot& p : s.premises) {
        EXPECT_TRUE(AssertedOnly(p.judgment)) << s.name;
        for (const JudgmentPattern& h : p.discharges) EXPECT_TRUE(AssertedOnly(h)) << s.name;
      }
    }
  }
}

TEST(RuleSetInvariant, EveryCancellationNamesAnIntroduction) {
  for (const std::string& config : Configurations()) {
    RuleSet rs = BuildRuleSet(config, {false, true});
    for (const RuleSchema& s : rs.schemas) {
      if (s.cancels.empty()) continue;
      ASSERT_TRUE(s.major.has_value()) << s.name;
      for (const std::string& intro : s.cancels) {
        const RuleSchema* other = rs.Find(intro);
        if (!other) continue;  // the partner may live in another configuration
        EXPECT_EQ(other->classification, RuleClass::kIntro) << intro;
        EXPECT_NE(other->detour, Detour::kNone) << intro;
      }
    }
  }
}

TEST(NegationVariant, AsPrintedDenialIntroduction) {
  RuleSet plain = BuildRuleSet("rumfitt-neg");
  RuleSet typeset = BuildRuleSet("rumfitt-neg", {true, false});
  const RuleSchema& standard = LookupRule(plain, "NegDenialI");
  EXPECT_EQ(standard.premises[0].judgment.kind, JudgmentPattern::Kind::kAsserted);
  EXPECT_EQ(standard.conclusion.kind, JudgmentPattern::Kind::kDenied);
  const RuleSchema& printed = LookupRule(typeset, "NegDenialI");
  EXPECT_EQ(printed.premises[0].judgment.kind, JudgmentPattern::Kind::kDenied);
  EXPECT_EQ(printed.conclusion.kind, JudgmentPattern::Kind::kAsserted);
}

TEST(ConfigurationNames, Catalogue) {
  std::set<std::string> names(ConfigurationNames().begin(), ConfigurationNames().end());
  for (const char* n : {"free-base", "id1", "id2", "id3", "tennant", "rumfitt-neg", "textor",
                        "textor-prime", "impasse", "bilateral-q", "iota-ext", "ad-bilateral"})
    EXPECT_TRUE(names.count(n)) << n;
}

}  // namespace
}  // namespace plog
