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

#include "plog/rulesets.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>

namespace plog {

namespace {

using FP = FormulaPattern;
using JP = JudgmentPattern;
using JK = Judgment::Kind;

TermPattern T(const char* name) { return TermPattern::Meta(name); }
FP A() { return FP::Meta("A"); }
FP At(const char* t) { return FP::Instance("A", "x", T(t)); }
FP AllA() { return FP::Forall("x", A()); }
FP ExA() { return FP::Exists("x", A()); }
FP EB(const char* t) { return FP::ExistsBang(T(t)); }
JP Plus(FP f) { return JP::Asserted(std::move(f)); }
JP Minus(FP f) { return JP::Denied(std::move(f)); }
JP Ack(TermPattern t) { return JP::Acknowledged(std::move(t)); }
JP Rej(TermPattern t) { return JP::Rejected(std::move(t)); }
PremiseSlot Slot(JP j, std::vector<JP> discharges = {}) {
  return {std::move(j), std::move(discharges)};
}

SideCondition Eigen(size_t premise) {
  return {SideCondition::Kind::kEigenvariable, "a", "", premise};
}
SideCondition ArgOf() { return {SideCondition::Kind::kArgumentOf, "t", "F", 0}; }

RuleSchema Intro(std::string name, std::vector<PremiseSlot> premises, JP concl,
                 Detour detour = Detour::kNone) {
  RuleSchema s;
  s.name = std::move(name);
  s.premises = std::move(premises);
  s.conclusion = std::move(concl);
  s.classification = RuleClass::kIntro;
  s.detour = detour;
  return s;
}

RuleSchema Elim(std::string name, std::vector<PremiseSlot> premises, JP concl,
                std::vector<std::string> cancels = {}) {
  RuleSchema s;
  s.name = std::move(name);
  s.premises = std::move(premises);
  s.conclusion = std::move(concl);
  s.classification = RuleClass::kElim;
  s.major = 0;
  s.cancels = std::move(cancels);
  return s;
}

RuleSchema Structural(std::string name, std::vector<PremiseSlot> premises,
                      JP concl) {
  RuleSchema s;
  s.name = std::move(name);
  s.premises = std::move(premises);
  s.conclusion = std::move(concl);
  s.classification = RuleClass::kStructural;
  return s;
}

RuleSchema WithExistence(RuleSchema s, size_t premise) {
  s.existence_premise = premise;
  return s;
}

RuleSchema WithSide(RuleSchema s, SideCondition c) {
  s.side_conditions.push_back(std::move(c));
  return s;
}

// --- Unilateral free logic ---------------------------------------------------

std::vector<RuleSchema> FreeQuantifierRules() {
  const std::set<JK> asserted{JK::kAsserted};
  return {
      WithSide(Intro("ForallI", {Slot(Plus(At("a")), {Plus(EB("a"))})},
                     Plus(AllA()), Detour::kGeneralize),
               Eigen(0)),
      WithExistence(Elim("ForallE", {Slot(Plus(AllA())), Slot(Plus(EB("t")))},
                         Plus(At("t")), {"ForallI"}),
                    1),
      WithExistence(Intro("ExistsI", {Slot(Plus(At("t"))), Slot(Plus(EB("t")))},
                          Plus(ExA()), Detour::kWitness),
                    1),
      WithSide(Elim("ExistsE",
                    {Slot(Plus(ExA())),
                     Slot(JP::Any("C", asserted), {Plus(At("a")), Plus(EB("a"))})},
                    JP::Any("C", asserted), {"ExistsI"}),
               Eigen(1)),
  };
}

RuleSchema IdentityElim() {
  RuleSchema s = Elim("EqE",
                      {Slot(Plus(FP::Eq(T("t"), T("u")))), Slot(Plus(At("t")))},
                      Plus(At("u")));
  s.major.reset();
  s.rewrite = true;
  return s;
}

RuleSchema IdentityIntro(int variant) {
  switch (variant) {
    case 1: {
      RuleSchema s = Intro("EqI1", {}, Plus(FP::Eq(T("t"), T("t"))));
      s.arbitrary = {"t:t"};
      return s;
    }
    case 2:
      return Intro("EqI2", {},
                   Plus(FP::Forall("x", FP::Eq(TermPattern::BoundVar("x"),
                                               TermPattern::BoundVar("x")))));
    default:
      return Intro("EqI3", {Slot(Plus(EB("t")))}, Plus(FP::Eq(T("t"), T("t"))));
  }
}

std::vector<RuleSchema> TennantRules() {
  RuleSchema ad = WithSide(
      Intro("AD", {Slot(Plus(FP::Atomic("F")))}, Plus(EB("t"))), ArgOf());
  ad.atomic_denotation = true;
  return {ad, WithSide(Intro("EqI4", {Slot(Plus(FP::Atomic("F")))},
                             Plus(FP::Eq(T("t"), T("t")))),
                       ArgOf())};
}

// --- Bilateral ---------------------------------------------------------------

std::vector<RuleSchema> NegationRules(const RuleSetOptions& opts) {
  std::vector<RuleSchema> out = {
      Intro("NegAssertI", {Slot(Minus(A()))}, Plus(FP::Not(A())),
            Detour::kRoundTrip),
      Elim("NegAssertE", {Slot(Plus(FP::Not(A())))}, Minus(A()), {"NegAssertI"}),
      Intro("NegDenialI", {Slot(Plus(A()))}, Minus(FP::Not(A())),
            Detour::kRoundTrip),
      Elim("NegDenialE", {Slot(Minus(FP::Not(A())))}, Plus(A()), {"NegDenialI"}),
  };
  if (opts.as_printed) {
    out[2] = Intro("NegDenialI", {Slot(Minus(A()))}, Plus(FP::Not(A())),
                   Detour::kRoundTrip);
    out[1].cancels.push_back("NegDenialI");
    out[3].cancels.clear();
  }
  return out;
}

std::vector<RuleSchema> ExistenceForceRules(bool primed) {
  std::vector<RuleSchema> out = {
      Intro("EBangI1", {Slot(Ack(T("t")))}, Plus(EB("t")), Detour::kRoundTrip),
      Elim("EBangE1", {Slot(Plus(EB("t")))}, Ack(T("t")), {"EBangI1"}),
  };
  if (primed) {
    out.push_back(Intro("EBangI2p", {Slot(Rej(T("t")))}, Minus(EB("t")),
                        Detour::kRoundTrip));
    out.push_back(Elim("EBangE2p", {Slot(Minus(EB("t")))}, Rej(T("t")),
                       {"EBangI2p"}));
  } else {
    out.push_back(Intro("EBangI2", {Slot(Rej(T("t")))}, Plus(FP::Not(EB("t"))),
                        Detour::kRoundTrip));
    out.push_back(Elim("EBangE2", {Slot(Plus(FP::Not(EB("t"))))}, Rej(T("t")),
                       {"EBangI2"}));
  }
  return out;
}

std::vector<RuleSchema> ImpasseRules() {
  return {
      Structural("Incompat", {Slot(Ack(T("t"))), Slot(Rej(T("t")))},
                 JP::Absurd()),
      Structural("ImpasseReject", {Slot(JP::Absurd(), {Plus(EB("t"))})},
                 Rej(T("t"))),
      Structural("ImpasseAck", {Slot(JP::Absurd(), {Minus(EB("t"))})},
                 Ack(T("t"))),
  };
}

std::vector<RuleSchema> BilateralQuantifierRules() {
  const std::set<JK> signed_kinds{JK::kAsserted, JK::kDenied};
  return {
      WithSide(Intro("PForallI", {Slot(Plus(At("a")), {Plus(EB("a"))})},
                     Plus(AllA()), Detour::kGeneralize),
               Eigen(0)),
      WithExistence(Elim("PForallE", {Slot(Plus(AllA())), Slot(Ack(T("t")))},
                         Plus(At("t")), {"PForallI"}),
                    1),
      WithExistence(Intro("PExistsI", {Slot(Plus(At("t"))), Slot(Ack(T("t")))},
                          Plus(ExA()), Detour::kWitness),
                    1),
      WithSide(Elim("PExistsE",
                    {Slot(Plus(ExA())), Slot(JP::Any("alpha", signed_kinds),
                                             {Plus(At("a")), Plus(EB("a"))})},
                    JP::Any("alpha", signed_kinds), {"PExistsI"}),
               Eigen(1)),
      WithExistence(Intro("NForallI", {Slot(Minus(At("t"))), Slot(Ack(T("t")))},
                          Minus(AllA()), Detour::kWitness),
                    1),
      WithSide(Elim("NForallE",
                    {Slot(Minus(AllA())), Slot(JP::Any("alpha", signed_kinds),
                                               {Minus(At("a")), Plus(EB("a"))})},
                    JP::Any("alpha", signed_kinds), {"NForallI"}),
               Eigen(1)),
      WithSide(Intro("NExistsI", {Slot(Minus(At("a")), {Plus(EB("a"))})},
                     Minus(ExA()), Detour::kGeneralize),
               Eigen(0)),
      WithExistence(Elim("NExistsE", {Slot(Minus(ExA())), Slot(Ack(T("t")))},
                         Minus(At("t")), {"NExistsI"}),
                    1),
  };
}

std::vector<RuleSchema> IotaRules(const RuleSetOptions& opts) {
  TermPattern iota = TermPattern::Iota("x", "A");
  std::vector<RuleSchema> out = {
      Elim("IotaE", {Slot(Ack(iota))}, Plus(FP::Instance("A", "x", iota))),
  };
  out[0].major.reset();
  if (opts.iota_converse)
    out.push_back(Intro("IotaI", {Slot(Plus(FP::Instance("A", "x", iota)))},
                        Ack(iota)));
  return out;
}

std::vector<RuleSchema> BilateralDenotationRules() {
  RuleSchema ack =
      WithSide(Intro("ADAck", {Slot(Plus(FP::Atomic("F")))}, Ack(T("t"))),
               ArgOf());
  ack.atomic_denotation = true;
  RuleSchema reject = WithSide(
      Intro("ADReject", {Slot(Rej(T("t")))}, Minus(FP::Atomic("F"))), ArgOf());
  reject.arbitrary = {"f:F"};
  return {ack, reject};
}

struct Configuration {
  std::string name;
  Polarity polarity;
  std::function<std::vector<RuleSchema>(const RuleSetOptions&)> build;
};

const std::vector<Configuration>& Catalogue() {
  static const std::vector<Configuration> kCatalogue = {
      {"free-base", Polarity::kUnilateral,
       [](const RuleSetOptions&) {
         auto rules = FreeQuantifierRules();
         rules.push_back(IdentityElim());
         return rules;
       }},
      {"id1", Polarity::kUnilateral,
       [](const RuleSetOptions&) { return std::vector{IdentityIntro(1)}; }},
      {"id2", Polarity::kUnilateral,
       [](const RuleSetOptions&) { return std::vector{IdentityIntro(2)}; }},
      {"id3", Polarity::kUnilateral,
       [](const RuleSetOptions&) { return std::vector{IdentityIntro(3)}; }},
      {"tennant", Polarity::kUnilateral,
       [](const RuleSetOptions&) {
         auto rules = FreeQuantifierRules();
         rules.push_back(IdentityElim());
         for (RuleSchema& r : TennantRules()) rules.push_back(std::move(r));
         return rules;
       }},
      {"rumfitt-neg", Polarity::kBilateral, NegationRules},
      {"textor", Polarity::kBilateral,
       [](const RuleSetOptions& o) {
         auto rules = NegationRules(o);
         for (RuleSchema& r : ExistenceForceRules(false))
           rules.push_back(std::move(r));
         return rules;
       }},
      {"textor-prime", Polarity::kBilateral,
       [](const RuleSetOptions& o) {
         auto rules = NegationRules(o);
         for (RuleSchema& r : ExistenceForceRules(true))
           rules.push_back(std::move(r));
         return rules;
       }},
      {"impasse", Polarity::kBilateral,
       [](const RuleSetOptions&) { return ImpasseRules(); }},
      {"bilateral-q", Polarity::kBilateral,
       [](const RuleSetOptions&) { return BilateralQuantifierRules(); }},
      {"iota-ext", Polarity::kBilateral, IotaRules},
      {"ad-bilateral", Polarity::kBilateral,
       [](const RuleSetOptions&) { return BilateralDenotationRules(); }},
  };
  return kCatalogue;
}

std::string Lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::replace(s.begin(), s.end(), '_', '-');
  return s;
}

}  // namespace

std::optional<std::string> RuleSchema::eigenvariable() const {
  for (const SideCondition& c : side_conditions)
    if (c.kind == SideCondition::Kind::kEigenvariable) return c.term;
  return std::nullopt;
}

const RuleSchema* RuleSet::Find(const std::string& rule) const {
  for (const RuleSchema& s : schemas)
    if (s.name == rule) return &s;
  return nullptr;
}

const std::vector<std::string>& ConfigurationNames() {
  static const std::vector<std::string> kNames = [] {
    std::vector<std::string> names;
    for (const Configuration& c : Catalogue()) names.push_back(c.name);
    return names;
  }();
  return kNames;
}

RuleSet BuildRuleSet(const std::string& composition, const RuleSetOptions& opts) {
  RuleSet rs;
  std::vector<std::string> parts;
  size_t start = 0;
  std::string lowered = Lower(composition);
  while (true) {
    size_t plus = lowered.find('+', start);
    std::string part = lowered.substr(start, plus == std::string::npos
                                                 ? std::string::npos
                                                 : plus - start);
    part.erase(0, part.find_first_not_of(" \t"));
    part.erase(part.find_last_not_of(" \t") + 1);
    if (part.empty())
      throw RuleSetError(RuleSetError::Kind::kUnknownConfig,
                         "empty configuration name in '" + composition + "'");
    parts.push_back(part);
    if (plus == std::string::npos) break;
    start = plus + 1;
  }

  std::optional<Polarity> polarity;
  std::string first;
  for (const std::string& part : parts) {
    auto it = std::find_if(Catalogue().begin(), Catalogue().end(),
                           [&](const Configuration& c) { return c.name == part; });
    if (it == Catalogue().end())
      throw RuleSetError(RuleSetError::Kind::kUnknownConfig,
                         "unknown configuration '" + part + "'");
    if (polarity && *polarity != it->polarity)
      throw RuleSetError(RuleSetError::Kind::kIncompatibleComposition,
                         "cannot combine unilateral and bilateral configurations ('" +
                             first + "' with '" + part + "')");
    if (!polarity) first = part;
    polarity = it->polarity;
    for (RuleSchema& schema : it->build(opts))
      if (!rs.Find(schema.name)) rs.schemas.push_back(std::move(schema));
  }
  rs.polarity = *polarity;
  for (size_t i = 0; i < parts.size(); ++i)
    rs.name += (i ? "+" : "") + parts[i];
  return rs;
}

const RuleSchema& LookupRule(const RuleSet& rs, const std::string& name) {
  if (const RuleSchema* s = rs.Find(name)) return *s;
  throw RuleSetError(RuleSetError::Kind::kNotFound,
                     "rule " + name + " is not in " + rs.name);
}

std::vector<std::string> UncoveredMetas(const RuleSchema& schema) {
  std::set<std::string> covered = schema.arbitrary;
  for (const PremiseSlot& slot : schema.premises) {
    CollectMetas(slot.judgment, covered);
    for (const JudgmentPattern& h : slot.discharges) CollectMetas(h, covered);
  }
  if (auto a = schema.eigenvariable()) covered.insert("t:" + *a);
  // An argument of a premise atom is determined by that premise.
  for (const SideCondition& c : schema.side_conditions)
    if (c.kind == SideCondition::Kind::kArgumentOf) covered.insert("t:" + c.term);
  std::set<std::string> needed;
  CollectMetas(schema.conclusion, needed);
  std::vector<std::string> out;
  for (const std::string& m : needed) {
    // Bound-variable names in the conclusion are chosen by the conclusion.
    if (m.rfind("x:", 0) == 0) continue;
    if (!covered.count(m)) out.push_back(m);
  }
  return out;
}

std::string Describe(const RuleSchema& schema) {
  std::string out = schema.name + ": ";
  for (size_t i = 0; i < schema.premises.size(); ++i) {
    if (i) out += ", ";
    const PremiseSlot& slot = schema.premises[i];
    if (!slot.discharges.empty()) {
      out += "[";
      for (size_t k = 0; k < slot.discharges.size(); ++k)
        out += (k ? ", " : "") + ToString(slot.discharges[k]);
      out += "] ";
    }
    out += ToString(slot.judgment);
  }
  out += " => " + ToString(schema.conclusion);
  return out;
}

}  // namespace plog
