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

// Declarative catalogue of rule schemas and the named configurations that
// group them.
//
// Configurations (case-insensitive, composed with `+`):
//
//   free-base     ForallI ForallE ExistsI ExistsE EqE
//   id1 id2 id3   one identity introduction each (EqI1, EqI2, EqI3)
//   tennant       free-base quantifier rules + EqE + AD + EqI4
//   rumfitt-neg   NegAssertI NegAssertE NegDenialI NegDenialE
//   textor        rumfitt-neg + EBangI1 EBangE1 EBangI2 EBangE2
//   textor-prime  rumfitt-neg + EBangI1 EBangE1 EBangI2p EBangE2p
//   impasse       Incompat ImpasseReject ImpasseAck
//   bilateral-q   PForallI PForallE PExistsI PExistsE
//                 NForallI NForallE NExistsI NExistsE
//   iota-ext      IotaE (and IotaI with RuleSetOptions::iota_converse)
//   ad-bilateral  ADAck ADReject
//
// The first three rows are unilateral; mixing them with a signed
// configuration is an IncompatibleComposition.

#ifndef PLOG_RULESETS_H_
#define PLOG_RULESETS_H_

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "plog/pattern.h"

namespace plog {

enum class RuleClass { kIntro, kElim, kStructural };
enum class Polarity { kUnilateral, kBilateral };

struct PremiseSlot {
  JudgmentPattern judgment;
  // Hypotheses this premise's subderivation may discharge.
  std::vector<JudgmentPattern> discharges;
};

struct SideCondition {
  enum class Kind {
    // `term` must be a variable, free neither in the conclusion nor in other
    // premises nor in undischarged assumptions of premise `premise`.
    kEigenvariable,
    // `term` must be an argument of the atomic formula `formula`.
    kArgumentOf,
  };
  Kind kind;
  std::string term;
  std::string formula;
  size_t premise = 0;
};

// How an introduction's conclusion is removed again by its elimination.
enum class Detour {
  kNone,
  kRoundTrip,   // unary force/sign conversions; cancel to the premise
  kGeneralize,  // eigenvariable introductions (ForallI, NExistsI, ...)
  kWitness,     // instance-plus-existence introductions (ExistsI, ...)
};

struct RuleSchema {
  std::string name;
  std::vector<PremiseSlot> premises;
  JudgmentPattern conclusion;
  std::vector<SideCondition> side_conditions;
  RuleClass classification = RuleClass::kStructural;
  // Conclusion metavariables that premises do not determine (e.g. `t` in
  // EqI1), in CollectMetas notation.
  std::set<std::string> arbitrary;

  Detour detour = Detour::kNone;       // intro side
  std::optional<size_t> major;         // elim side
  std::vector<std::string> cancels;    // intros forming a detour at `major`
  std::optional<size_t> existence_premise;
  bool atomic_denotation = false;      // AD-like: existence from an atom
  // Premise and conclusion are instances of the step's explicit :context.
  bool rewrite = false;

  std::optional<std::string> eigenvariable() const;
};

struct RuleSet {
  std::string name;
  Polarity polarity = Polarity::kUnilateral;
  std::vector<RuleSchema> schemas;

  const RuleSchema* Find(const std::string& rule) const;
};

struct RuleSetOptions {
  // NegDenialI exactly as typeset (- A / + ~A) rather than + A / - ~A.
  bool as_printed = false;
  bool iota_converse = false;
};

class RuleSetError : public std::runtime_error {
 public:
  enum class Kind { kUnknownConfig, kIncompatibleComposition, kNotFound };
  RuleSetError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Builds e.g. "textor-prime+impasse+bilateral-q". Throws RuleSetError.
RuleSet BuildRuleSet(const std::string& composition, const RuleSetOptions& opts = {});

// Throws RuleSetError(kNotFound).
const RuleSchema& LookupRule(const RuleSet& rs, const std::string& name);

// Conclusion metavariables not covered by a premise, a dischargeable
// hypothesis, an eigenvariable condition or `arbitrary`.
std::vector<std::string> UncoveredMetas(const RuleSchema& schema);

// All configuration names, in catalogue order.
const std::vector<std::string>& ConfigurationNames();

std::string Describe(const RuleSchema& schema);

}  // namespace plog

#endif  // PLOG_RULESETS_H_
