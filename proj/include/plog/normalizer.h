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

// Detour reduction. A maximal occurrence is a judgment concluded by an
// introduction and immediately used as the major premise of the matching
// elimination. Three reduction shapes cover every detour in the catalogue:
//
//   round trip   unary sign/force conversion and its inverse; the pair is
//                replaced by the introduction's premise.
//   generalize   eigenvariable introduction then instantiation; the witness
//                is substituted for the eigenvariable and the existence
//                derivation grafted onto the discharged [E! a] leaves.
//   witness      instance-plus-existence introduction then elimination; both
//                derivations are grafted onto the minor's hypotheses.
//
// Existence judgments produced by atomic denotation and consumed as an
// existence premise cannot be removed; they are reported as ad-irreducible.
// Maxima hidden behind an existential elimination (which would need a
// permutative conversion) are reported as blocked.

#ifndef PLOG_NORMALIZER_H_
#define PLOG_NORMALIZER_H_

#include <stdexcept>
#include <string>
#include <vector>

#include "plog/derivation.h"
#include "plog/rulesets.h"

namespace plog {

struct MaximalOccurrence {
  enum class Kind { kReducible, kAdIrreducible, kBlocked };
  TreePath path;       // node concluding the maximal judgment
  TreePath elim_path;  // the step consuming it
  Judgment judgment;
  Kind kind;
  std::string note;    // why a blocked occurrence cannot be reduced
};

std::string KindName(MaximalOccurrence::Kind kind);

class PreconditionViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotReducible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// All maximal occurrences, ordered by post-order position of the consuming
// step (leftmost-innermost first). Throws PreconditionViolated unless `d`
// checks under `rs`.
std::vector<MaximalOccurrence> FindMaximal(const Derivation& d,
                                           const RuleSet& rs);

// Contracts one reducible occurrence. Throws NotReducible otherwise.
Derivation ReduceStep(const Derivation& d, const MaximalOccurrence& at,
                      const RuleSet& rs);

struct NormalizeResult {
  Derivation derivation;
  std::vector<MaximalOccurrence> surviving;  // ad-irreducible and blocked
  int steps = 0;
};

// Reduces leftmost-innermost until no reducible occurrence remains. Throws
// std::runtime_error if `max_steps` reductions do not suffice.
NormalizeResult Normalize(const Derivation& d, const RuleSet& rs,
                          int max_steps = 10000);

enum class SubformulaMode { kFull, kRestricted };

struct SubformulaWitness {
  TreePath path;
  Formula formula;
};

struct SubformulaResult {
  bool holds = true;
  std::vector<SubformulaWitness> witnesses;
};

// Checks that every formula in `d` is a subformula of the conclusion or an
// open assumption, counting instances of quantified bodies (with any term
// occurring in `d`) as subformulas. Restricted mode discounts E! t when it
// is concluded by atomic denotation, fills an existence premise, or is a
// hypothesis discharged by a quantifier rule.
SubformulaResult SubformulaCheck(const Derivation& d, const RuleSet& rs,
                                 SubformulaMode mode);

}  // namespace plog

#endif  // PLOG_NORMALIZER_H_
