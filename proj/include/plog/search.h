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

// Bounded backward proof search by iterative deepening.
//
// Candidate premises come from a finite pool: subformulas of the goal, the
// hypotheses and the rule set's closed axioms, instantiated with the terms
// of the sequent plus the eigenvariables introduced along the current
// branch. No description terms are synthesised, so a NotFound answer only
// means no derivation exists within that pool and height bound.

#ifndef PLOG_SEARCH_H_
#define PLOG_SEARCH_H_

#include <optional>
#include <stdexcept>
#include <vector>

#include "plog/derivation.h"
#include "plog/rulesets.h"

namespace plog {

struct Sequent {
  std::vector<Judgment> hypotheses;
  Judgment goal = Judgment::Absurd();
};

struct SearchOptions {
  int max_depth = 8;
  // Visited-goal budget per call; exceeding it ends the search unsuccessfully
  // with `budget_exhausted` set.
  long max_nodes = 5'000'000;
};

struct SearchResult {
  std::optional<Derivation> derivation;  // nullopt: NotFoundWithinDepth
  long nodes = 0;
  bool budget_exhausted = false;
};

class SearchError : public std::runtime_error {
 public:
  enum class Kind { kDepthExceeded, kPolarityMismatch };
  SearchError(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

// Looks for a derivation of `s.goal` of height at most `depth` whose open
// assumptions are among `s.hypotheses` (labelled 1, 2, ... in order). A
// returned derivation has passed Check; a candidate that fails it is
// discarded and counted in SearchDiscrepancies().
SearchResult Search(const Sequent& s, const RuleSet& rs, int depth,
                    const SearchOptions& opts = {});

// Both directions found within `depth`.
bool Interderivable(const Judgment& a, const Judgment& b, const RuleSet& rs,
                    int depth, const SearchOptions& opts = {});

// Process-wide count of search results rejected by the checker.
long SearchDiscrepancies();

}  // namespace plog

#endif  // PLOG_SEARCH_H_
