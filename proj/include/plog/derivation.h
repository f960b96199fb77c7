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

#ifndef PLOG_DERIVATION_H_
#define PLOG_DERIVATION_H_

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "plog/syntax.h"

namespace plog {

// Closes every open assumption labelled `label` in premise `premise`.
struct Discharge {
  int label = 0;
  size_t premise = 0;
  friend bool operator==(const Discharge&, const Discharge&) = default;
};

// A natural-deduction tree. Leaves are labelled assumptions; inner nodes are
// rule applications carrying their conclusion explicitly.
class Derivation {
 public:
  static Derivation Assume(int label, Judgment j);
  static Derivation Step(std::string rule, std::vector<Derivation> premises,
                         Judgment conclusion,
                         std::vector<Discharge> discharges = {});

  bool is_assumption() const { return rule_.empty(); }
  int label() const { return label_; }
  const std::string& rule() const { return rule_; }
  const std::vector<Derivation>& premises() const { return premises_; }
  std::vector<Derivation>& mutable_premises() { return premises_; }
  const Judgment& conclusion() const { return conclusion_; }
  void set_conclusion(Judgment j) { conclusion_ = std::move(j); }
  const std::vector<Discharge>& discharges() const { return discharges_; }
  std::vector<Discharge>& mutable_discharges() { return discharges_; }

  // Explicit rewrite context for identity elimination: the formula whose
  // marked variable is replaced.
  const std::optional<Formula>& context() const { return context_; }
  const std::optional<std::string>& context_var() const { return context_var_; }
  void set_context(Formula f, std::string var) {
    context_ = std::move(f);
    context_var_ = std::move(var);
  }

  // Leaf = 0; a step is one more than its tallest premise.
  int height() const;
  size_t size() const;

  friend bool operator==(const Derivation&, const Derivation&) = default;

 private:
  Derivation(Judgment j) : conclusion_(std::move(j)) {}

  int label_ = 0;
  std::string rule_;
  std::vector<Derivation> premises_;
  Judgment conclusion_;
  std::vector<Discharge> discharges_;
  std::optional<Formula> context_;
  std::optional<std::string> context_var_;
};

// Premise indices from the root, e.g. {0, 1}.
using TreePath = std::vector<size_t>;

// "0/1"; the root is ".".
std::string PathString(const TreePath& path);

const Derivation& NodeAt(const Derivation& d, const TreePath& path);
Derivation& NodeAt(Derivation& d, const TreePath& path);

// Open leaves of `d` with their labels, left to right.
struct OpenAssumption {
  int label;
  Judgment judgment;
};
std::vector<OpenAssumption> OpenAssumptions(const Derivation& d);

// Substitutes `t` for `x` in every judgment and rewrite context of `d`.
Derivation SubstituteTree(const Derivation& d, const std::string& x,
                          const Term& t);

// Premise a bare discharge label resolves to in script syntax: the first
// premise where `label` is open, else the last premise.
size_t DefaultDischargePremise(const std::vector<Derivation>& premises,
                               int label);

// Largest label used anywhere in `d` (0 if none).
int MaxLabel(const Derivation& d);

// Gives every label discharged inside `d` a new number starting at
// `next_label`, which is advanced. Open labels are left alone.
Derivation FreshenDischargedLabels(const Derivation& d, int& next_label);

// Equality up to alpha-conversion of judgments and consistent relabelling of
// assumptions.
bool EquivalentTrees(const Derivation& a, const Derivation& b);

// Calls `fn(node, path)` in post-order (premises left to right, then node).
void PostOrder(const Derivation& d,
               const std::function<void(const Derivation&, const TreePath&)>& fn);

}  // namespace plog

#endif  // PLOG_DERIVATION_H_
