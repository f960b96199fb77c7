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

#include "plog/checker.h"

#include <algorithm>
#include <map>

namespace plog {

namespace {

std::vector<Term> AtomArguments(const Formula& f) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: return f.args();
    case Formula::Kind::kEq: return {f.left(), f.right()};
    case Formula::Kind::kExistsBang: return {f.term()};
    default: return {};
  }
}

bool DischargesAt(const Derivation& step, size_t premise, int label) {
  return std::any_of(step.discharges().begin(), step.discharges().end(),
                     [&](const Discharge& dc) {
                       return dc.premise == premise && dc.label == label;
                     });
}

class StepMatcher {
 public:
  StepMatcher(const Derivation& step, const RuleSchema& schema,
              std::vector<Diagnostic>* out, const TreePath& path)
      : step_(step), schema_(schema), out_(out), path_(path) {}

  std::optional<Bindings> Run() {
    if (step_.premises().size() != schema_.premises.size()) {
      Report(diag::kShape, schema_.name + " takes " +
                               std::to_string(schema_.premises.size()) +
                               " premise(s), found " +
                               std::to_string(step_.premises().size()));
      return std::nullopt;
    }
    bool discharges_ok = CheckDischargeShape();

    Bindings seed;
    if (step_.context()) {
      seed.formulas.emplace("A", *step_.context());
      seed.vars.emplace("x", *step_.context_var());
    }
    Matcher m(std::move(seed));
    for (size_t i = 0; i < schema_.premises.size(); ++i) {
      if (auto miss = m.Match(schema_.premises[i].judgment,
                              step_.premises()[i].conclusion()))
        return Fail(*miss, "premise " + std::to_string(i));
    }
    if (auto miss = m.Match(schema_.conclusion, step_.conclusion()))
      return Fail(*miss, "conclusion");
    if (auto miss = m.Resolve(false)) return Fail(*miss, "");
    if (!MatchDischarged(m)) return std::nullopt;
    if (auto miss = m.Resolve(true)) return Fail(*miss, "");
    if (!CheckSideConditions(m.bindings()) || !discharges_ok) return std::nullopt;
    return m.bindings();
  }

 private:
  void Report(const std::string& cls, const std::string& message) {
    if (out_) out_->push_back({path_, cls, message});
  }

  std::nullopt_t Fail(const Mismatch& miss, const std::string& where) {
    Report(miss.cls, schema_.name + (where.empty() ? "" : " " + where) + ": " +
                         miss.message);
    return std::nullopt;
  }

  bool CheckDischargeShape() {
    bool ok = true;
    for (const Discharge& dc : step_.discharges()) {
      std::string tag = "label " + std::to_string(dc.label);
      if (dc.premise >= schema_.premises.size()) {
        Report(diag::kDischarge, tag + " refers to a missing premise");
        ok = false;
        continue;
      }
      if (schema_.premises[dc.premise].discharges.empty()) {
        Report(diag::kDischarge, schema_.name + " discharges nothing at premise " +
                                     std::to_string(dc.premise) + " (" + tag + ")");
        ok = false;
        continue;
      }
      auto open = OpenAssumptions(step_.premises()[dc.premise]);
      if (std::none_of(open.begin(), open.end(), [&](const OpenAssumption& a) {
            return a.label == dc.label;
          })) {
        Report(diag::kDischarge, "dangling discharge: " + tag +
                                     " is not an open assumption of premise " +
                                     std::to_string(dc.premise));
        ok = false;
      }
    }
    return ok;
  }

  bool MatchDischarged(Matcher& m) {
    for (size_t p = 0; p < step_.premises().size(); ++p) {
      const PremiseSlot& slot = schema_.premises[p];
      if (slot.discharges.empty()) continue;
      std::vector<std::string> seen;
      for (const OpenAssumption& leaf : OpenAssumptions(step_.premises()[p])) {
        if (!DischargesAt(step_, p, leaf.label)) continue;
        std::string key = std::to_string(leaf.label) + AlphaKey(leaf.judgment);
        if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
        seen.push_back(key);
        bool matched = false;
        for (const JudgmentPattern& hyp : slot.discharges) {
          Matcher trial = m;
          if (trial.Match(hyp, leaf.judgment) || trial.Resolve(false)) continue;
          m = std::move(trial);
          matched = true;
          break;
        }
        if (!matched) {
          std::string expected;
          for (const JudgmentPattern& hyp : slot.discharges)
            expected += (expected.empty() ? "" : " or ") + ToString(hyp);
          Report(diag::kDischarge, schema_.name + " cannot discharge [" +
                                       ToString(leaf.judgment) + "]^" +
                                       std::to_string(leaf.label) +
                                       " (expects " + expected + ")");
          return false;
        }
      }
    }
    return true;
  }

  bool CheckSideConditions(const Bindings& b) {
    bool ok = true;
    for (const SideCondition& c : schema_.side_conditions) {
      auto t = b.terms.find(c.term);
      if (t == b.terms.end()) continue;  // vacuous: nothing was instantiated
      if (c.kind == SideCondition::Kind::kArgumentOf) {
        auto f = b.formulas.find(c.formula);
        if (f == b.formulas.end()) continue;
        auto args = AtomArguments(f->second);
        if (std::none_of(args.begin(), args.end(), [&](const Term& a) {
              return AlphaEqual(a, t->second);
            })) {
          Report(diag::kAtomicity, schema_.name + ": " + ToString(t->second) +
                                       " is not an argument of the atomic formula " +
                                       ToString(f->second));
          ok = false;
        }
        continue;
      }
      ok = CheckEigenvariable(t->second, c.premise) && ok;
    }
    return ok;
  }

  bool CheckEigenvariable(const Term& a, size_t premise) {
    if (!a.is_var()) {
      Report(diag::kEigenvariable, schema_.name + ": eigenvariable position holds " +
                                       ToString(a) + ", which is not a variable");
      return false;
    }
    const std::string& v = a.name();
    bool ok = true;
    if (FreeVars(step_.conclusion()).count(v)) {
      Report(diag::kEigenvariable, schema_.name + ": eigenvariable " + v +
                                       " is free in the conclusion " +
                                       ToString(step_.conclusion()));
      ok = false;
    }
    for (size_t i = 0; i < step_.premises().size(); ++i) {
      if (i == premise) continue;
      if (FreeVars(step_.premises()[i].conclusion()).count(v)) {
        Report(diag::kEigenvariable, schema_.name + ": eigenvariable " + v +
                                         " is free in premise " + std::to_string(i));
        ok = false;
      }
    }
    for (const OpenAssumption& leaf : OpenAssumptions(step_.premises()[premise])) {
      if (DischargesAt(step_, premise, leaf.label)) continue;
      if (FreeVars(leaf.judgment).count(v)) {
        Report(diag::kEigenvariable,
               schema_.name + ": eigenvariable " + v +
                   " is free in the open assumption [" + ToString(leaf.judgment) +
                   "]^" + std::to_string(leaf.label));
        ok = false;
      }
    }
    return ok;
  }

  const Derivation& step_;
  const RuleSchema& schema_;
  std::vector<Diagnostic>* out_;
  const TreePath& path_;
};

void GlobalChecks(const Derivation& d, const RuleSet& rs,
                  std::vector<Diagnostic>& out) {
  std::map<int, Judgment> labels;
  std::map<std::string, size_t> arity;
  std::map<std::string, bool> arity_reported;
  PostOrder(d, [&](const Derivation& node, const TreePath& path) {
    const Judgment& j = node.conclusion();
    if (rs.polarity == Polarity::kUnilateral &&
        j.kind() != Judgment::Kind::kAsserted && j.kind() != Judgment::Kind::kAbsurd)
      out.push_back({path, diag::kPolarity,
                     "signed or forced judgment " + ToString(j) +
                         " in unilateral rule set " + rs.name});
    if (node.is_assumption()) {
      auto [it, fresh] = labels.emplace(node.label(), j);
      if (!fresh && !AlphaEqual(it->second, j))
        out.push_back({path, diag::kLabel,
                       "label " + std::to_string(node.label()) + " names both " +
                           ToString(it->second) + " and " + ToString(j)});
    }
    auto note = [&](const std::string& pred, size_t n) {
      auto [it, fresh] = arity.emplace(pred, n);
      if (!fresh && it->second != n && !arity_reported[pred]) {
        arity_reported[pred] = true;
        out.push_back({path, diag::kArity,
                       "predicate " + pred + " used with " + std::to_string(n) +
                           " argument(s) after " + std::to_string(it->second)});
      }
    };
    if (j.is_signed()) ForEachAtom(j.formula(), note);
    if (j.is_forced() && j.term().kind() == Term::Kind::kIota)
      ForEachAtom(j.term().body(), note);
    if (node.context()) ForEachAtom(*node.context(), note);
  });
}

}  // namespace

bool CheckReport::HasClass(const std::string& cls) const {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [&](const Diagnostic& d) { return d.cls == cls; });
}

std::optional<Bindings> MatchStep(const Derivation& step,
                                  const RuleSchema& schema,
                                  std::vector<Diagnostic>* diagnostics,
                                  const TreePath& path) {
  return StepMatcher(step, schema, diagnostics, path).Run();
}

CheckReport Check(const Derivation& d, const RuleSet& rs) {
  CheckReport report;
  report.conclusion = d.conclusion();
  report.open_assumptions = OpenAssumptions(d);
  GlobalChecks(d, rs, report.diagnostics);
  PostOrder(d, [&](const Derivation& node, const TreePath& path) {
    if (node.is_assumption()) return;
    const RuleSchema* schema = rs.Find(node.rule());
    if (!schema) {
      report.diagnostics.push_back(
          {path, diag::kUnknownRule,
           "rule " + node.rule() + " is not in rule set " + rs.name});
      return;
    }
    MatchStep(node, *schema, &report.diagnostics, path);
  });
  report.ok = report.diagnostics.empty();
  return report;
}

}  // namespace plog
