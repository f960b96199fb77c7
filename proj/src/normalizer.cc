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

#include "plog/normalizer.h"

#include <algorithm>
#include <optional>
#include <set>

#include "plog/checker.h"

namespace plog {

namespace {

constexpr const char* kAckToExists = "EBangI1";

void RequireChecked(const Derivation& d, const RuleSet& rs) {
  CheckReport r = Check(d, rs);
  if (!r.ok)
    throw PreconditionViolated("derivation does not check: " +
                               r.diagnostics.front().message);
}

bool Cancels(const RuleSchema& elim, const std::string& intro) {
  return std::find(elim.cancels.begin(), elim.cancels.end(), intro) !=
         elim.cancels.end();
}

// Eliminations whose conclusion is copied from their minor premise.
bool PassesMinorThrough(const RuleSchema& s) {
  return s.classification == RuleClass::kElim && s.eigenvariable() &&
         s.premises.size() == 2 && s.conclusion.kind == JudgmentPattern::Kind::kAny;
}

std::set<int> DischargedAt(const Derivation& step, size_t premise) {
  std::set<int> out;
  for (const Discharge& dc : step.discharges())
    if (dc.premise == premise) out.insert(dc.label);
  return out;
}

bool HasLeafWithLabel(const Derivation& d, const std::set<int>& labels) {
  for (const OpenAssumption& a : OpenAssumptions(d))
    if (labels.count(a.label)) return true;
  return false;
}

TreePath Child(TreePath p, size_t i) {
  p.push_back(i);
  return p;
}

// Existence judgments arrive as `! t` in the signed quantifier rules but are
// discharged as `+ E! t`; grafting then needs the acknowledgement rule.
std::string GraftObstacle(const Derivation& intro, const Derivation& elim,
                          const RuleSchema& is, const RuleSchema& es,
                          const RuleSet& rs) {
  const Derivation* existence = nullptr;
  std::set<int> labels;
  const Derivation* scope = nullptr;
  if (is.detour == Detour::kGeneralize && es.existence_premise) {
    existence = &elim.premises()[*es.existence_premise];
    labels = DischargedAt(intro, 0);
    scope = &intro.premises()[0];
  } else if (is.detour == Detour::kWitness && is.existence_premise) {
    existence = &intro.premises()[*is.existence_premise];
    labels = DischargedAt(elim, 1);
    scope = &elim.premises()[1];
  }
  if (!existence || existence->conclusion().kind() != Judgment::Kind::kAcknowledged)
    return "";
  if (!HasLeafWithLabel(*scope, labels) || rs.Find(kAckToExists)) return "";
  return "grafting an acknowledgement onto [+ E! a] needs " +
         std::string(kAckToExists) + ", which is not in " + rs.name;
}

// ---------------------------------------------------------------------------
// Tree surgery.

VarSet AllVariables(const Derivation& d) {
  VarSet out;
  PostOrder(d, [&](const Derivation& node, const TreePath&) {
    VarSet fv = FreeVars(node.conclusion());
    out.insert(fv.begin(), fv.end());
    if (node.context()) {
      VarSet cv = FreeVars(*node.context());
      out.insert(cv.begin(), cv.end());
      out.insert(*node.context_var());
    }
  });
  return out;
}

// Renames eigenvariables of steps inside `d` that are `a` or occur in `t`,
// so that substituting t for a cannot break their side conditions.
void SeparateEigenvariables(Derivation& d, const std::string& a,
                            const VarSet& t_free, VarSet& avoid,
                            const RuleSet& rs) {
  if (d.is_assumption()) return;
  const RuleSchema* s = rs.Find(d.rule());
  if (s && s->eigenvariable()) {
    if (auto b = MatchStep(d, *s)) {
      auto it = b->terms.find(*s->eigenvariable());
      if (it != b->terms.end() && it->second.is_var()) {
        const std::string& old = it->second.name();
        if (old == a || t_free.count(old)) {
          std::string fresh = FreshName(old, avoid);
          avoid.insert(fresh);
          for (const SideCondition& c : s->side_conditions) {
            if (c.kind != SideCondition::Kind::kEigenvariable) continue;
            Derivation& p = d.mutable_premises()[c.premise];
            p = SubstituteTree(p, old, Term::Var(fresh));
          }
        }
      }
    }
  }
  for (Derivation& p : d.mutable_premises())
    SeparateEigenvariables(p, a, t_free, avoid, rs);
}

Derivation Instantiate(Derivation pi, const std::string& a, const Term& t,
                       const Derivation& whole, const RuleSet& rs) {
  VarSet avoid = AllVariables(whole);
  VarSet t_free = FreeVars(t);
  avoid.insert(t_free.begin(), t_free.end());
  SeparateEigenvariables(pi, a, t_free, avoid, rs);
  return SubstituteTree(pi, a, t);
}

// Replaces every leaf labelled in `labels` by `graft(leaf judgment)`.
void Graft(Derivation& d, const std::set<int>& labels,
           const std::function<Derivation(const Judgment&)>& graft) {
  if (d.is_assumption()) {
    if (labels.count(d.label())) d = graft(d.conclusion());
    return;
  }
  for (Derivation& p : d.mutable_premises()) Graft(p, labels, graft);
}

Derivation ExistenceFor(const Derivation& sigma, int& next) {
  Derivation copy = FreshenDischargedLabels(sigma, next);
  if (copy.conclusion().kind() != Judgment::Kind::kAcknowledged) return copy;
  Judgment exists =
      Judgment::Asserted(Formula::ExistsBang(copy.conclusion().term()));
  return Derivation::Step(kAckToExists, {std::move(copy)}, std::move(exists));
}

std::optional<Term> MaybeBoundTerm(const Derivation& step, const RuleSchema& s,
                                   const std::string& meta) {
  auto b = MatchStep(step, s);
  if (!b) throw NotReducible(step.rule() + " step does not match its schema");
  auto it = b->terms.find(meta);
  if (it == b->terms.end()) return std::nullopt;
  return it->second;
}

Term BoundTerm(const Derivation& step, const RuleSchema& s,
               const std::string& meta) {
  std::optional<Term> t = MaybeBoundTerm(step, s, meta);
  if (!t) throw NotReducible(step.rule() + ": no binding for " + meta);
  return *t;
}

// A contraction can drop the last leaf of a label that an enclosing step
// discharges; such entries would dangle.
void PruneDischarges(Derivation& d) {
  if (d.is_assumption()) return;
  for (Derivation& p : d.mutable_premises()) PruneDischarges(p);
  std::vector<Discharge>& ds = d.mutable_discharges();
  ds.erase(std::remove_if(ds.begin(), ds.end(),
                          [&](const Discharge& x) {
                            for (const OpenAssumption& o :
                                 OpenAssumptions(d.premises()[x.premise]))
                              if (o.label == x.label) return false;
                            return true;
                          }),
           ds.end());
}

// ---------------------------------------------------------------------------
// Subformulas.

void CollectTerms(const Term& t, std::vector<Term>& out);

void CollectTerms(const Formula& f, std::vector<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& a : f.args()) CollectTerms(a, out);
      break;
    case Formula::Kind::kEq:
      CollectTerms(f.left(), out);
      CollectTerms(f.right(), out);
      break;
    case Formula::Kind::kExistsBang:
      CollectTerms(f.term(), out);
      break;
    case Formula::Kind::kNot:
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      CollectTerms(f.body(), out);
      break;
  }
}

void CollectTerms(const Term& t, std::vector<Term>& out) {
  if (std::none_of(out.begin(), out.end(),
                   [&](const Term& s) { return AlphaEqual(s, t); }))
    out.push_back(t);
  if (t.kind() == Term::Kind::kIota) CollectTerms(t.body(), out);
}

bool IsSubformula(const Formula& phi, const Formula& psi,
                  const std::vector<Term>& pool) {
  if (AlphaEqual(phi, psi)) return true;
  if (Degree(phi) >= Degree(psi)) return false;
  switch (psi.kind()) {
    case Formula::Kind::kNot:
      return IsSubformula(phi, psi.body(), pool);
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      if (IsSubformula(phi, psi.body(), pool)) return true;
      for (const Term& s : pool)
        if (IsSubformula(phi, Substitute(psi.body(), psi.bound(), s), pool))
          return true;
      return false;
    default:
      return false;
  }
}

}  // namespace

std::string KindName(MaximalOccurrence::Kind kind) {
  switch (kind) {
    case MaximalOccurrence::Kind::kReducible: return "reducible";
    case MaximalOccurrence::Kind::kAdIrreducible: return "ad-irreducible";
    case MaximalOccurrence::Kind::kBlocked: return "blocked";
  }
  return "";
}

std::vector<MaximalOccurrence> FindMaximal(const Derivation& d,
                                           const RuleSet& rs) {
  RequireChecked(d, rs);
  std::vector<MaximalOccurrence> out;
  PostOrder(d, [&](const Derivation& node, const TreePath& path) {
    if (node.is_assumption()) return;
    const RuleSchema* es = rs.Find(node.rule());
    if (es->existence_premise) {
      const Derivation& p = node.premises()[*es->existence_premise];
      const RuleSchema* ps = p.is_assumption() ? nullptr : rs.Find(p.rule());
      if (ps && ps->atomic_denotation)
        out.push_back({Child(path, *es->existence_premise), path, p.conclusion(),
                       MaximalOccurrence::Kind::kAdIrreducible, ""});
    }
    if (!es->major || es->cancels.empty()) return;
    TreePath at = Child(path, *es->major);
    const Derivation& major = node.premises()[*es->major];
    if (major.is_assumption()) return;
    if (Cancels(*es, major.rule())) {
      const RuleSchema* is = rs.Find(major.rule());
      std::string obstacle = GraftObstacle(major, node, *is, *es, rs);
      out.push_back({at, path, major.conclusion(),
                     obstacle.empty() ? MaximalOccurrence::Kind::kReducible
                                      : MaximalOccurrence::Kind::kBlocked,
                     obstacle});
      return;
    }
    // Look through a chain of minor premises for a hidden detour.
    const Derivation* q = &major;
    std::string via;
    while (!q->is_assumption()) {
      const RuleSchema* qs = rs.Find(q->rule());
      if (!PassesMinorThrough(*qs)) break;
      via = q->rule();
      q = &q->premises()[1];
    }
    if (!via.empty() && !q->is_assumption() && Cancels(*es, q->rule()))
      out.push_back({at, path, major.conclusion(),
                     MaximalOccurrence::Kind::kBlocked,
                     q->rule() + " meets " + node.rule() + " across " + via +
                         "; permutative conversions are not implemented"});
  });
  return out;
}

Derivation ReduceStep(const Derivation& d, const MaximalOccurrence& at,
                      const RuleSet& rs) {
  if (at.kind != MaximalOccurrence::Kind::kReducible)
    throw NotReducible("occurrence at " + PathString(at.path) + " is " +
                       KindName(at.kind));
  const Derivation& elim = NodeAt(d, at.elim_path);
  const Derivation& intro = NodeAt(d, at.path);
  const RuleSchema* es = elim.is_assumption() ? nullptr : rs.Find(elim.rule());
  const RuleSchema* is = intro.is_assumption() ? nullptr : rs.Find(intro.rule());
  if (!es || !is || !es->major || Child(at.elim_path, *es->major) != at.path ||
      !Cancels(*es, intro.rule()))
    throw NotReducible("no detour at " + PathString(at.path));

  int next = MaxLabel(d) + 1;
  Derivation replacement = intro;
  switch (is->detour) {
    case Detour::kRoundTrip: {
      replacement = intro.premises()[0];
      if (!AlphaEqual(replacement.conclusion(), elim.conclusion()))
        throw NotReducible(intro.rule() + "/" + elim.rule() +
                           " does not return to its premise");
      break;
    }
    case Detour::kGeneralize: {
      // A vacuous quantifier leaves the eigenvariable undetermined; then
      // nothing in the subproof mentions it.
      std::optional<Term> a = MaybeBoundTerm(intro, *is, *is->eigenvariable());
      Term t = BoundTerm(elim, *es, "t");
      const Derivation& sigma = elim.premises()[*es->existence_premise];
      std::set<int> labels = DischargedAt(intro, 0);
      replacement = FreshenDischargedLabels(intro.premises()[0], next);
      if (a) replacement = Instantiate(replacement, a->name(), t, d, rs);
      Graft(replacement, labels,
            [&](const Judgment&) { return ExistenceFor(sigma, next); });
      break;
    }
    case Detour::kWitness: {
      Term t = BoundTerm(intro, *is, "t");
      std::optional<Term> a = MaybeBoundTerm(elim, *es, *es->eigenvariable());
      const Derivation& instance = intro.premises()[0];
      const Derivation& sigma = intro.premises()[*is->existence_premise];
      std::set<int> labels = DischargedAt(elim, 1);
      replacement = FreshenDischargedLabels(elim.premises()[1], next);
      if (a) replacement = Instantiate(replacement, a->name(), t, d, rs);
      Graft(replacement, labels, [&](const Judgment& leaf) {
        if (AlphaEqual(leaf, instance.conclusion()))
          return FreshenDischargedLabels(instance, next);
        return ExistenceFor(sigma, next);
      });
      break;
    }
    case Detour::kNone:
      throw NotReducible(intro.rule() + " has no detour reduction");
  }
  Derivation out = d;
  NodeAt(out, at.elim_path) = std::move(replacement);
  PruneDischarges(out);
  return out;
}

NormalizeResult Normalize(const Derivation& d, const RuleSet& rs,
                          int max_steps) {
  NormalizeResult result{d, {}, 0};
  for (;;) {
    std::vector<MaximalOccurrence> maxima = FindMaximal(result.derivation, rs);
    auto redex = std::find_if(maxima.begin(), maxima.end(),
                              [](const MaximalOccurrence& m) {
                                return m.kind == MaximalOccurrence::Kind::kReducible;
                              });
    if (redex == maxima.end()) {
      result.surviving = std::move(maxima);
      return result;
    }
    if (result.steps == max_steps)
      throw std::runtime_error("normalization exceeded " +
                               std::to_string(max_steps) + " steps");
    result.derivation = ReduceStep(result.derivation, *redex, rs);
    ++result.steps;
  }
}

SubformulaResult SubformulaCheck(const Derivation& d, const RuleSet& rs,
                                 SubformulaMode mode) {
  RequireChecked(d, rs);
  std::vector<Formula> roots;
  if (d.conclusion().is_signed()) roots.push_back(d.conclusion().formula());
  for (const OpenAssumption& a : OpenAssumptions(d))
    if (a.judgment.is_signed()) roots.push_back(a.judgment.formula());

  std::vector<Term> pool;
  PostOrder(d, [&](const Derivation& node, const TreePath&) {
    const Judgment& j = node.conclusion();
    if (j.is_signed()) CollectTerms(j.formula(), pool);
    if (j.is_forced()) CollectTerms(j.term(), pool);
  });

  SubformulaResult result;
  PostOrder(d, [&](const Derivation& node, const TreePath& path) {
    const Judgment& j = node.conclusion();
    if (!j.is_signed()) return;
    const Formula& f = j.formula();
    if (mode == SubformulaMode::kRestricted &&
        f.kind() == Formula::Kind::kExistsBang) {
      const RuleSchema* s = node.is_assumption() ? nullptr : rs.Find(node.rule());
      if (s && s->atomic_denotation) return;
      if (!path.empty()) {
        TreePath up(path.begin(), path.end() - 1);
        const RuleSchema* ps = rs.Find(NodeAt(d, up).rule());
        if (ps && ps->existence_premise == path.back()) return;
      }
      if (node.is_assumption()) {
        // Existence hypotheses discharged by a quantifier rule.
        for (size_t depth = path.size(); depth-- > 0;) {
          TreePath up(path.begin(), path.begin() + depth);
          const Derivation& anc = NodeAt(d, up);
          if (!DischargedAt(anc, path[depth]).count(node.label())) continue;
          const RuleSchema* as = rs.Find(anc.rule());
          if (as && as->eigenvariable()) return;
          break;
        }
      }
    }
    if (std::any_of(roots.begin(), roots.end(), [&](const Formula& r) {
          return IsSubformula(f, r, pool);
        }))
      return;
    result.holds = false;
    result.witnesses.push_back({path, f});
  });
  return result;
}

}  // namespace plog
