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

// Random forward construction of checked derivations for property tests.
//
// A pool starts with assumption leaves. Each move picks a schema and pool
// members as premises, solves the schema's metavariables by matching, fills
// in what matching cannot determine (eigenvariable, abstracted occurrences,
// rewrite context, discharges) by random choice, and keeps the step only if
// MatchStep accepts it. Elimination majors are biased towards members
// concluded by a cancelling introduction so that detours are common.

#ifndef PLOG_TESTS_DERIVATION_GEN_H_
#define PLOG_TESTS_DERIVATION_GEN_H_

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "plog/checker.h"
#include "plog/derivation.h"
#include "plog/parser.h"
#include "plog/rulesets.h"

namespace plog::testing {

inline void CollectNames(const Formula& f, VarSet& out);

inline void CollectNames(const Term& t, VarSet& out) {
  if (t.kind() == Term::Kind::kVar) out.insert(t.name());
  if (t.kind() == Term::Kind::kIota) {
    out.insert(t.name());
    CollectNames(t.body(), out);
  }
}

inline void CollectNames(const Formula& f, VarSet& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& a : f.args()) CollectNames(a, out);
      break;
    case Formula::Kind::kEq:
      CollectNames(f.left(), out);
      CollectNames(f.right(), out);
      break;
    case Formula::Kind::kExistsBang:
      CollectNames(f.term(), out);
      break;
    case Formula::Kind::kNot:
      CollectNames(f.body(), out);
      break;
    default:
      out.insert(f.bound());
      CollectNames(f.body(), out);
  }
}

// Replaces the occurrences of `t` selected by `mask` (in traversal order,
// outside description bodies) with the variable `x`, which must be fresh.
class Abstraction {
 public:
  Abstraction(Term t, std::string x, unsigned mask)
      : t_(std::move(t)), x_(std::move(x)), mask_(mask), tvars_(FreeVars(t_)) {}

  Formula Apply(const Formula& f) { return Walk(f, {}); }
  int occurrences() const { return index_; }

 private:
  Term Site(const Term& s, const VarSet& bound) {
    if (!(s == t_)) return s;
    for (const std::string& v : tvars_)
      if (bound.count(v)) return s;
    bool pick = (mask_ >> index_++) & 1u;
    return pick ? Term::Var(x_) : s;
  }

  Formula Walk(const Formula& f, VarSet bound) {
    switch (f.kind()) {
      case Formula::Kind::kAtom: {
        std::vector<Term> args;
        for (const Term& a : f.args()) args.push_back(Site(a, bound));
        return Formula::Atom(f.predicate(), args);
      }
      case Formula::Kind::kEq: {
        Term l = Site(f.left(), bound);
        return Formula::Eq(l, Site(f.right(), bound));
      }
      case Formula::Kind::kExistsBang:
        return Formula::ExistsBang(Site(f.term(), bound));
      case Formula::Kind::kNot:
        return Formula::Not(Walk(f.body(), bound));
      default: {
        bound.insert(f.bound());
        Formula body = Walk(f.body(), bound);
        return f.kind() == Formula::Kind::kForall ? Formula::Forall(f.bound(), body)
                                                  : Formula::Exists(f.bound(), body);
      }
    }
  }

  Term t_;
  std::string x_;
  unsigned mask_;
  VarSet tvars_;
  int index_ = 0;
};

class DerivationGen {
 public:
  DerivationGen(RuleSet rs, const std::vector<std::string>& hypotheses, unsigned seed)
      : rs_(std::move(rs)), rng_(seed) {
    for (const std::string& h : hypotheses) {
      Judgment j = ParseJudgment(h);
      leaves_.push_back(Derivation::Assume(LabelFor(j), j));
      if (j.is_signed())
        for (const Term& t : ClosedSubterms(j.formula())) AddTerm(t);
      if (j.is_forced()) AddTerm(j.term());
    }
  }

  // Runs `moves` construction attempts from a fresh pool and returns every
  // derivation built (leaves excluded), newest last.
  std::vector<Derivation> Grow(int moves, int max_height) {
    pool_ = leaves_;
    std::vector<Derivation> built;
    for (int i = 0; i < moves; ++i) {
      const RuleSchema& s = rs_.schemas[Pick(rs_.schemas.size())];
      std::optional<Derivation> d = TryStep(s, max_height);
      if (!d) continue;
      pool_.push_back(*d);
      built.push_back(*d);
    }
    return built;
  }

  size_t Pick(size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng_); }
  bool Coin(double p) { return std::bernoulli_distribution(p)(rng_); }

 private:
  int LabelFor(const Judgment& j) {
    auto [it, inserted] = labels_.emplace(AlphaKey(j), static_cast<int>(labels_.size()) + 1);
    return it->second;
  }

  void AddTerm(const Term& t) {
    for (const Term& u : terms_)
      if (u == t) return;
    terms_.push_back(t);
  }

  const Derivation& ChoosePremise(const RuleSchema& s, size_t slot) {
    if (s.major && *s.major == slot && !s.cancels.empty() && Coin(0.7)) {
      std::vector<size_t> detours;
      for (size_t i = 0; i < pool_.size(); ++i)
        for (const std::string& c : s.cancels)
          if (pool_[i].rule() == c) detours.push_back(i);
      if (!detours.empty()) return pool_[detours[Pick(detours.size())]];
    }
    if (Coin(0.4)) return pool_[pool_.size() - 1 - Pick(std::min<size_t>(4, pool_.size()))];
    return pool_[Pick(pool_.size())];
  }

  std::optional<Derivation> TryStep(const RuleSchema& s, int max_height) {
    std::vector<Derivation> premises;
    Matcher m;
    for (size_t i = 0; i < s.premises.size(); ++i) {
      const Derivation& p = ChoosePremise(s, i);
      if (p.height() + 1 > max_height) return std::nullopt;
      if (m.Match(s.premises[i].judgment, p.conclusion())) return std::nullopt;
      premises.push_back(p);
    }
    if (m.Resolve(false)) return std::nullopt;

    std::optional<std::string> eigen = s.eigenvariable();
    if (eigen && !m.bindings().terms.count(*eigen)) {
      std::vector<std::string> candidates;
      for (size_t i = 0; i < s.premises.size(); ++i) {
        if (s.premises[i].discharges.empty()) continue;
        for (const OpenAssumption& o : OpenAssumptions(premises[i]))
          for (const std::string& v : FreeVars(o.judgment)) candidates.push_back(v);
      }
      if (candidates.empty() && !premises.empty())
        for (const std::string& v : FreeVars(premises[0].conclusion())) candidates.push_back(v);
      if (candidates.empty()) return std::nullopt;
      m.mutable_bindings().terms.insert_or_assign(*eigen,
                                                  Term::Var(candidates[Pick(candidates.size())]));
      if (m.Resolve(false)) return std::nullopt;
    }

    std::vector<Discharge> discharges;
    for (size_t i = 0; i < s.premises.size(); ++i) {
      std::vector<OpenAssumption> open = OpenAssumptions(premises[i]);
      for (const JudgmentPattern& h : s.premises[i].discharges) {
        std::optional<Judgment> want = Instantiate(h, m.bindings());
        if (!want && !open.empty()) {
          Matcher trial(m.bindings());
          if (!trial.Match(h, open[Pick(open.size())].judgment) && !trial.Resolve(false)) {
            m = trial;
            want = Instantiate(h, m.bindings());
          }
        }
        if (!want) continue;
        for (const OpenAssumption& o : open) {
          if (!AlphaEqual(o.judgment, *want)) continue;
          Discharge d{o.label, i};
          bool seen = false;
          for (const Discharge& e : discharges) seen |= e == d;
          if (!seen) discharges.push_back(d);
        }
      }
    }

    std::optional<Formula> context;
    std::string context_var;
    std::optional<Judgment> conclusion;
    if (s.rewrite) {
      // Premise 0 is the identity t = u, premise 1 the formula rewritten.
      const Judgment& eq = premises.at(0).conclusion();
      const Judgment& src = premises.at(1).conclusion();
      if (!eq.is_signed() || eq.formula().kind() != Formula::Kind::kEq || !src.is_signed())
        return std::nullopt;
      VarSet names;
      CollectNames(src.formula(), names);
      CollectNames(eq.formula(), names);
      context_var = FreshName("x", names);
      Abstraction abs(eq.formula().left(), context_var, static_cast<unsigned>(rng_()));
      context = abs.Apply(src.formula());
      conclusion = Judgment::Asserted(Substitute(*context, context_var, eq.formula().right()));
    } else {
      conclusion = Instantiate(s.conclusion, m.bindings());
    }
    if (!conclusion && s.detour == Detour::kGeneralize) {
      conclusion = Generalize(s, premises.at(0).conclusion(), m.bindings(), *eigen);
    }
    if (!conclusion && s.detour == Detour::kWitness) {
      conclusion = Witness(s, premises.at(0).conclusion(), m.bindings());
    }
    if (!conclusion) {
      std::set<std::string> metas;
      CollectMetas(s.conclusion, metas);
      Bindings b = m.bindings();
      for (const std::string& meta : metas) {
        std::string name = meta.substr(2);
        if (meta[0] == 't' && !b.terms.count(name) && !terms_.empty())
          b.terms.emplace(name, terms_[Pick(terms_.size())]);
        if (meta[0] == 'x' && !b.vars.count(name)) b.vars.emplace(name, name);
      }
      conclusion = Instantiate(s.conclusion, b);
    }
    if (!conclusion) return std::nullopt;

    Derivation step = Derivation::Step(s.name, premises, *conclusion, discharges);
    if (context) step.set_context(*context, context_var);
    if (!MatchStep(step, s)) return std::nullopt;
    if (conclusion->is_signed())
      for (const Term& t : ClosedSubterms(conclusion->formula())) AddTerm(t);
    return step;
  }

  // Quantifies every occurrence of the eigenvariable in the premise formula.
  std::optional<Judgment> Generalize(const RuleSchema& s, const Judgment& premise,
                                     const Bindings& b, const std::string& eigen) {
    if (!premise.is_signed() || !s.conclusion.formula) return std::nullopt;
    auto a = b.terms.find(eigen);
    if (a == b.terms.end()) return std::nullopt;
    VarSet names;
    CollectNames(premise.formula(), names);
    std::string x = FreshName("x", names);
    Formula body = Substitute(premise.formula(), a->second.name(), Term::Var(x));
    return Wrap(s, x, body);
  }

  // Abstracts a random subset of the witness's occurrences.
  std::optional<Judgment> Witness(const RuleSchema& s, const Judgment& premise,
                                  const Bindings& b) {
    if (!premise.is_signed() || !s.conclusion.formula || b.terms.empty()) return std::nullopt;
    auto t = b.terms.find("t");
    if (t == b.terms.end()) return std::nullopt;
    VarSet names;
    CollectNames(premise.formula(), names);
    for (const std::string& v : FreeVars(t->second)) names.insert(v);
    std::string x = FreshName("x", names);
    Abstraction abs(t->second, x, static_cast<unsigned>(rng_()));
    return Wrap(s, x, abs.Apply(premise.formula()));
  }

  std::optional<Judgment> Wrap(const RuleSchema& s, const std::string& x, const Formula& body) {
    FormulaPattern::Kind k = s.conclusion.formula->kind();
    if (k != FormulaPattern::Kind::kForall && k != FormulaPattern::Kind::kExists)
      return std::nullopt;
    Formula q = k == FormulaPattern::Kind::kForall ? Formula::Forall(x, body)
                                                   : Formula::Exists(x, body);
    if (s.conclusion.kind == JudgmentPattern::Kind::kDenied) return Judgment::Denied(q);
    return Judgment::Asserted(q);
  }

  RuleSet rs_;
  std::mt19937 rng_;
  std::map<std::string, int> labels_;
  std::vector<Derivation> leaves_;
  std::vector<Derivation> pool_;
  std::vector<Term> terms_;
};

// Hypothesis pools used by the property suites.
inline const std::vector<std::string>& FreeBaseHypotheses() {
  static const std::vector<std::string> kHyps = {
      "+ F(a)",         "+ E! a",           "+ E! t",       "+ forall x. F(x)",
      "+ exists x. F(x)", "+ forall x. G(x, t)", "+ a = t", "+ G(a, t)",
      "+ exists x. G(x, a)", "+ E! b", "+ forall y. exists x. G(x, y)"};
  return kHyps;
}

inline const std::vector<std::string>& SignedHypotheses() {
  static const std::vector<std::string> kHyps = {
      "+ F(a)",          "- F(a)",          "! a",              "! t",
      "/ u",             "+ forall x. F(x)", "- exists x. F(x)", "+ ~ F(t)",
      "- ~ G(t)",        "+ E! a",          "- E! u",           "+ exists x. F(x)",
      "- forall x. G(x)", "+ G(a)",         "- G(b)",           "! b"};
  return kHyps;
}

}  // namespace plog::testing

#endif  // PLOG_TESTS_DERIVATION_GEN_H_
