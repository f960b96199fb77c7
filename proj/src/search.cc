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

#include "plog/search.h"

#include <algorithm>
#include <atomic>
#include <set>
#include <unordered_set>

#include "plog/checker.h"

namespace plog {

namespace {

std::atomic<long> g_discrepancies{0};

struct Hyp {
  int label;
  Judgment judgment;
};

void AddTerm(const Term& t, std::vector<Term>& out) {
  if (std::none_of(out.begin(), out.end(),
                   [&](const Term& s) { return AlphaEqual(s, t); }))
    out.push_back(t);
}

void AddTerms(const Formula& f, const VarSet& bound, std::vector<Term>& out);

void AddTerms(const Term& t, const VarSet& bound, std::vector<Term>& out) {
  VarSet fv = FreeVars(t);
  if (std::none_of(fv.begin(), fv.end(),
                   [&](const std::string& v) { return bound.count(v) > 0; }))
    AddTerm(t, out);
  if (t.kind() == Term::Kind::kIota) {
    VarSet inner = bound;
    inner.insert(t.name());
    AddTerms(t.body(), inner, out);
  }
}

void AddTerms(const Formula& f, const VarSet& bound, std::vector<Term>& out) {
  switch (f.kind()) {
    case Formula::Kind::kAtom:
      for (const Term& a : f.args()) AddTerms(a, bound, out);
      break;
    case Formula::Kind::kEq:
      AddTerms(f.left(), bound, out);
      AddTerms(f.right(), bound, out);
      break;
    case Formula::Kind::kExistsBang:
      AddTerms(f.term(), bound, out);
      break;
    case Formula::Kind::kNot:
      AddTerms(f.body(), bound, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      VarSet inner = bound;
      inner.insert(f.bound());
      AddTerms(f.body(), inner, out);
      break;
    }
  }
}

void AddTerms(const Judgment& j, std::vector<Term>& out) {
  if (j.is_signed()) AddTerms(j.formula(), {}, out);
  if (j.is_forced()) AddTerms(j.term(), {}, out);
}

void AddFormula(const Formula& f, std::vector<Formula>& out) {
  if (std::none_of(out.begin(), out.end(),
                   [&](const Formula& g) { return AlphaEqual(g, f); }))
    out.push_back(f);
}

// Subformula closure; quantified bodies are instantiated with `terms`.
void Close(const Formula& f, const std::vector<Term>& terms,
           std::vector<Formula>& out) {
  size_t before = out.size();
  AddFormula(f, out);
  if (out.size() == before) return;
  switch (f.kind()) {
    case Formula::Kind::kNot:
      Close(f.body(), terms, out);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      for (const Term& t : terms) Close(Substitute(f.body(), f.bound(), t), terms, out);
      break;
    default:
      break;
  }
}

// Replaces the occurrences of `u` selected by `mask` (in left-to-right
// order) with the variable `x`; `count` receives the number of occurrences.
Formula Abstract(const Formula& f, const Term& u, const std::string& x,
                 unsigned mask, int& count, const VarSet& bound);

Term Abstract(const Term& t, const Term& u, const std::string& x, unsigned mask,
              int& count, const VarSet& bound) {
  if (AlphaEqual(t, u)) {
    VarSet fv = FreeVars(u);
    if (std::none_of(fv.begin(), fv.end(),
                     [&](const std::string& v) { return bound.count(v) > 0; })) {
      int idx = count++;
      return (mask >> idx) & 1u ? Term::Var(x) : t;
    }
  }
  if (t.kind() == Term::Kind::kIota) {
    VarSet inner = bound;
    inner.insert(t.name());
    return Term::Iota(t.name(), Abstract(t.body(), u, x, mask, count, inner));
  }
  return t;
}

Formula Abstract(const Formula& f, const Term& u, const std::string& x,
                 unsigned mask, int& count, const VarSet& bound) {
  switch (f.kind()) {
    case Formula::Kind::kAtom: {
      std::vector<Term> args;
      for (const Term& a : f.args())
        args.push_back(Abstract(a, u, x, mask, count, bound));
      return Formula::Atom(f.predicate(), std::move(args));
    }
    case Formula::Kind::kEq: {
      Term l = Abstract(f.left(), u, x, mask, count, bound);
      return Formula::Eq(l, Abstract(f.right(), u, x, mask, count, bound));
    }
    case Formula::Kind::kExistsBang:
      return Formula::ExistsBang(Abstract(f.term(), u, x, mask, count, bound));
    case Formula::Kind::kNot:
      return Formula::Not(Abstract(f.body(), u, x, mask, count, bound));
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      VarSet inner = bound;
      inner.insert(f.bound());
      Formula body = Abstract(f.body(), u, x, mask, count, inner);
      return f.kind() == Formula::Kind::kForall ? Formula::Forall(f.bound(), body)
                                                : Formula::Exists(f.bound(), body);
    }
  }
  return f;
}

bool KindFits(const JudgmentPattern& p, Judgment::Kind k) {
  switch (p.kind) {
    case JudgmentPattern::Kind::kAsserted: return k == Judgment::Kind::kAsserted;
    case JudgmentPattern::Kind::kDenied: return k == Judgment::Kind::kDenied;
    case JudgmentPattern::Kind::kAcknowledged:
      return k == Judgment::Kind::kAcknowledged;
    case JudgmentPattern::Kind::kRejected: return k == Judgment::Kind::kRejected;
    case JudgmentPattern::Kind::kAbsurd: return k == Judgment::Kind::kAbsurd;
    case JudgmentPattern::Kind::kAny: return p.allowed.count(k) > 0;
  }
  return false;
}

bool Mentions(const JudgmentPattern& p, JudgmentPattern::Kind k) {
  return p.kind == k;
}

class Searcher {
 public:
  Searcher(const RuleSet& rs, const SearchOptions& opts,
           const std::vector<Judgment>& roots)
      : rs_(rs), opts_(opts) {
    for (const Judgment& j : roots) AddTerms(j, base_terms_);
    for (const RuleSchema& s : rs.schemas) {
      if (s.premises.empty()) {
        // Closed axioms such as forall x. x = x join the formula pool.
        std::set<std::string> metas;
        CollectMetas(s.conclusion, metas);
        Bindings b;
        for (const std::string& m : metas)
          if (m.rfind("x:", 0) == 0) b.vars.emplace(m.substr(2), m.substr(2));
        if (auto j = Instantiate(s.conclusion, b))
          if (j->is_signed()) axioms_.push_back(j->formula());
      }
      auto absurd = [](const JudgmentPattern& p) {
        return Mentions(p, JudgmentPattern::Kind::kAbsurd);
      };
      if (absurd(s.conclusion) ||
          std::any_of(s.premises.begin(), s.premises.end(),
                      [&](const PremiseSlot& p) { return absurd(p.judgment); }))
        uses_absurd_ = true;
    }
  }

  std::optional<Derivation> Prove(const Judgment& goal,
                                  const std::vector<Hyp>& hyps,
                                  const std::vector<Term>& eigen, int depth) {
    if (exhausted_) return std::nullopt;
    if (++nodes_ > opts_.max_nodes) {
      exhausted_ = true;
      return std::nullopt;
    }
    for (const Hyp& h : hyps)
      if (AlphaEqual(h.judgment, goal)) return Derivation::Assume(h.label, h.judgment);
    if (depth == 0) return std::nullopt;

    std::set<std::string> hyp_keys;
    for (const Hyp& h : hyps) hyp_keys.insert(AlphaKey(h.judgment));
    std::string loop_key = AlphaKey(goal) + "|";
    for (const std::string& k : hyp_keys) loop_key += k + ";";
    std::string memo_key = loop_key + "|" + std::to_string(depth) + "|";
    for (const Term& e : eigen) memo_key += e.name() + ",";
    if (failed_.count(memo_key)) return std::nullopt;
    if (on_path_.count(loop_key)) {
      ++cuts_;
      return std::nullopt;
    }
    long cuts_before = cuts_;
    on_path_.insert(loop_key);

    std::vector<Term> terms = base_terms_;
    for (const Term& e : eigen) AddTerm(e, terms);
    std::vector<Judgment> pool = Pool(goal, hyps, terms);

    std::optional<Derivation> found;
    for (const RuleSchema& s : rs_.schemas) {
      found = s.rewrite ? TryRewrite(s, goal, hyps, eigen, terms, depth)
                        : TrySchema(s, goal, hyps, eigen, pool, depth);
      if (found || exhausted_) break;
    }
    on_path_.erase(loop_key);
    if (!found && !exhausted_ && cuts_ == cuts_before) failed_.insert(memo_key);
    return found;
  }

  long nodes() const { return nodes_; }
  bool exhausted() const { return exhausted_; }
  int& next_label() { return next_label_; }

 private:
  std::vector<Judgment> Pool(const Judgment& goal, const std::vector<Hyp>& hyps,
                             const std::vector<Term>& terms) {
    std::vector<Formula> formulas;
    auto root = [&](const Judgment& j) {
      if (j.is_signed()) Close(j.formula(), terms, formulas);
    };
    root(goal);
    for (const Hyp& h : hyps) root(h.judgment);
    for (const Formula& a : axioms_) Close(a, terms, formulas);
    bool bilateral = rs_.polarity == Polarity::kBilateral;
    std::vector<Judgment> out;
    for (const Formula& f : formulas) {
      out.push_back(Judgment::Asserted(f));
      if (bilateral) out.push_back(Judgment::Denied(f));
    }
    if (bilateral) {
      for (const Term& t : terms) {
        out.push_back(Judgment::Acknowledged(t));
        out.push_back(Judgment::Rejected(t));
      }
    }
    if (uses_absurd_) out.push_back(Judgment::Absurd());
    return out;
  }

  VarSet UsedVariables(const Judgment& goal, const std::vector<Hyp>& hyps,
                       const std::vector<Term>& terms) {
    VarSet avoid = FreeVars(goal);
    for (const Hyp& h : hyps) {
      VarSet fv = FreeVars(h.judgment);
      avoid.insert(fv.begin(), fv.end());
    }
    for (const Term& t : terms) {
      VarSet fv = FreeVars(t);
      avoid.insert(fv.begin(), fv.end());
    }
    return avoid;
  }

  std::optional<Derivation> TrySchema(const RuleSchema& s, const Judgment& goal,
                                      const std::vector<Hyp>& hyps,
                                      const std::vector<Term>& eigen,
                                      const std::vector<Judgment>& pool,
                                      int depth) {
    Matcher m;
    if (m.Match(s.conclusion, goal) || m.Resolve(false)) return std::nullopt;
    std::vector<Term> inner_eigen = eigen;
    if (auto a = s.eigenvariable()) {
      std::vector<Term> terms = base_terms_;
      for (const Term& e : eigen) AddTerm(e, terms);
      Term fresh = Term::Var(FreshName("a", UsedVariables(goal, hyps, terms)));
      m.mutable_bindings().terms.insert_or_assign(*a, fresh);
      inner_eigen.push_back(fresh);
    }
    return Enumerate(s, 0, m, goal, hyps, inner_eigen, pool, depth);
  }

  std::optional<Derivation> Enumerate(const RuleSchema& s, size_t i, Matcher m,
                                      const Judgment& goal,
                                      const std::vector<Hyp>& hyps,
                                      const std::vector<Term>& eigen,
                                      const std::vector<Judgment>& pool,
                                      int depth) {
    if (exhausted_) return std::nullopt;
    if (i == s.premises.size()) {
      if (m.Resolve(true)) return std::nullopt;
      return Attempt(s, m.bindings(), goal, hyps, eigen, depth);
    }
    const JudgmentPattern& p = s.premises[i].judgment;
    if (auto j = Instantiate(p, m.bindings())) {
      if (m.Match(p, *j) || m.Resolve(false)) return std::nullopt;
      return Enumerate(s, i + 1, std::move(m), goal, hyps, eigen, pool, depth);
    }
    for (const Judgment& j : pool) {
      if (!KindFits(p, j.kind())) continue;
      Matcher trial = m;
      if (trial.Match(p, j) || trial.Resolve(false)) continue;
      if (auto d = Enumerate(s, i + 1, std::move(trial), goal, hyps, eigen, pool,
                             depth))
        return d;
      if (exhausted_) break;
    }
    return std::nullopt;
  }

  std::optional<Derivation> Attempt(const RuleSchema& s, const Bindings& b,
                                    const Judgment& goal,
                                    const std::vector<Hyp>& hyps,
                                    const std::vector<Term>& eigen, int depth) {
    std::vector<Derivation> premises;
    std::vector<Discharge> discharges;
    for (size_t i = 0; i < s.premises.size(); ++i) {
      auto pj = Instantiate(s.premises[i].judgment, b);
      if (!pj) return std::nullopt;
      std::vector<Hyp> inner;
      std::vector<int> fresh;
      for (const JudgmentPattern& hp : s.premises[i].discharges) {
        auto hj = Instantiate(hp, b);
        if (!hj) return std::nullopt;
        fresh.push_back(next_label_++);
        inner.push_back({fresh.back(), *hj});
      }
      inner.insert(inner.end(), hyps.begin(), hyps.end());
      auto d = Prove(*pj, inner, eigen, depth - 1);
      if (!d) return std::nullopt;
      for (int label : fresh) {
        auto open = OpenAssumptions(*d);
        if (std::any_of(open.begin(), open.end(),
                        [&](const OpenAssumption& a) { return a.label == label; }))
          discharges.push_back({label, i});
      }
      premises.push_back(std::move(*d));
    }
    Derivation step = Derivation::Step(s.name, std::move(premises), goal,
                                       std::move(discharges));
    if (!MatchStep(step, s)) return std::nullopt;
    return step;
  }

  std::optional<Derivation> TryRewrite(const RuleSchema& s, const Judgment& goal,
                                       const std::vector<Hyp>& hyps,
                                       const std::vector<Term>& eigen,
                                       const std::vector<Term>& terms,
                                       int depth) {
    if (goal.kind() != Judgment::Kind::kAsserted) return std::nullopt;
    const Formula& g = goal.formula();
    std::vector<Term> targets;
    AddTerms(g, {}, targets);
    VarSet avoid = UsedVariables(goal, hyps, terms);
    std::string x = FreshName("x", avoid);
    for (const Term& u : targets) {
      int n = 0;
      Abstract(g, u, x, 0, n, {});
      if (n == 0) continue;
      unsigned all = n >= 4 ? 0xFu : (1u << n) - 1;
      for (unsigned mask = 1; mask <= all; ++mask) {
        int count = 0;
        Formula ctx = Abstract(g, u, x, mask, count, {});
        for (const Term& t : terms) {
          if (AlphaEqual(t, u)) continue;
          auto eq = Prove(Judgment::Asserted(Formula::Eq(t, u)), hyps, eigen,
                          depth - 1);
          if (!eq) {
            if (exhausted_) return std::nullopt;
            continue;
          }
          auto body = Prove(Judgment::Asserted(Substitute(ctx, x, t)), hyps,
                            eigen, depth - 1);
          if (!body) {
            if (exhausted_) return std::nullopt;
            continue;
          }
          Derivation step =
              Derivation::Step(s.name, {std::move(*eq), std::move(*body)}, goal);
          step.set_context(ctx, x);
          if (MatchStep(step, s)) return step;
        }
      }
    }
    return std::nullopt;
  }

  const RuleSet& rs_;
  SearchOptions opts_;
  std::vector<Term> base_terms_;
  std::vector<Formula> axioms_;
  bool uses_absurd_ = false;
  long nodes_ = 0;
  long cuts_ = 0;
  bool exhausted_ = false;
  int next_label_ = 1;
  std::unordered_set<std::string> failed_;
  std::unordered_set<std::string> on_path_;
};

}  // namespace

SearchResult Search(const Sequent& s, const RuleSet& rs, int depth,
                    const SearchOptions& opts) {
  if (depth < 0 || depth > opts.max_depth)
    throw SearchError(SearchError::Kind::kDepthExceeded,
                      "depth " + std::to_string(depth) + " outside 0.." +
                          std::to_string(opts.max_depth));
  std::vector<Judgment> roots = s.hypotheses;
  roots.push_back(s.goal);
  if (rs.polarity == Polarity::kUnilateral) {
    for (const Judgment& j : roots)
      if (j.kind() != Judgment::Kind::kAsserted)
        throw SearchError(SearchError::Kind::kPolarityMismatch,
                          ToString(j) + " is not an assertion, but " + rs.name +
                              " is unilateral");
  }
  Searcher searcher(rs, opts, roots);
  std::vector<Hyp> hyps;
  for (const Judgment& j : s.hypotheses) hyps.push_back({searcher.next_label()++, j});

  SearchResult result;
  for (int d = 0; d <= depth; ++d) {
    auto found = searcher.Prove(s.goal, hyps, {}, d);
    if (searcher.exhausted()) {
      result.budget_exhausted = true;
      break;
    }
    if (!found) continue;
    if (Check(*found, rs).ok) {
      result.derivation = std::move(found);
    } else {
      ++g_discrepancies;
    }
    break;
  }
  result.nodes = searcher.nodes();
  return result;
}

bool Interderivable(const Judgment& a, const Judgment& b, const RuleSet& rs,
                    int depth, const SearchOptions& opts) {
  return Search({{a}, b}, rs, depth, opts).derivation &&
         Search({{b}, a}, rs, depth, opts).derivation;
}

long SearchDiscrepancies() { return g_discrepancies.load(); }

}  // namespace plog
