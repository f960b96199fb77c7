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

#include "plog/pattern.h"

namespace plog {

FormulaPattern FormulaPattern::Meta(std::string name) {
  FormulaPattern p;
  p.kind_ = Kind::kMeta;
  p.name_ = std::move(name);
  return p;
}

FormulaPattern FormulaPattern::Atomic(std::string name) {
  FormulaPattern p;
  p.kind_ = Kind::kAtomic;
  p.name_ = std::move(name);
  return p;
}

FormulaPattern FormulaPattern::Instance(std::string body, std::string bound,
                                        TermPattern term) {
  FormulaPattern p;
  p.kind_ = Kind::kInstance;
  p.name_ = std::move(body);
  p.bound_ = std::move(bound);
  p.terms_ = {std::move(term)};
  return p;
}

FormulaPattern FormulaPattern::Forall(std::string bound, FormulaPattern body) {
  FormulaPattern p;
  p.kind_ = Kind::kForall;
  p.bound_ = std::move(bound);
  p.child_ = std::make_shared<const FormulaPattern>(std::move(body));
  return p;
}

FormulaPattern FormulaPattern::Exists(std::string bound, FormulaPattern body) {
  FormulaPattern p = Forall(std::move(bound), std::move(body));
  p.kind_ = Kind::kExists;
  return p;
}

FormulaPattern FormulaPattern::Not(FormulaPattern body) {
  FormulaPattern p;
  p.kind_ = Kind::kNot;
  p.child_ = std::make_shared<const FormulaPattern>(std::move(body));
  return p;
}

FormulaPattern FormulaPattern::Eq(TermPattern left, TermPattern right) {
  FormulaPattern p;
  p.kind_ = Kind::kEq;
  p.terms_ = {std::move(left), std::move(right)};
  return p;
}

FormulaPattern FormulaPattern::ExistsBang(TermPattern arg) {
  FormulaPattern p;
  p.kind_ = Kind::kExistsBang;
  p.terms_ = {std::move(arg)};
  return p;
}

// ---------------------------------------------------------------------------
// Instantiation.

std::optional<Term> Instantiate(const TermPattern& p, const Bindings& b) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta: {
      auto it = b.terms.find(p.name);
      if (it == b.terms.end()) return std::nullopt;
      return it->second;
    }
    case TermPattern::Kind::kBoundVar: {
      auto it = b.vars.find(p.name);
      if (it == b.vars.end()) return std::nullopt;
      return Term::Var(it->second);
    }
    case TermPattern::Kind::kIota: {
      auto x = b.vars.find(p.name);
      auto body = b.formulas.find(p.formula);
      if (x == b.vars.end() || body == b.formulas.end()) return std::nullopt;
      return Term::Iota(x->second, body->second);
    }
  }
  return std::nullopt;
}

std::optional<Formula> Instantiate(const FormulaPattern& p, const Bindings& b) {
  using K = FormulaPattern::Kind;
  switch (p.kind()) {
    case K::kMeta:
    case K::kAtomic: {
      auto it = b.formulas.find(p.name());
      if (it == b.formulas.end()) return std::nullopt;
      return it->second;
    }
    case K::kInstance: {
      auto body = b.formulas.find(p.name());
      auto x = b.vars.find(p.bound());
      auto t = Instantiate(p.terms()[0], b);
      if (body == b.formulas.end() || x == b.vars.end()) return std::nullopt;
      if (!t) {
        // An unconstrained witness is harmless when it has nowhere to go.
        if (OccursFree(x->second, body->second)) return std::nullopt;
        return body->second;
      }
      return Substitute(body->second, x->second, *t);
    }
    case K::kForall:
    case K::kExists: {
      auto x = b.vars.find(p.bound());
      auto body = Instantiate(p.child(), b);
      if (x == b.vars.end() || !body) return std::nullopt;
      return p.kind() == K::kForall ? Formula::Forall(x->second, *body)
                                    : Formula::Exists(x->second, *body);
    }
    case K::kNot: {
      auto body = Instantiate(p.child(), b);
      if (!body) return std::nullopt;
      return Formula::Not(*body);
    }
    case K::kEq: {
      auto l = Instantiate(p.terms()[0], b);
      auto r = Instantiate(p.terms()[1], b);
      if (!l || !r) return std::nullopt;
      return Formula::Eq(*l, *r);
    }
    case K::kExistsBang: {
      auto t = Instantiate(p.terms()[0], b);
      if (!t) return std::nullopt;
      return Formula::ExistsBang(*t);
    }
  }
  return std::nullopt;
}

std::optional<Judgment> Instantiate(const JudgmentPattern& p, const Bindings& b) {
  using K = JudgmentPattern::Kind;
  switch (p.kind) {
    case K::kAsserted:
    case K::kDenied: {
      auto f = Instantiate(*p.formula, b);
      if (!f) return std::nullopt;
      return p.kind == K::kAsserted ? Judgment::Asserted(*f)
                                    : Judgment::Denied(*f);
    }
    case K::kAcknowledged:
    case K::kRejected: {
      auto t = Instantiate(*p.term, b);
      if (!t) return std::nullopt;
      return p.kind == K::kAcknowledged ? Judgment::Acknowledged(*t)
                                        : Judgment::Rejected(*t);
    }
    case K::kAbsurd:
      return Judgment::Absurd();
    case K::kAny: {
      auto it = b.judgments.find(p.name);
      if (it == b.judgments.end()) return std::nullopt;
      return it->second;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Matching.

namespace {

Mismatch Expected(const std::string& want, const std::string& got) {
  return {diag::kMismatch, "expected " + want + ", found " + got};
}

const char* KindName(Judgment::Kind k) {
  switch (k) {
    case Judgment::Kind::kAsserted: return "an assertion";
    case Judgment::Kind::kDenied: return "a denial";
    case Judgment::Kind::kAcknowledged: return "an acknowledgement";
    case Judgment::Kind::kRejected: return "a rejection";
    case Judgment::Kind::kAbsurd: return "absurdity";
  }
  return "?";
}

}  // namespace

std::optional<Mismatch> Matcher::Match(const TermPattern& p, const Term& t) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta: {
      auto it = bindings_.terms.find(p.name);
      if (it == bindings_.terms.end()) {
        bindings_.terms.emplace(p.name, t);
        return std::nullopt;
      }
      if (AlphaEqual(it->second, t)) return std::nullopt;
      return Mismatch{diag::kMismatch, "term " + ToString(t) + " differs from " +
                                           ToString(it->second) + " (" + p.name +
                                           ")"};
    }
    case TermPattern::Kind::kBoundVar: {
      auto it = bindings_.vars.find(p.name);
      if (t.kind() != Term::Kind::kVar)
        return Expected("bound variable", ToString(t));
      if (it == bindings_.vars.end()) {
        bindings_.vars.emplace(p.name, t.name());
        return std::nullopt;
      }
      if (it->second == t.name()) return std::nullopt;
      return Expected("variable " + it->second, ToString(t));
    }
    case TermPattern::Kind::kIota: {
      if (t.kind() != Term::Kind::kIota)
        return Expected("a definite description", ToString(t));
      if (auto whole = Instantiate(p, bindings_)) {
        if (AlphaEqual(*whole, t)) return std::nullopt;
        return Expected(ToString(*whole), ToString(t));
      }
      auto x = bindings_.vars.find(p.name);
      if (x == bindings_.vars.end()) {
        if (bindings_.formulas.count(p.formula))
          return Mismatch{diag::kMismatch, "cannot align iota binder"};
        bindings_.vars.emplace(p.name, t.name());
        bindings_.formulas.emplace(p.formula, t.body());
        return std::nullopt;
      }
      if (x->second != t.name() && OccursFree(x->second, t.body()))
        return Mismatch{diag::kMismatch, "cannot align iota binder"};
      bindings_.formulas.emplace(p.formula,
                                 Substitute(t.body(), t.name(), Term::Var(x->second)));
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::optional<Mismatch> Matcher::MatchBinder(const std::string& xm,
                                             const FormulaPattern& body,
                                             const Formula& f) {
  auto x = bindings_.vars.find(xm);
  if (x == bindings_.vars.end()) {
    bindings_.vars.emplace(xm, f.bound());
    return Match(body, f.body());
  }
  if (x->second == f.bound()) return Match(body, f.body());
  if (auto inst = Instantiate(body, bindings_)) {
    Formula whole = f.kind() == Formula::Kind::kForall
                        ? Formula::Forall(x->second, *inst)
                        : Formula::Exists(x->second, *inst);
    if (AlphaEqual(whole, f)) return std::nullopt;
    return Expected(ToString(whole), ToString(f));
  }
  if (OccursFree(x->second, f.body()))
    return Mismatch{diag::kMismatch, "cannot rename binder " + f.bound() +
                                         " to " + x->second};
  return Match(body, Substitute(f.body(), f.bound(), Term::Var(x->second)));
}

std::optional<Mismatch> Matcher::Match(const FormulaPattern& p, const Formula& f) {
  using K = FormulaPattern::Kind;
  switch (p.kind()) {
    case K::kAtomic:
      if (!IsAtomic(f))
        return Mismatch{diag::kAtomicity,
                        ToString(f) + " is not an atomic formula"};
      [[fallthrough]];
    case K::kMeta: {
      auto it = bindings_.formulas.find(p.name());
      if (it == bindings_.formulas.end()) {
        bindings_.formulas.emplace(p.name(), f);
        return std::nullopt;
      }
      if (AlphaEqual(it->second, f)) return std::nullopt;
      return Expected(ToString(it->second), ToString(f));
    }
    case K::kInstance:
      pending_.push_back({p, f});
      return std::nullopt;
    case K::kForall:
      if (f.kind() != Formula::Kind::kForall)
        return Expected("a universal formula", ToString(f));
      return MatchBinder(p.bound(), p.child(), f);
    case K::kExists:
      if (f.kind() != Formula::Kind::kExists)
        return Expected("an existential formula", ToString(f));
      return MatchBinder(p.bound(), p.child(), f);
    case K::kNot:
      if (f.kind() != Formula::Kind::kNot)
        return Expected("a negation", ToString(f));
      return Match(p.child(), f.body());
    case K::kEq:
      if (f.kind() != Formula::Kind::kEq)
        return Expected("an identity", ToString(f));
      if (auto m = Match(p.terms()[0], f.left())) return m;
      return Match(p.terms()[1], f.right());
    case K::kExistsBang:
      if (f.kind() != Formula::Kind::kExistsBang)
        return Expected("an existence claim", ToString(f));
      return Match(p.terms()[0], f.term());
  }
  return std::nullopt;
}

std::optional<Mismatch> Matcher::Match(const JudgmentPattern& p,
                                       const Judgment& j) {
  using K = JudgmentPattern::Kind;
  if (p.kind == K::kAny) {
    if (!p.allowed.count(j.kind()))
      return Mismatch{diag::kAlphaRange,
                      std::string(KindName(j.kind())) + " (" + ToString(j) +
                          ") is outside the range of " + p.name};
    auto it = bindings_.judgments.find(p.name);
    if (it == bindings_.judgments.end()) {
      bindings_.judgments.emplace(p.name, j);
      return std::nullopt;
    }
    if (AlphaEqual(it->second, j)) return std::nullopt;
    return Expected(ToString(it->second), ToString(j));
  }
  static const Judgment::Kind kKinds[] = {
      Judgment::Kind::kAsserted, Judgment::Kind::kDenied,
      Judgment::Kind::kAcknowledged, Judgment::Kind::kRejected,
      Judgment::Kind::kAbsurd};
  Judgment::Kind want = kKinds[static_cast<int>(p.kind)];
  if (want != j.kind())
    return Expected(std::string(KindName(want)) + " " + plog::ToString(p),
                    ToString(j));
  if (j.is_signed()) return Match(*p.formula, j.formula());
  if (j.is_forced()) return Match(*p.term, j.term());
  return std::nullopt;
}

std::optional<Mismatch> Matcher::Resolve(bool final) {
  bool progress = true;
  while (progress && !pending_.empty()) {
    progress = false;
    for (size_t i = 0; i < pending_.size(); ++i) {
      const Pending& item = pending_[i];
      const FormulaPattern& p = item.pattern;
      auto body = bindings_.formulas.find(p.name());
      auto x = bindings_.vars.find(p.bound());
      if (body == bindings_.formulas.end() || x == bindings_.vars.end())
        continue;
      const TermPattern& tp = p.terms()[0];
      if (auto t = Instantiate(tp, bindings_)) {
        Formula expect = Substitute(body->second, x->second, *t);
        if (!AlphaEqual(expect, item.target))
          return Expected(ToString(expect), ToString(item.target));
      } else if (tp.kind == TermPattern::Kind::kMeta) {
        auto solved = SolveInstance(body->second, x->second, item.target);
        if (!solved)
          return Mismatch{diag::kMismatch,
                          ToString(item.target) + " is not an instance of " +
                              ToString(body->second) + " at " + x->second};
        if (*solved) bindings_.terms.emplace(tp.name, **solved);
      } else {
        continue;
      }
      pending_.erase(pending_.begin() + static_cast<long>(i));
      progress = true;
      break;
    }
  }
  if (final && !pending_.empty())
    return Mismatch{diag::kContext,
                    "cannot determine which formula " +
                        ToString(pending_.front().pattern) + " instantiates in " +
                        ToString(pending_.front().target)};
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Metavariables and printing.

void CollectMetas(const TermPattern& p, std::set<std::string>& out) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta: out.insert("t:" + p.name); break;
    case TermPattern::Kind::kBoundVar: out.insert("x:" + p.name); break;
    case TermPattern::Kind::kIota:
      out.insert("x:" + p.name);
      out.insert("f:" + p.formula);
      break;
  }
}

void CollectMetas(const FormulaPattern& p, std::set<std::string>& out) {
  using K = FormulaPattern::Kind;
  switch (p.kind()) {
    case K::kMeta:
    case K::kAtomic:
      out.insert("f:" + p.name());
      break;
    case K::kInstance:
      out.insert("f:" + p.name());
      out.insert("x:" + p.bound());
      CollectMetas(p.terms()[0], out);
      break;
    case K::kForall:
    case K::kExists:
      out.insert("x:" + p.bound());
      CollectMetas(p.child(), out);
      break;
    case K::kNot:
      CollectMetas(p.child(), out);
      break;
    case K::kEq:
    case K::kExistsBang:
      for (const TermPattern& t : p.terms()) CollectMetas(t, out);
      break;
  }
}

void CollectMetas(const JudgmentPattern& p, std::set<std::string>& out) {
  if (p.formula) CollectMetas(*p.formula, out);
  if (p.term) CollectMetas(*p.term, out);
  if (p.kind == JudgmentPattern::Kind::kAny) out.insert("j:" + p.name);
}

std::string ToString(const TermPattern& p) {
  switch (p.kind) {
    case TermPattern::Kind::kMeta:
    case TermPattern::Kind::kBoundVar:
      return p.name;
    case TermPattern::Kind::kIota:
      return "(iota " + p.name + ". " + p.formula + ")";
  }
  return "";
}

std::string ToString(const FormulaPattern& p) {
  using K = FormulaPattern::Kind;
  switch (p.kind()) {
    case K::kMeta:
    case K::kAtomic:
      return p.name();
    case K::kInstance:
      return p.name() + "[" + ToString(p.terms()[0]) + "/" + p.bound() + "]";
    case K::kForall:
      return "forall " + p.bound() + ". " + ToString(p.child());
    case K::kExists:
      return "exists " + p.bound() + ". " + ToString(p.child());
    case K::kNot:
      return "~ " + ToString(p.child());
    case K::kEq:
      return ToString(p.terms()[0]) + " = " + ToString(p.terms()[1]);
    case K::kExistsBang:
      return "E! " + ToString(p.terms()[0]);
  }
  return "";
}

std::string ToString(const JudgmentPattern& p) {
  using K = JudgmentPattern::Kind;
  switch (p.kind) {
    case K::kAsserted: return "+ " + ToString(*p.formula);
    case K::kDenied: return "- " + ToString(*p.formula);
    case K::kAcknowledged: return "! " + ToString(*p.term);
    case K::kRejected: return "/ " + ToString(*p.term);
    case K::kAbsurd: return "#";
    case K::kAny: return p.name;
  }
  return "";
}

}  // namespace plog
